#include "polaris/frobenius.hpp"

#include <algorithm>
#include <thread>

#include "polaris/errors.hpp"

namespace polaris {

Permutation cycle_type_representative(const Partition& rho) {
  std::vector<int> images(rho.size());
  int start = 0;
  for (int part : rho.parts()) {
    for (int k = 0; k < part; ++k) images[start + k] = start + (k + 1) % part;
    start += part;
  }
  return Permutation(std::move(images));
}

namespace {

Rational trace(const EchelonBasis& basis, const Permutation& sigma) {
  Rational total = 0;
  const auto vectors = basis.vectors();
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    auto r = basis.reduce(permute(vectors[i], sigma));
    if (!r.residual.is_zero()) {
      throw ConsistencyError("component is not stable under the symmetric group");
    }
    total += r.coordinates[i];
  }
  return total;
}

}  // namespace

ClassFunction component_character(const GradedSubspace& v, const MultiDegree& d) {
  const int n = v.shape().cols();
  ClassFunction chi{n, {}};
  auto it = v.components().find(d);
  for (const auto& rho : partitions_of(n)) {
    if (it == v.components().end()) {
      chi.values[rho] = 0;
      continue;
    }
    const Permutation sigma = cycle_type_representative(rho);
    chi.values[rho] = trace(it->second, sigma);
#ifndef NDEBUG
    if (n <= 4) {
      std::vector<int> shift(n);
      for (int j = 0; j < n; ++j) shift[j] = (j + 1) % n;
      Permutation tau(shift);
      if (trace(it->second, tau * sigma * tau.inverse()) != chi.values[rho]) {
        throw ConsistencyError("character differs on conjugate permutations");
      }
    }
#endif
  }
  return chi;
}

long FrobeniusSeries::multiplicity(const Partition& lambda, const Partition& mu) const {
  auto it = entries.find({lambda, mu});
  return it == entries.end() ? 0 : it->second;
}

FrobeniusSeries frobenius_series(const GradedSubspace& m, const FrobeniusOptions& options) {
  const int n = m.shape().cols();
  const int ell = m.shape().rows();
  FrobeniusSeries fs;
  fs.n = n;
  fs.ell = ell;
  fs.complete = ell >= m.max_total_degree();

  std::vector<MultiDegree> degrees;
  for (const auto& [d, basis] : m.components()) degrees.push_back(d);
  std::vector<ClassFunction> characters(degrees.size());
  {
    const unsigned workers = std::max(1u, std::min<unsigned>(options.jobs, degrees.size()));
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned id) {
      try {
        for (std::size_t k = id; k < degrees.size(); k += workers) {
          characters[k] = component_character(m, degrees[k]);
        }
      } catch (...) {
        errors[id] = std::current_exception();
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> threads;
      for (unsigned t = 0; t < workers; ++t) threads.emplace_back(work, t);
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  const auto classes = partitions_of(n);
  const Rational order(static_cast<unsigned long>(factorial(n)));
  for (const auto& lambda : partitions_of(n)) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
      Rational c = 0;
      for (const auto& rho : classes) {
        c += Rational(static_cast<unsigned long>(class_size(rho))) *
             characters[k].values.at(rho) * irreducible_character(lambda, rho);
      }
      c /= order;
      if (!is_integer(c) || c < 0) {
        throw ConsistencyError("multiplicity of " + to_string(lambda) + " in degree " +
                               to_string(degrees[k]) + " is " + to_string(c));
      }
      if (c != 0) terms.push_back({ExponentMatrix(q_shape(ell), degrees[k].values()), c});
    }
    std::map<Partition, long> decomposition;
    try {
      decomposition = decompose_schur(QPolynomial(q_shape(ell), std::move(terms)));
    } catch (const DomainError& e) {
      throw ConsistencyError("q-coefficient of " + to_string(lambda) +
                             " is not symmetric: " + e.what());
    }
    for (const auto& [mu, b] : decomposition) {
      if (b < 0) {
        throw ConsistencyError("negative multiplicity at " + to_string(lambda) + ", " +
                               to_string(mu));
      }
      fs.entries[{lambda, mu}] = b;
    }
  }

  if (!(hilbert_from_frobenius(fs, ell) == hilbert_polynomial(m))) {
    throw ConsistencyError("Frobenius series does not reconcile with the Hilbert series");
  }
  return fs;
}

QPolynomial hilbert_from_frobenius(const FrobeniusSeries& fs, int ell) {
  QPolynomial out(q_shape(ell));
  for (const auto& [key, b] : fs.entries) {
    const auto& [lambda, mu] = key;
    Rational weight(b * static_cast<long>(hook_dimension(lambda)));
    out = out + scale(schur_polynomial(mu, ell), weight);
  }
  return out;
}

FrobeniusSeries truncate(const FrobeniusSeries& fs, int ell) {
  FrobeniusSeries out = fs;
  out.ell = ell;
  std::erase_if(out.entries, [&](const auto& e) { return e.first.second.length() > ell; });
  return out;
}

SymFunc q_coefficient(const FrobeniusSeries& fs, const Partition& lambda) {
  SymFunc out(Basis::Schur);
  for (const auto& [key, b] : fs.entries) {
    if (key.first == lambda) out.add(key.second, b);
  }
  return out;
}

BiSymFunc to_bisym(const FrobeniusSeries& fs) {
  BiSymFunc out;
  for (const auto& [key, b] : fs.entries) out.terms[key] = b;
  return out;
}

BiSymFunc change_basis(const BiSymFunc& f, Basis q_basis, Basis w_basis) {
  // w-side first, one q-partition at a time, then the q-side per
  // w-partition.
  std::map<Partition, SymFunc> by_mu;
  for (const auto& [key, c] : f.terms) {
    by_mu.try_emplace(key.second, f.w_basis).first->second.add(key.first, c);
  }
  std::map<Partition, SymFunc> by_lambda;
  for (const auto& [mu, w] : by_mu) {
    const SymFunc converted = change_basis(w, w_basis);
    for (const auto& [lambda, c] : converted.terms()) {
      by_lambda.try_emplace(lambda, f.q_basis).first->second.add(mu, c);
    }
  }
  BiSymFunc out{q_basis, w_basis, {}};
  for (const auto& [lambda, q] : by_lambda) {
    const SymFunc converted = change_basis(q, q_basis);
    for (const auto& [mu, c] : converted.terms()) out.terms[{lambda, mu}] = c;
  }
  return out;
}

namespace {

// Groups by w-partition, largest first, then hands each group's q-side
// sum and w-partition to `term`, joining the pieces with + and -.
template <typename TermFormat>
std::string render_grouped(const BiSymFunc& f, TermFormat term) {
  std::map<Partition, SymFunc, std::greater<>> groups;
  for (const auto& [key, c] : f.terms) {
    groups.try_emplace(key.first, f.q_basis).first->second.add(key.second, c);
  }
  std::string out;
  for (const auto& [lambda, q] : groups) {
    std::string piece = term(q, lambda);
    if (out.empty()) {
      out = piece;
    } else if (piece.starts_with("-")) {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out.empty() ? "0" : out;
}

bool is_single(const SymFunc& q) { return q.terms().size() == 1; }

std::string latex_partition(const Partition& p) {
  bool small = std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x < 10; });
  std::string out;
  for (int i = 0; i < p.length(); ++i) {
    if (i && !small) out += ",";
    out += std::to_string(p[i]);
  }
  return out;
}

std::string latex_q(const SymFunc& q) {
  std::vector<std::pair<Partition, Rational>> items(q.terms().begin(), q.terms().end());
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return DisplayOrder{}(a.first, b.first); });
  std::string out;
  for (const auto& [mu, c] : items) {
    Rational mag = abs(c);
    if (!out.empty() || c < 0) out += c < 0 ? "-" : "+";
    if (mu.empty()) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag);
    out += std::string(1, basis_letter(q.basis())) + "_{" + latex_partition(mu) + "}";
  }
  return out;
}

// s_{n-2,1,1}: the first part written relative to n.
std::string latex_w(Basis basis, const Partition& lambda) {
  std::string out = std::string(1, basis_letter(basis)) + "_{n";
  const int rest = lambda.size() - lambda[0];
  if (rest) out += "-" + std::to_string(rest);
  for (int i = 1; i < lambda.length(); ++i) out += "," + std::to_string(lambda[i]);
  return out + "}(\\mathbf{w})";
}

}  // namespace

std::string render(const BiSymFunc& f) {
  return render_grouped(f, [&](const SymFunc& q, const Partition& lambda) {
    std::string w = std::string(1, basis_letter(f.w_basis)) + to_string(lambda) + "(w)";
    if (is_single(q)) {
      const auto& [mu, c] = *q.terms().begin();
      if (mu.empty()) {
        if (c == 1) return w;
        if (c == -1) return "-" + w;
        return to_string(c) + " " + w;
      }
      return to_string(q, "q") + " " + w;
    }
    return "(" + to_string(q, "q") + ") " + w;
  });
}

std::string render(const FrobeniusSeries& fs, RenderStyle style) {
  BiSymFunc f = to_bisym(fs);
  if (style == RenderStyle::HH) f = change_basis(f, Basis::Homogeneous, Basis::Homogeneous);
  return render(f);
}

std::string render_latex_row(const FrobeniusSeries& fs, const std::string& label,
                             RenderStyle style) {
  BiSymFunc f = to_bisym(fs);
  if (style == RenderStyle::HH) f = change_basis(f, Basis::Homogeneous, Basis::Homogeneous);
  std::string body = render_grouped(f, [&](const SymFunc& q, const Partition& lambda) {
    std::string w = latex_w(f.w_basis, lambda);
    if (is_single(q)) {
      const auto& [mu, c] = *q.terms().begin();
      if (mu.empty() && (c == 1 || c == -1)) return (c < 0 ? "-" : "") + w;
      return latex_q(q) + w;
    }
    return "(" + latex_q(q) + ")" + w;
  });
  // render_grouped joins with spaced signs; LaTeX reads better without.
  std::string compact;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == ' ' && i + 2 < body.size() && (body[i + 1] == '+' || body[i + 1] == '-') &&
        body[i + 2] == ' ') {
      compact += body[i + 1];
      i += 2;
    } else {
      compact += body[i];
    }
  }
  return "$" + compact + "$ & " + label + " \\\\ \\hline";
}

}  // namespace polaris
