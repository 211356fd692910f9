#include "polaris/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>

#include "polaris/errors.hpp"
#include "polaris/linalg.hpp"
#include "polaris/operators.hpp"

namespace polaris {

namespace {

// Read-mostly memo table. Values are computed outside the lock; a race only
// computes the same value twice.
template <typename Key, typename Value>
class Memo {
 public:
  template <typename Compute>
  Value get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mutex_);
    return table_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace

char basis_letter(Basis b) {
  switch (b) {
    case Basis::Monomial: return 'm';
    case Basis::Elementary: return 'e';
    case Basis::Homogeneous: return 'h';
    case Basis::Power: return 'p';
    case Basis::Schur: return 's';
  }
  return '?';
}

SymFunc::SymFunc(Basis basis, std::map<Partition, Rational> terms)
    : basis_(basis) {
  for (auto& [lambda, c] : terms) add(lambda, c);
}

SymFunc SymFunc::single(Basis basis, const Partition& lambda, const Rational& coef) {
  SymFunc f(basis);
  f.add(lambda, coef);
  return f;
}

Rational SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add(const Partition& lambda, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
  if (a.basis() != b.basis()) throw DomainError("adding symmetric functions in different bases");
  SymFunc out = a;
  for (const auto& [lambda, c] : b.terms()) out.add(lambda, c);
  return out;
}

SymFunc operator*(const Rational& c, const SymFunc& f) {
  SymFunc out(f.basis());
  for (const auto& [lambda, v] : f.terms()) out.add(lambda, c * v);
  return out;
}

std::string to_string(const SymFunc& f, std::string_view variables) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Partition, Rational>> items(f.terms().begin(), f.terms().end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return DisplayOrder{}(a.first, b.first);
  });
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : items) {
    Rational mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (lambda.empty()) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + " ";
    out += basis_letter(f.basis());
    out += to_string(lambda);
    if (!variables.empty()) out += "(" + std::string(variables) + ")";
  }
  return out;
}

long kostka(const Partition& lambda, const Partition& mu) {
  static Memo<std::pair<Partition, Partition>, long> memo;
  if (lambda.size() != mu.size()) return 0;
  if (mu.empty()) return 1;
  return memo.get({lambda, mu}, [&]() -> long {
    // Remove the cells holding the largest letter: a horizontal strip of
    // size mu.back().
    const int strip = mu.parts().back();
    Partition rest(std::vector<int>(mu.parts().begin(), mu.parts().end() - 1));
    long total = 0;
    std::vector<int> nu(lambda.length());
    std::function<void(int, int)> rec = [&](int row, int removed) {
      if (row == lambda.length()) {
        if (removed == strip) total += kostka(sorted_partition(nu), rest);
        return;
      }
      int lo = lambda[row + 1];
      for (int v = lambda[row]; v >= lo; --v) {
        int take = lambda[row] - v;
        if (removed + take > strip) break;
        nu[row] = v;
        rec(row + 1, removed + take);
      }
    };
    rec(0, 0);
    return total;
  });
}

long irreducible_character(const Partition& lambda, const Partition& rho) {
  static Memo<std::pair<Partition, Partition>, long> memo;
  if (lambda.size() != rho.size()) {
    throw DomainError("character: partitions of different sizes");
  }
  if (rho.empty()) return 1;
  return memo.get({lambda, rho}, [&]() -> long {
    const int r = rho[0];
    Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
    const int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
    long total = 0;
    for (int i = 0; i < len; ++i) {
      int target = beta[i] - r;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
        continue;
      }
      int between = 0;
      for (int b : beta) between += (b > target && b < beta[i]);
      std::vector<int> moved = beta;
      moved[i] = target;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> parts;
      for (int k = 0; k < len; ++k) {
        int part = moved[k] - (len - 1 - k);
        if (part > 0) parts.push_back(part);
      }
      long sign = between % 2 ? -1 : 1;
      total += sign * irreducible_character(Partition(parts), rest);
    }
    return total;
  });
}

namespace {

// m_lambda in n variables: the sum over distinct rearrangements.
MatrixPolynomial monomial_polynomial(const Partition& lambda, int n) {
  Shape shape = q_shape(n);
  if (lambda.length() > n) return MatrixPolynomial(shape);
  std::vector<int> exps(n, 0);
  for (int i = 0; i < lambda.length(); ++i) exps[i] = lambda[i];
  std::sort(exps.begin(), exps.end());
  std::vector<Term> terms;
  do {
    terms.push_back({ExponentMatrix(shape, exps), Rational(1)});
  } while (std::next_permutation(exps.begin(), exps.end()));
  return MatrixPolynomial(shape, std::move(terms));
}

MatrixPolynomial one_part_polynomial(Basis basis, int k, int n) {
  Shape shape = q_shape(n);
  switch (basis) {
    case Basis::Elementary:
      return k > n ? MatrixPolynomial(shape)
                   : monomial_polynomial(Partition(std::vector<int>(k, 1)), n);
    case Basis::Power:
      return monomial_polynomial(Partition{k}, n);
    case Basis::Homogeneous: {
      MatrixPolynomial out(shape);
      for (const auto& mu : partitions_of(k)) out = out + monomial_polynomial(mu, n);
      return out;
    }
    default:
      throw DomainError("one_part_polynomial: multiplicative bases only");
  }
}

}  // namespace

MatrixPolynomial basis_polynomial(Basis basis, const Partition& lambda, int variables) {
  static Memo<std::tuple<Basis, Partition, int>, MatrixPolynomial> memo;
  if (variables < 1) throw DomainError("basis_polynomial: need at least one variable");
  return memo.get({basis, lambda, variables}, [&]() {
    Shape shape = q_shape(variables);
    switch (basis) {
      case Basis::Monomial:
        return monomial_polynomial(lambda, variables);
      case Basis::Schur: {
        MatrixPolynomial out(shape);
        for (const auto& mu : partitions_of(lambda.size())) {
          if (mu.length() > variables) continue;
          long k = kostka(lambda, mu);
          if (k) out = out + scale(monomial_polynomial(mu, variables), k);
        }
        return out;
      }
      default: {
        MatrixPolynomial out = MatrixPolynomial::constant(shape, 1);
        for (int part : lambda.parts()) {
          out = out * one_part_polynomial(basis, part, variables);
        }
        return out;
      }
    }
  });
}

QPolynomial schur_polynomial(const Partition& mu, int variables) {
  return basis_polynomial(Basis::Schur, mu, variables);
}

namespace {

using Coordinates = std::map<Partition, Rational>;

// Row r holds the s-coordinates of b_{parts[r]}, for a basis with a
// combinatorial Schur expansion (not m).
RationalMatrix to_schur_matrix(Basis basis, int d) {
  static Memo<std::pair<Basis, int>, RationalMatrix> memo;
  return memo.get({basis, d}, [&]() {
    auto parts = partitions_of(d);
    const int size = static_cast<int>(parts.size());
    RationalMatrix t(size, size);
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) {
        const Partition& lambda = parts[r];
        const Partition& mu = parts[c];
        switch (basis) {
          case Basis::Schur: t(r, c) = r == c ? 1 : 0; break;
          case Basis::Homogeneous: t(r, c) = kostka(mu, lambda); break;
          case Basis::Elementary: t(r, c) = kostka(mu.conjugate(), lambda); break;
          case Basis::Power: t(r, c) = irreducible_character(mu, lambda); break;
          case Basis::Monomial: {
            // s_lambda = sum K m; this row is filled transposed and inverted
            // below.
            t(r, c) = kostka(lambda, mu);
            break;
          }
        }
      }
    }
    if (basis == Basis::Monomial) {
      auto inv = inverse(t);
      if (!inv) throw ConsistencyError("Kostka matrix is singular");
      return *inv;
    }
    return t;
  });
}

// Rows: s-coordinates of the target basis, inverted once per (basis, d).
RationalMatrix from_schur_matrix(Basis target, int d) {
  static Memo<std::pair<Basis, int>, RationalMatrix> memo;
  return memo.get({target, d}, [&]() {
    auto inv = inverse(to_schur_matrix(target, d));
    if (!inv) throw ConsistencyError("basis transition matrix is singular");
    return *inv;
  });
}

std::size_t index_of(const std::vector<Partition>& parts, const Partition& mu) {
  // partitions_of is in reverse lexicographic order.
  auto it = std::lower_bound(parts.begin(), parts.end(), mu, std::greater<>());
  return static_cast<std::size_t>(it - parts.begin());
}

}  // namespace

SymFunc change_basis(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  std::map<int, std::vector<std::pair<Partition, Rational>>> by_size;
  for (const auto& [lambda, c] : f.terms()) by_size[lambda.size()].emplace_back(lambda, c);
  SymFunc out(target);
  for (const auto& [d, entries] : by_size) {
    const auto parts = partitions_of(d);
    const RationalMatrix to_s = to_schur_matrix(f.basis(), d);
    std::vector<Rational> schur(parts.size());
    for (const auto& [lambda, c] : entries) {
      const std::size_t r = index_of(parts, lambda);
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (to_s(r, k) != 0) schur[k] += c * to_s(r, k);
      }
    }
    if (target == Basis::Schur) {
      for (std::size_t k = 0; k < parts.size(); ++k) out.add(parts[k], schur[k]);
      continue;
    }
    // a = g * T^{-1}
    const RationalMatrix inv = from_schur_matrix(target, d);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (schur[k] == 0) continue;
      for (std::size_t r = 0; r < parts.size(); ++r) {
        if (inv(k, r) != 0) out.add(parts[r], schur[k] * inv(k, r));
      }
    }
  }
  return out;
}

bool is_symmetric(const QPolynomial& p) {
  const int n = p.shape().cols();
  for (int j = 0; j + 1 < n; ++j) {
    if (!(permute(p, Permutation::transposition(n, j, j + 1)) == p)) return false;
  }
  return true;
}

std::map<Partition, long> decompose_schur(const QPolynomial& p) {
  if (p.shape().rows() != 1) throw ShapeError("decompose_schur expects one row of variables");
  if (!is_symmetric(p)) throw DomainError("decompose_schur: input is not symmetric");
  const int vars = p.shape().cols();
  std::map<Partition, long> out;
  QPolynomial rest = p;
  while (!rest.is_zero()) {
    const Term& lead = rest.leading_term();
    auto exps = lead.exponent.data();
    if (!std::is_sorted(exps.begin(), exps.end(), std::greater<>())) {
      throw ConsistencyError("leading exponent of a symmetric polynomial is not a partition");
    }
    if (!is_integer(lead.coef)) {
      throw ConsistencyError("Schur expansion is not integral");
    }
    Partition mu = sorted_partition(std::vector<int>(exps.begin(), exps.end()));
    long c = lead.coef.get_num().get_si();
    out[mu] = c;
    rest = subtract_scaled(rest, lead.coef, schur_polynomial(mu, vars));
  }
  return out;
}

}  // namespace polaris
