#include "polaris/subspace.hpp"

#include <algorithm>
#include <thread>

namespace polaris {

EchelonBasis::Reduction EchelonBasis::reduce(const MatrixPolynomial& f) const {
  if (!(f.shape() == shape_)) throw ShapeError("reduce: shape mismatch");
  Reduction out{f, std::vector<Rational>(basis_.size(), Rational(0))};
  // Subtracting basis[k] only introduces monomials below pivot(k), so one
  // pass in decreasing pivot order clears every pivot. In reduced echelon
  // form the coefficient read at pivot(k) is the coordinate.
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (out.residual.is_zero()) break;
    if (out.residual.leading_term().exponent < pivot(k)) continue;
    Rational c = out.residual.coefficient(pivot(k));
    if (c == 0) continue;
    out.residual = subtract_scaled(out.residual, c, basis_[k]);
    out.coordinates[k] = std::move(c);
  }
  return out;
}

std::optional<MatrixPolynomial> EchelonBasis::insert(const MatrixPolynomial& f) {
  MatrixPolynomial r = reduce(f).residual;
  if (r.is_zero()) return std::nullopt;
  Rational lead = r.leading_term().coef;
  if (lead != 1) r = scale(r, 1 / lead);
  const ExponentMatrix& p = r.leading_term().exponent;
  auto pos = basis_.begin();
  for (auto it = basis_.begin(); it != basis_.end(); ++it) {
    if (it->leading_term().exponent > p) {
      Rational c = it->coefficient(p);
      if (c != 0) *it = subtract_scaled(*it, c, r);
      pos = it + 1;
    } else {
      break;
    }
  }
  basis_.insert(pos, r);
  return r;
}

std::size_t rank(std::span<const MatrixPolynomial> polys) {
  if (polys.empty()) return 0;
  EchelonBasis basis(polys.front().shape());
  for (const auto& f : polys) basis.insert(f);
  return basis.size();
}

std::span<const MatrixPolynomial> GradedSubspace::component(
    const MultiDegree& d) const {
  auto it = components_.find(d);
  if (it == components_.end()) return {};
  return it->second.vectors();
}

std::optional<MatrixPolynomial> GradedSubspace::insert(const MatrixPolynomial& f) {
  if (!(f.shape() == shape_)) throw ShapeError("insert: shape mismatch");
  if (f.is_zero()) return std::nullopt;
  MultiDegree d = f.multidegree();
  auto it = components_.try_emplace(d, shape_).first;
  auto added = it->second.insert(f);
  if (it->second.size() == 0) components_.erase(it);
  return added;
}

bool GradedSubspace::contains(const MatrixPolynomial& f) const {
  if (!(f.shape() == shape_)) throw ShapeError("contains: shape mismatch");
  for (const auto& [d, part] : homogeneous_components(f)) {
    auto it = components_.find(d);
    if (it == components_.end()) return false;
    if (!it->second.reduce(part).residual.is_zero()) return false;
  }
  return true;
}

std::size_t GradedSubspace::dimension() const {
  std::size_t total = 0;
  for (const auto& [d, part] : components_) total += part.size();
  return total;
}

std::map<MultiDegree, std::size_t> GradedSubspace::graded_dimensions() const {
  std::map<MultiDegree, std::size_t> out;
  for (const auto& [d, part] : components_) out.emplace(d, part.size());
  return out;
}

std::vector<MatrixPolynomial> GradedSubspace::basis() const {
  std::vector<MatrixPolynomial> out;
  for (const auto& [d, part] : components_) {
    out.insert(out.end(), part.vectors().begin(), part.vectors().end());
  }
  return out;
}

int GradedSubspace::max_total_degree() const {
  int top = -1;
  for (const auto& [d, part] : components_) top = std::max(top, d.total());
  return top;
}

std::pair<GradedSubspace, bool> insert(GradedSubspace v, const MatrixPolynomial& f) {
  bool changed = v.insert(f).has_value();
  return {std::move(v), changed};
}

bool contains(const GradedSubspace& v, const MatrixPolynomial& f) {
  return v.contains(f);
}

GradedSubspace span(std::span<const MatrixPolynomial> family, Shape shape) {
  GradedSubspace v(shape);
  for (const auto& f : family) {
    if (!f.is_homogeneous()) throw DomainError("span: inhomogeneous member");
    v.insert(f);
  }
  return v;
}

namespace {

enum OperatorSet : unsigned { kDerivatives = 1, kPolarizations = 2 };

void apply_operators(const MatrixPolynomial& f, unsigned ops, int max_order,
                     std::vector<MatrixPolynomial>& out) {
  const Shape& shape = f.shape();
  if (ops & kDerivatives) {
    for (int i = 0; i < shape.rows(); ++i) {
      for (int j = 0; j < shape.cols(); ++j) {
        auto g = partial(f, i, j);
        if (!g.is_zero()) out.push_back(std::move(g));
      }
    }
  }
  if (ops & kPolarizations) {
    for (int to = 0; to < shape.rows(); ++to) {
      for (int from = 0; from < shape.rows(); ++from) {
        for (int p = 1; p <= max_order; ++p) {
          auto g = polarize(f, to, from, p);
          if (!g.is_zero()) out.push_back(std::move(g));
        }
      }
    }
  }
}

std::vector<std::vector<MatrixPolynomial>> apply_batch(
    const std::vector<MatrixPolynomial>& batch, unsigned ops, int max_order,
    unsigned jobs) {
  std::vector<std::vector<MatrixPolynomial>> images(batch.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t k = begin; k < batch.size(); k += stride) {
      apply_operators(batch[k], ops, max_order, images[k]);
    }
  };
  unsigned workers = std::min<std::size_t>(std::max(1u, jobs), batch.size());
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < workers; ++t) threads.emplace_back(work, t, workers);
  }
  return images;
}

// Worklist fixed point. Each pass applies the operators to every vector
// added in the previous pass; images are inserted sequentially in batch
// order so the echelon basis is independent of the thread count.
GradedSubspace close(GradedSubspace v, unsigned ops, int max_order,
                     const ClosureOptions& options, ClosureReport* report) {
  const int degree_bound = v.max_total_degree();
  std::vector<MatrixPolynomial> worklist = v.basis();
  std::size_t passes = 0;
  while (!worklist.empty()) {
    ++passes;
    auto images = apply_batch(worklist, ops, max_order, options.jobs);
    std::vector<MatrixPolynomial> next;
    for (auto& group : images) {
      for (auto& g : group) {
        if (g.total_degree() > degree_bound) {
          throw ConsistencyError("closure produced a degree above the generators");
        }
        if (auto added = v.insert(g)) next.push_back(std::move(*added));
      }
    }
    worklist = std::move(next);
  }
  if (report) {
    report->iterations = passes;
    report->dimension = v.dimension();
    report->graded_dims = v.graded_dimensions();
  }
  return v;
}

}  // namespace

GradedSubspace derivative_closure(const GradedSubspace& v,
                                  const ClosureOptions& options) {
  return close(v, kDerivatives, 1, options, nullptr);
}

GradedSubspace polarization_closure(const GradedSubspace& v, int max_order,
                                    const ClosureOptions& options) {
  if (max_order < 1 || max_order < v.max_total_degree()) {
    throw DomainError("polarization order bound below the top degree");
  }
  return close(v, kPolarizations, max_order, options, nullptr);
}

UnstableFamilyError::UnstableFamilyError(Permutation sigma, MatrixPolynomial member)
    : DomainError("family is not S_n-stable: permuting " + to_string(member) +
                  " leaves the span"),
      sigma_(std::move(sigma)),
      member_(std::move(member)) {}

void check_stable_family(std::span<const MatrixPolynomial> family) {
  if (family.empty()) return;
  const Shape shape = family.front().shape();
  GradedSubspace v = span(family, shape);
  for (const auto& f : family) {
    for (int j = 0; j + 1 < shape.cols(); ++j) {
      auto t = Permutation::transposition(shape.cols(), j, j + 1);
      if (!v.contains(permute(f, t))) throw UnstableFamilyError(t, f);
    }
  }
}

PolarizationModule polarization_module(std::span<const MatrixPolynomial> family,
                                       int rows, const ClosureOptions& options) {
  if (family.empty()) return {GradedSubspace(Shape(rows, 1)), {}, 0};
  const int cols = family.front().shape().cols();
  Shape shape(rows, cols);
  std::vector<MatrixPolynomial> embedded;
  embedded.reserve(family.size());
  int degree = 0;
  for (const auto& f : family) {
    if (f.shape().cols() != cols) throw ShapeError("family members differ in n");
    if (!f.is_homogeneous()) {
      throw DomainError("family member is not homogeneous: " + to_string(f));
    }
    embedded.push_back(embed(f, shape));
    degree = std::max(degree, f.total_degree());
  }
  check_stable_family(embedded);
  PolarizationModule m{span(embedded, shape), {}, degree};
  m.space = close(std::move(m.space), kDerivatives | kPolarizations,
                  std::max(1, degree), options, &m.report);
  return m;
}

QPolynomial hilbert_polynomial(const GradedSubspace& v) {
  Shape qs = q_shape(v.shape().rows());
  std::vector<Term> terms;
  for (const auto& [d, part] : v.components()) {
    terms.push_back({ExponentMatrix(qs, d.values()),
                     Rational(static_cast<long>(part.size()))});
  }
  return QPolynomial(qs, std::move(terms));
}

}  // namespace polaris
