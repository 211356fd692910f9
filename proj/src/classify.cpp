#include "polaris/classify.hpp"

#include <algorithm>

#include "polaris/errors.hpp"
#include "polaris/formulas.hpp"
#include "polaris/linalg.hpp"

namespace polaris {

ProjectivePoint::ProjectivePoint(int degree, std::vector<Rational> coords)
    : degree_(degree), coords_(std::move(coords)) {
  if (degree < 0) throw DomainError("negative degree");
  if (coords_.size() != partitions_of(degree).size()) {
    throw DomainError("a degree-" + std::to_string(degree) + " point has " +
                      std::to_string(partitions_of(degree).size()) + " coordinates");
  }
  auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Rational& r) { return r != 0; });
  if (lead == coords_.end()) throw DomainError("the zero vector is not a projective point");
  const Rational scale = *lead;
  for (auto& r : coords_) r /= scale;
}

std::string to_string(const ProjectivePoint& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.coords().size(); ++k) {
    if (k) out += ":";
    out += to_string(p[k]);
  }
  return out + "]";
}

namespace {

void require_row1_symmetric(const MatrixPolynomial& f) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  if (!f.is_homogeneous()) throw DomainError("polynomial is not homogeneous");
  for (const auto& t : f.terms()) {
    for (int i = 1; i < f.shape().rows(); ++i) {
      if (t.exponent.row_degree(i) != 0) throw DomainError("polynomial uses rows other than the first");
    }
  }
  const int n = f.shape().cols();
  for (int j = 0; j + 1 < n; ++j) {
    if (!(permute(f, Permutation::transposition(n, j, j + 1)) == f)) {
      throw DomainError("polynomial is not symmetric");
    }
  }
}

}  // namespace

ProjectivePoint projective_point(const MatrixPolynomial& f) {
  require_row1_symmetric(f);
  const int d = f.total_degree();
  const Shape s = f.shape();
  std::vector<Rational> coords;
  for (const auto& lambda : partitions_of(d)) {
    if (lambda.length() > s.cols()) {
      coords.emplace_back(0);
      continue;
    }
    ExponentMatrix e(s);
    for (int j = 0; j < lambda.length(); ++j) e.set(0, j, lambda[j]);
    coords.push_back(f.coefficient(e));
  }
  return ProjectivePoint(d, std::move(coords));
}

MatrixPolynomial point_polynomial(const ProjectivePoint& p, int n) {
  MatrixPolynomial f(Shape(1, n));
  const auto parts = partitions_of(p.degree());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (p[k] != 0) f = f + scale(basis_polynomial(Basis::Monomial, parts[k], n), p[k]);
  }
  return f;
}

bool is_exception(const MatrixPolynomial& f) {
  require_row1_symmetric(f);
  if (f.total_degree() < 2) throw DomainError("exceptions are defined from degree 2");
  const int n = f.shape().cols();
  std::vector<MatrixPolynomial> polys;
  for (int j = 0; j < n; ++j) polys.push_back(partial(f, 0, j));
  polys.push_back(polarize(f, 0, 0, 2));
  return rank(polys) == static_cast<std::size_t>(n);
}

bool exception_criterion_deg3(const Rational& a, const Rational& b, const Rational& c, int n) {
  if (n < 2) throw DomainError("the criterion needs n >= 2");
  if (n == 2) return b == 0 && a != 0;
  const bool p1_cubed = b == 3 * a && c == 6 * a && a != 0;
  return !p1_cubed && 6 * a * (2 * b + (n - 2) * c) == 4 * (n - 1) * b * b;
}

std::string to_string(IsoType t) {
  switch (t) {
    case IsoType::P1Power: return "P1_POWER";
    case IsoType::PowerSum: return "POWER_SUM";
    case IsoType::H3: return "H3";
    case IsoType::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

IsoType classify_degree2(const Rational& a, const Rational& b, int n) {
  if (n < 2) throw DomainError("degree-2 classification needs n >= 2");
  if (a == 0 && b == 0) throw DomainError("the zero vector is not a projective point");
  return a != 0 && b == 2 * a ? IsoType::P1Power : IsoType::PowerSum;
}

IsoType classify_degree3(const Rational& a, const Rational& b, const Rational& c, int n) {
  if (n < 2) throw DomainError("degree-3 classification needs n >= 2");
  auto f = point_polynomial(ProjectivePoint(3, {a, b, c}), n);
  if (f.is_zero()) throw DomainError("the polynomial vanishes in " + std::to_string(n) + " variables");
  const bool p1_cubed = a != 0 && b == 3 * a && (n == 2 || c == 6 * a);
  if (p1_cubed) return IsoType::P1Power;
  return is_exception(f) ? IsoType::PowerSum : IsoType::H3;
}

HExpansion h_expansion(const QPolynomial& p) {
  HExpansion out;
  const int ell = p.shape().cols();
  if (p.shape().rows() != 1) throw ShapeError("expected a polynomial in one row of variables");
  if (!is_symmetric(p)) return out;
  out.solvable = true;
  out.unique = true;
  for (const auto& [degree, part] : homogeneous_components(p)) {
    const int k = degree.total();
    std::vector<Partition> rows, cols;
    for (const auto& nu : partitions_of(k)) {
      if (nu.length() <= ell) {
        rows.push_back(nu);
        cols.push_back(nu);
      }
    }
    RationalMatrix a(rows.size(), cols.size());
    std::vector<Rational> b(rows.size());
    auto exponent = [&](const Partition& nu) {
      std::vector<int> e = nu.parts();
      e.resize(ell, 0);
      return ExponentMatrix(q_shape(ell), e);
    };
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto h = basis_polynomial(Basis::Homogeneous, cols[j], ell);
      for (std::size_t i = 0; i < rows.size(); ++i) a(i, j) = h.coefficient(exponent(rows[i]));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) b[i] = part.coefficient(exponent(rows[i]));
    auto sol = solve(a, b);
    if (!sol) {
      out.solvable = false;
      out.unique = false;
      out.coefficients.clear();
      return out;
    }
    out.unique = out.unique && sol->unique;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (sol->x[j] != 0) out.coefficients[cols[j]] = sol->x[j];
    }
  }
  out.positive = std::all_of(out.coefficients.begin(), out.coefficients.end(), [](const auto& kv) {
    return kv.second > 0 && is_integer(kv.second);
  });
  return out;
}

std::string branch_id(int degree, IsoType t) {
  if (degree == 2 && t == IsoType::P1Power) return "p1-power";
  if (degree == 2 && t == IsoType::PowerSum) return "power-sum";
  if (degree == 3 && t == IsoType::P1Power) return "p1-power";
  if (degree == 3 && t == IsoType::PowerSum) return "exception";
  if (degree == 3 && t == IsoType::H3) return "otherwise";
  throw DomainError("no branch formula for degree " + std::to_string(degree) + " and " + to_string(t));
}

Verdict classify(const MatrixPolynomial& f, const ClassifyOptions& options) {
  Verdict v{projective_point(f), 0, 1, false, IsoType::Unknown, std::nullopt, "", std::nullopt};
  const int n = f.shape().cols();
  const int d = v.point.degree();
  v.n = n;
  v.ell = options.ell;
  if (d >= 2) v.exception = is_exception(f);
  if (d == 2) v.iso_type = classify_degree2(v.point[0], v.point[1], n);
  if (d == 3) v.iso_type = classify_degree3(v.point[0], v.point[1], v.point[2], n);
  if (!options.verify) return v;

  const std::vector<MatrixPolynomial> family{f};
  auto module = polarization_module(family, options.ell, ClosureOptions{options.jobs});
  v.series = frobenius_series(module.space, FrobeniusOptions{options.jobs});
  if (v.iso_type == IsoType::Unknown) return v;
  const auto fixtures = d == 2 ? degree2_fixtures() : degree3_fixtures();
  const std::string id = branch_id(d, v.iso_type);
  for (const auto& fx : fixtures) {
    if (fx.id != id) continue;
    v.discrepancy = difference(*v.series, evaluate_formula(fx.schur_form, n));
    v.verified_by_module = v.discrepancy.empty();
  }
  return v;
}

}  // namespace polaris
