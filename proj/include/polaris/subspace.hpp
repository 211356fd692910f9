#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "polaris/errors.hpp"
#include "polaris/operators.hpp"
#include "polaris/polynomial.hpp"

namespace polaris {

/// Reduced row echelon basis of a finite set of polynomials. Pivots are the
/// leading (graded-lex greatest) monomials, normalized to coefficient 1,
/// and no basis element has a nonzero coefficient at another's pivot, so
/// the basis is canonical for the span it represents.
class EchelonBasis {
 public:
  struct Reduction {
    MatrixPolynomial residual;
    /// Coefficient of each basis element (basis order) in f - residual.
    std::vector<Rational> coordinates;
  };

  explicit EchelonBasis(Shape shape) : shape_(shape) {}

  const Shape& shape() const { return shape_; }
  std::size_t size() const { return basis_.size(); }
  std::span<const MatrixPolynomial> vectors() const { return basis_; }
  const ExponentMatrix& pivot(std::size_t k) const {
    return basis_[k].leading_term().exponent;
  }

  Reduction reduce(const MatrixPolynomial& f) const;
  /// Inserts f; returns the normalized residual that extended the span, or
  /// nullopt when f was already in it.
  std::optional<MatrixPolynomial> insert(const MatrixPolynomial& f);

  friend bool operator==(const EchelonBasis&, const EchelonBasis&) = default;

 private:
  Shape shape_;
  std::vector<MatrixPolynomial> basis_;
};

/// Exact rank over Q of a list of polynomials of a common shape.
std::size_t rank(std::span<const MatrixPolynomial> polys);

/// A homogeneous subspace stored as one echelon basis per multidegree.
class GradedSubspace {
 public:
  explicit GradedSubspace(Shape shape) : shape_(shape) {}

  const Shape& shape() const { return shape_; }
  const std::map<MultiDegree, EchelonBasis>& components() const {
    return components_;
  }
  /// Basis of one graded piece; empty when the piece is zero.
  std::span<const MatrixPolynomial> component(const MultiDegree& d) const;

  /// Inserts a homogeneous polynomial. Returns the new echelon vector when
  /// the space grew. Throws DomainError on inhomogeneous input.
  std::optional<MatrixPolynomial> insert(const MatrixPolynomial& f);
  /// Membership; inhomogeneous f is tested component by component.
  bool contains(const MatrixPolynomial& f) const;

  std::size_t dimension() const;
  std::map<MultiDegree, std::size_t> graded_dimensions() const;
  /// All basis vectors, by increasing multidegree.
  std::vector<MatrixPolynomial> basis() const;
  /// Largest total degree present; -1 for the zero space.
  int max_total_degree() const;

  friend bool operator==(const GradedSubspace&, const GradedSubspace&) = default;

 private:
  Shape shape_;
  std::map<MultiDegree, EchelonBasis> components_;
};

/// Value-style insert: returns the enlarged space and whether it changed.
std::pair<GradedSubspace, bool> insert(GradedSubspace v, const MatrixPolynomial& f);
bool contains(const GradedSubspace& v, const MatrixPolynomial& f);

/// Linear span of homogeneous polynomials (zero members are ignored).
GradedSubspace span(std::span<const MatrixPolynomial> family, Shape shape);

struct ClosureOptions {
  /// Worker threads used to apply operators to a worklist batch. The
  /// result does not depend on this value.
  unsigned jobs = 1;
};

struct ClosureReport {
  std::size_t iterations = 0;
  std::size_t dimension = 0;
  std::map<MultiDegree, std::size_t> graded_dims;
};

/// Least superspace closed under every partial derivative.
GradedSubspace derivative_closure(const GradedSubspace& v,
                                  const ClosureOptions& options = {});

/// Least superspace closed under E_{i,k}^{(p)} for all rows i, k and
/// 1 <= p <= max_order. Requires max_order >= the top total degree of v.
GradedSubspace polarization_closure(const GradedSubspace& v, int max_order,
                                    const ClosureOptions& options = {});

/// Witness of a family that is not closed under the diagonal action.
class UnstableFamilyError : public DomainError {
 public:
  UnstableFamilyError(Permutation sigma, MatrixPolynomial member);
  const Permutation& permutation() const { return sigma_; }
  const MatrixPolynomial& member() const { return member_; }

 private:
  Permutation sigma_;
  MatrixPolynomial member_;
};

/// Throws UnstableFamilyError unless every adjacent transposition maps each
/// member into the span of the family.
void check_stable_family(std::span<const MatrixPolynomial> family);

struct PolarizationModule {
  GradedSubspace space;
  ClosureReport report;
  /// Maximal total degree of the generating family.
  int generator_degree = 0;
};

/// The polarization module of a homogeneous S_n-stable family, computed in
/// `rows` sets of variables: the least space containing the family that is
/// closed under all partial derivatives and polarization operators.
PolarizationModule polarization_module(std::span<const MatrixPolynomial> family,
                                       int rows,
                                       const ClosureOptions& options = {});

/// sum_d dim(V_d) q^d as a polynomial in q_1..q_rows.
QPolynomial hilbert_polynomial(const GradedSubspace& v);

}  // namespace polaris
