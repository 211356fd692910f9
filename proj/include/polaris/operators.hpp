#pragma once

#include <vector>

#include "polaris/linalg.hpp"
#include "polaris/polynomial.hpp"

namespace polaris {

/// Bijection of {0..n-1}. Acts on polynomials by sending column j to
/// column sigma(j) in every row at once. Composition (s*t)(j) = s(t(j)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// Swaps a and b.
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[j]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& s, const Permutation& t);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// d/dx_{row,col}.
MatrixPolynomial partial(const MatrixPolynomial& f, int row, int col);

/// E_{to,from}^{(order)} = sum_j x_{to,j} (d/dx_{from,j})^order. Moves one
/// unit of degree into row `to` after removing `order` units from `from`.
MatrixPolynomial polarize(const MatrixPolynomial& f, int to_row, int from_row,
                          int order);

MatrixPolynomial permute(const MatrixPolynomial& f, const Permutation& sigma);

/// Distinct images of f under all column permutations, sorted.
std::vector<MatrixPolynomial> orbit(const MatrixPolynomial& f);

/// Replaces x_ij by sum_k m(i,k) x_kj, i.e. f(X) -> f(MX).
MatrixPolynomial matrix_substitute(const MatrixPolynomial& f,
                                   const RationalMatrix& m);

}  // namespace polaris
