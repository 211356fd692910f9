#pragma once

#include <optional>
#include <vector>

#include "polaris/rational.hpp"

namespace polaris {

/// Small dense matrix over Q. Used for substitution matrices and the
/// basis-transition solves of the symmetric-function layer.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RationalMatrix identity(int size);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

int rank(RationalMatrix m);
Rational determinant(RationalMatrix m);
/// Inverse of a square matrix; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

struct Solution {
  /// One solution of a x = b, free variables set to zero.
  std::vector<Rational> x;
  /// rank(a) equals the number of unknowns.
  bool unique = false;
};

/// nullopt when a x = b is inconsistent.
std::optional<Solution> solve(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace polaris
