#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "polaris/rational.hpp"

namespace polaris {

/// Dimensions of the variable matrix X = (x_ij): `rows` sets of `cols`
/// variables each. Indices in the C++ API are zero-based; text renderings
/// use one-based x[i,j].
class Shape {
 public:
  Shape() = default;
  Shape(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_ * cols_; }

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  int rows_ = 1;
  int cols_ = 1;
};

/// Per-row total degrees of a monomial (the N^rows grading).
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> degrees);

  int size() const { return static_cast<int>(degrees_.size()); }
  int operator[](int row) const { return degrees_[row]; }
  int total() const;
  const std::vector<int>& values() const { return degrees_; }

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

 private:
  std::vector<int> degrees_;
};

std::string to_string(const MultiDegree& degree);

/// Exponent matrix A of the monomial X^A, stored row-major.
class ExponentMatrix {
 public:
  static constexpr int kMaxExponent = 255;

  explicit ExponentMatrix(Shape shape);
  ExponentMatrix(Shape shape, const std::vector<int>& row_major);
  static ExponentMatrix from_rows(const std::vector<std::vector<int>>& rows);

  const Shape& shape() const { return shape_; }
  int operator()(int row, int col) const { return data_[index(row, col)]; }
  void set(int row, int col, int value);
  int total_degree() const { return total_; }
  int row_degree(int row) const;
  std::span<const std::uint8_t> data() const { return data_; }

  friend bool operator==(const ExponentMatrix& a, const ExponentMatrix& b) {
    return a.total_ == b.total_ && a.data_ == b.data_;
  }
  /// Graded lexicographic: total degree first, then lexicographic on the
  /// row-major flattening. Only meaningful between equal shapes.
  friend std::strong_ordering operator<=>(const ExponentMatrix& a,
                                          const ExponentMatrix& b) {
    if (auto c = a.total_ <=> b.total_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * shape_.cols() + col;
  }

  Shape shape_;
  std::vector<std::uint8_t> data_;
  int total_ = 0;
};

MultiDegree monomial_degree(const ExponentMatrix& m);

struct Term {
  ExponentMatrix exponent;
  Rational coef;
};

/// Sparse polynomial with rational coefficients in the variables of a
/// Shape. Terms are kept in strictly decreasing graded-lex order with no
/// zero coefficients, so structural equality is polynomial equality.
class MatrixPolynomial {
 public:
  explicit MatrixPolynomial(Shape shape);
  /// Sorts, merges equal monomials and drops zeros.
  MatrixPolynomial(Shape shape, std::vector<Term> terms);

  static MatrixPolynomial constant(Shape shape, const Rational& value);
  static MatrixPolynomial variable(Shape shape, int row, int col);
  static MatrixPolynomial monomial(ExponentMatrix exponent,
                                   const Rational& coef = 1);

  const Shape& shape() const { return shape_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading_term() const { return terms_.front(); }

  Rational coefficient(const ExponentMatrix& exponent) const;
  /// Largest total degree of a term; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  /// The common multidegree of all terms; throws DomainError when the
  /// polynomial is zero or not homogeneous.
  MultiDegree multidegree() const;

  friend bool operator==(const MatrixPolynomial& a, const MatrixPolynomial& b);
  /// Total order used for deduplication (term-by-term comparison).
  friend bool operator<(const MatrixPolynomial& a, const MatrixPolynomial& b);

  /// Trusted constructor: terms already canonical.
  static MatrixPolynomial from_canonical(Shape shape, std::vector<Term> terms);

 private:
  Shape shape_;
  std::vector<Term> terms_;
};

MatrixPolynomial add(const MatrixPolynomial& f, const MatrixPolynomial& g);
MatrixPolynomial scale(const MatrixPolynomial& f, const Rational& c);
MatrixPolynomial multiply(const MatrixPolynomial& f, const MatrixPolynomial& g);
/// f - c*g in one merge pass.
MatrixPolynomial subtract_scaled(const MatrixPolynomial& f, const Rational& c,
                                 const MatrixPolynomial& g);
MatrixPolynomial power(const MatrixPolynomial& f, int exponent);

inline MatrixPolynomial operator+(const MatrixPolynomial& f,
                                  const MatrixPolynomial& g) {
  return add(f, g);
}
inline MatrixPolynomial operator-(const MatrixPolynomial& f,
                                  const MatrixPolynomial& g) {
  return subtract_scaled(f, 1, g);
}
inline MatrixPolynomial operator-(const MatrixPolynomial& f) {
  return scale(f, -1);
}
inline MatrixPolynomial operator*(const MatrixPolynomial& f,
                                  const MatrixPolynomial& g) {
  return multiply(f, g);
}
inline MatrixPolynomial operator*(const Rational& c, const MatrixPolynomial& f) {
  return scale(f, c);
}

std::map<MultiDegree, MatrixPolynomial> homogeneous_components(
    const MatrixPolynomial& f);

/// Views f inside a variable matrix with at least as many rows; new rows
/// carry zero exponents.
MatrixPolynomial embed(const MatrixPolynomial& f, Shape new_shape);

/// "3*x[1,1]^2*x[2,1] - 1/2*x[1,2]"; "0" for the zero polynomial.
std::string to_string(const MatrixPolynomial& f);

/// Polynomials in q_1..q_l (Hilbert series, Schur polynomials, character
/// generating functions) reuse the one-row matrix polynomial with l columns.
using QPolynomial = MatrixPolynomial;

inline Shape q_shape(int variables) { return Shape(1, variables); }

/// "1 + 2q + q^2" for one variable, "1 + q1 + q2 + q1q2" otherwise; terms
/// in increasing total degree.
std::string to_q_string(const QPolynomial& p);

}  // namespace polaris
