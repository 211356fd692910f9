#include "polaris/operators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "polaris/errors.hpp"

namespace polaris {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[v]) {
      throw DomainError("permutation images are not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::swap(images.at(a), images.at(b));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int j = 0; j < size(); ++j) inv[images_[j]] = j;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw ShapeError("permutation sizes differ");
  std::vector<int> images(s.size());
  for (int j = 0; j < s.size(); ++j) images[j] = s(t(j));
  return Permutation(std::move(images));
}

namespace {

void check_index(const Shape& shape, int row, int col) {
  if (row < 0 || row >= shape.rows() || col < 0 || col >= shape.cols()) {
    throw ShapeError("variable index out of range");
  }
}

void check_row(const Shape& shape, int row) {
  if (row < 0 || row >= shape.rows()) throw ShapeError("row index out of range");
}

}  // namespace

MatrixPolynomial partial(const MatrixPolynomial& f, int row, int col) {
  check_index(f.shape(), row, col);
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    int a = t.exponent(row, col);
    if (!a) continue;
    ExponentMatrix e = t.exponent;
    e.set(row, col, a - 1);
    out.push_back({std::move(e), t.coef * a});
  }
  return MatrixPolynomial(f.shape(), std::move(out));
}

MatrixPolynomial polarize(const MatrixPolynomial& f, int to_row, int from_row,
                          int order) {
  check_row(f.shape(), to_row);
  check_row(f.shape(), from_row);
  if (order < 1) throw DomainError("polarization order must be >= 1");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    for (int j = 0; j < f.shape().cols(); ++j) {
      int a = t.exponent(from_row, j);
      if (a < order) continue;
      mpz_class falling = 1;
      for (int r = 0; r < order; ++r) falling *= a - r;
      ExponentMatrix e = t.exponent;
      e.set(from_row, j, a - order);
      e.set(to_row, j, e(to_row, j) + 1);
      out.push_back({std::move(e), t.coef * falling});
    }
  }
  return MatrixPolynomial(f.shape(), std::move(out));
}

MatrixPolynomial permute(const MatrixPolynomial& f, const Permutation& sigma) {
  const Shape& shape = f.shape();
  if (sigma.size() != shape.cols()) {
    throw ShapeError("permutation size does not match column count");
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    ExponentMatrix e(shape);
    for (int i = 0; i < shape.rows(); ++i) {
      for (int j = 0; j < shape.cols(); ++j) {
        if (int a = t.exponent(i, j)) e.set(i, sigma(j), a);
      }
    }
    out.push_back({std::move(e), t.coef});
  }
  return MatrixPolynomial(shape, std::move(out));
}

std::vector<MatrixPolynomial> orbit(const MatrixPolynomial& f) {
  // Closure under adjacent transpositions, which generate S_n.
  const int n = f.shape().cols();
  std::set<MatrixPolynomial> seen{f};
  std::vector<MatrixPolynomial> frontier{f};
  while (!frontier.empty()) {
    std::vector<MatrixPolynomial> next;
    for (const auto& g : frontier) {
      for (int j = 0; j + 1 < n; ++j) {
        auto h = permute(g, Permutation::transposition(n, j, j + 1));
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

MatrixPolynomial matrix_substitute(const MatrixPolynomial& f,
                                   const RationalMatrix& m) {
  const Shape& shape = f.shape();
  if (m.rows() != shape.rows() || m.cols() != shape.rows()) {
    throw ShapeError("substitution matrix must be rows x rows");
  }
  // images[i][j] = sum_k m(i,k) x_kj
  std::vector<std::vector<MatrixPolynomial>> images(shape.rows());
  for (int i = 0; i < shape.rows(); ++i) {
    for (int j = 0; j < shape.cols(); ++j) {
      std::vector<Term> terms;
      for (int k = 0; k < shape.rows(); ++k) {
        if (m(i, k) == 0) continue;
        ExponentMatrix e(shape);
        e.set(k, j, 1);
        terms.push_back({std::move(e), m(i, k)});
      }
      images[i].emplace_back(shape, std::move(terms));
    }
  }
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    MatrixPolynomial product = MatrixPolynomial::constant(shape, t.coef);
    for (int i = 0; i < shape.rows() && !product.is_zero(); ++i) {
      for (int j = 0; j < shape.cols(); ++j) {
        if (int a = t.exponent(i, j)) product = product * power(images[i][j], a);
      }
    }
    out.insert(out.end(), product.terms().begin(), product.terms().end());
  }
  return MatrixPolynomial(shape, std::move(out));
}

}  // namespace polaris
