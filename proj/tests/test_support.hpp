#pragma once

#include <random>

#include "polaris/polynomial.hpp"

namespace polaris::testing {

/// x_{ij} with one-based indices, matching the usual notation.
inline MatrixPolynomial x(Shape shape, int i, int j) {
  return MatrixPolynomial::variable(shape, i - 1, j - 1);
}

inline MatrixPolynomial c(Shape shape, const Rational& v) {
  return MatrixPolynomial::constant(shape, v);
}

inline Rational random_rational(std::mt19937& rng, int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// Random polynomial with up to `terms` terms of total degree <= max_degree.
inline MatrixPolynomial random_polynomial(std::mt19937& rng, Shape shape,
                                          int terms, int max_degree) {
  std::uniform_int_distribution<int> cell(0, shape.size() - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    ExponentMatrix e(shape);
    int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      int idx = cell(rng);
      int i = idx / shape.cols(), j = idx % shape.cols();
      e.set(i, j, e(i, j) + 1);
    }
    out.push_back({e, random_rational(rng)});
  }
  return MatrixPolynomial(shape, std::move(out));
}

/// Random homogeneous polynomial of the given multidegree.
inline MatrixPolynomial random_homogeneous(std::mt19937& rng, Shape shape,
                                           const std::vector<int>& degree,
                                           int terms) {
  std::uniform_int_distribution<int> col(0, shape.cols() - 1);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    ExponentMatrix e(shape);
    for (int i = 0; i < shape.rows(); ++i) {
      for (int k = 0; k < degree[i]; ++k) {
        int j = col(rng);
        e.set(i, j, e(i, j) + 1);
      }
    }
    out.push_back({e, random_rational(rng)});
  }
  return MatrixPolynomial(shape, std::move(out));
}

}  // namespace polaris::testing
