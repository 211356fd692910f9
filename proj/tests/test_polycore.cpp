#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polaris/errors.hpp"
#include "polaris/polynomial.hpp"
#include "test_support.hpp"

using namespace polaris;
using polaris::testing::c;
using polaris::testing::x;

TEST_CASE("monomial_degree sums rows") {
  CHECK(monomial_degree(ExponentMatrix::from_rows({{0, 0}, {0, 0}})) ==
        MultiDegree({0, 0}));
  CHECK(monomial_degree(ExponentMatrix::from_rows({{2, 1}})) == MultiDegree({3}));
  CHECK(monomial_degree(ExponentMatrix::from_rows({{1, 0, 0}, {0, 2, 0}})) ==
        MultiDegree({1, 2}));
}

TEST_CASE("ring operations") {
  Shape s(1, 2);
  CHECK(add(x(s, 1, 1), -x(s, 1, 1)).is_zero());
  CHECK(multiply(x(s, 1, 1) + x(s, 1, 2), x(s, 1, 1) - x(s, 1, 2)) ==
        x(s, 1, 1) * x(s, 1, 1) - x(s, 1, 2) * x(s, 1, 2));
  CHECK(scale(3 * (x(s, 1, 1) * x(s, 1, 2)), Rational(1, 3)) ==
        x(s, 1, 1) * x(s, 1, 2));
  CHECK(scale(x(s, 1, 1), 0).is_zero());
  CHECK_THROWS_AS(add(x(s, 1, 1), x(Shape(2, 2), 1, 1)), ShapeError);
}

TEST_CASE("homogeneous_components") {
  Shape s(2, 1);
  auto f = x(s, 1, 1) * x(s, 1, 1) + x(s, 2, 1);
  auto parts = homogeneous_components(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(MultiDegree({2, 0})) == x(s, 1, 1) * x(s, 1, 1));
  CHECK(parts.at(MultiDegree({0, 1})) == x(s, 2, 1));
  CHECK(homogeneous_components(MatrixPolynomial(s)).empty());
  auto g = x(s, 1, 1) * x(s, 2, 1);
  CHECK(homogeneous_components(g).at(MultiDegree({1, 1})) == g);
}

TEST_CASE("embed adds zero rows") {
  Shape one(1, 2), two(2, 2);
  auto f = x(one, 1, 1) * x(one, 1, 2) + 3 * x(one, 1, 2);
  auto g = embed(f, two);
  CHECK(g == x(two, 1, 1) * x(two, 1, 2) + 3 * x(two, 1, 2));
  CHECK_THROWS_AS(embed(g, one), ShapeError);
  CHECK_THROWS_AS(embed(f, Shape(2, 3)), ShapeError);
}

TEST_CASE("leading term is graded-lex greatest") {
  Shape s(1, 2);
  auto f = x(s, 1, 2) * x(s, 1, 2) + x(s, 1, 1) * x(s, 1, 2) + x(s, 1, 1);
  CHECK(f.leading_term().exponent == ExponentMatrix::from_rows({{1, 1}}));
  CHECK(f.total_degree() == 2);
  CHECK_FALSE(f.is_homogeneous());
  CHECK_THROWS_AS(f.multidegree(), DomainError);
}

TEST_CASE("rationals parse and render") {
  CHECK(parse_rational("2/6") == Rational(1, 3));
  CHECK(parse_rational("-7") == -7);
}

TEST_CASE("malformed rationals are rejected") {
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("text rendering") {
  Shape s(2, 2);
  auto f = 3 * (x(s, 1, 1) * x(s, 1, 1) * x(s, 2, 1)) - Rational(1, 2) * x(s, 1, 2);
  CHECK(to_string(f) == "3*x[1,1]^2*x[2,1] - 1/2*x[1,2]");
  CHECK(to_string(MatrixPolynomial(s)) == "0");
  CHECK(to_string(c(s, -2)) == "-2");
  Shape q(1, 1);
  auto h = c(q, 1) + 2 * x(q, 1, 1) + x(q, 1, 1) * x(q, 1, 1);
  CHECK(to_q_string(h) == "1 + 2q + q^2");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Shape s(1 + trial % 2, 1 + trial % 3);
    auto f = polaris::testing::random_polynomial(rng, s, 4, 3);
    auto g = polaris::testing::random_polynomial(rng, s, 4, 3);
    auto h = polaris::testing::random_polynomial(rng, s, 3, 2);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f - f == MatrixPolynomial(s));
    // Degree additivity of products.
    const auto fg = f * g;
    for (const auto& t : fg.terms()) {
      bool found = false;
      for (const auto& a : f.terms()) {
        for (const auto& b : g.terms()) {
          std::vector<int> sum;
          for (int i = 0; i < s.rows(); ++i) {
            sum.push_back(a.exponent.row_degree(i) + b.exponent.row_degree(i));
          }
          found = found || monomial_degree(t.exponent) == MultiDegree(sum);
        }
      }
      CHECK(found);
    }
    // Renormalizing a canonical polynomial is the identity.
    std::vector<Term> copy(f.terms().begin(), f.terms().end());
    std::reverse(copy.begin(), copy.end());
    CHECK(MatrixPolynomial(s, copy) == f);
  }
}
