#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polaris/errors.hpp"
#include "polaris/operators.hpp"
#include "test_support.hpp"

using namespace polaris;
using polaris::testing::c;
using polaris::testing::x;

namespace {

MatrixPolynomial power_sum(Shape s, int row, int k) {
  MatrixPolynomial p(s);
  for (int j = 1; j <= s.cols(); ++j) p = p + power(x(s, row, j), k);
  return p;
}

Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

}  // namespace

TEST_CASE("partial derivatives") {
  Shape s(2, 2);
  auto x11 = x(s, 1, 1), x12 = x(s, 1, 2), x21 = x(s, 2, 1);
  CHECK(partial(x11 * x11 * x12, 0, 0) == 2 * (x11 * x12));
  CHECK(partial(x12, 0, 0).is_zero());
  CHECK(partial(x11 * x21, 1, 0) == x11);
  CHECK_THROWS_AS(partial(x11, 2, 0), ShapeError);
  CHECK_THROWS_AS(partial(x11, 0, 2), ShapeError);
}

TEST_CASE("polarization operators") {
  Shape s(2, 2);
  auto x11 = x(s, 1, 1), x12 = x(s, 1, 2), x21 = x(s, 2, 1), x22 = x(s, 2, 2);
  CHECK(polarize(x11 * x12, 1, 0, 1) == x21 * x12 + x11 * x22);
  CHECK(polarize(power_sum(s, 1, 3), 0, 0, 2) == 6 * power_sum(s, 1, 2));
  CHECK(polarize(x11 * x12, 0, 0, 2).is_zero());
  CHECK_THROWS_AS(polarize(x11, 2, 0, 1), ShapeError);
  CHECK_THROWS_AS(polarize(x11, 0, 0, 0), DomainError);
}

TEST_CASE("diagonal permutation action") {
  Shape s(2, 2);
  auto swap = Permutation::transposition(2, 0, 1);
  CHECK(permute(x(s, 1, 1), swap) == x(s, 1, 2));
  CHECK(permute(x(s, 1, 1) * x(s, 2, 2), swap) == x(s, 1, 2) * x(s, 2, 1));
  Shape t(1, 4);
  std::mt19937 rng(3);
  for (int k = 0; k < 5; ++k) {
    auto sigma = random_permutation(rng, 4);
    CHECK(permute(power_sum(t, 1, 2), sigma) == power_sum(t, 1, 2));
  }
  CHECK_THROWS_AS(permute(x(s, 1, 1), Permutation::identity(3)), ShapeError);
  CHECK_THROWS_AS(Permutation({0, 0}), DomainError);
}

TEST_CASE("permutation composition") {
  Permutation s({1, 2, 0}), t({1, 0, 2});
  CHECK((s * t)(0) == s(t(0)));
  CHECK((s * s.inverse()) == Permutation::identity(3));
  Shape sh(1, 3);
  auto f = x(sh, 1, 1) * x(sh, 1, 1) * x(sh, 1, 2);
  CHECK(permute(permute(f, t), s) == permute(f, s * t));
}

TEST_CASE("orbits") {
  Shape s(1, 3);
  CHECK(orbit(power_sum(s, 1, 1)).size() == 1);
  auto o = orbit(x(s, 1, 1));
  CHECK(o.size() == 3);
  Shape t(1, 2);
  auto d = orbit(x(t, 1, 1) - x(t, 1, 2));
  REQUIRE(d.size() == 2);
  CHECK(d[0] == -d[1]);
}

TEST_CASE("matrix substitution") {
  Shape one(1, 1), two(2, 1);
  CHECK(matrix_substitute(x(one, 1, 1), RationalMatrix{{2}}) == 2 * x(one, 1, 1));
  CHECK(matrix_substitute(x(two, 1, 1), RationalMatrix::identity(2)) == x(two, 1, 1));
  CHECK(matrix_substitute(x(two, 1, 1), RationalMatrix{{0, 1}, {1, 0}}) == x(two, 2, 1));
  CHECK_THROWS_AS(matrix_substitute(x(two, 1, 1), RationalMatrix{{1}}), ShapeError);
}

TEST_CASE("equivariance of polarization and derivatives") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int rows = 1 + trial % 2, cols = 2 + trial % 3;
    Shape s(rows, cols);
    auto g = polaris::testing::random_polynomial(rng, s, 5, 4);
    auto sigma = random_permutation(rng, cols);
    int i = std::uniform_int_distribution<int>(0, rows - 1)(rng);
    int k = std::uniform_int_distribution<int>(0, rows - 1)(rng);
    int p = std::uniform_int_distribution<int>(1, 3)(rng);
    int j = std::uniform_int_distribution<int>(0, cols - 1)(rng);
    CHECK(permute(polarize(g, i, k, p), sigma) == polarize(permute(g, sigma), i, k, p));
    CHECK(permute(partial(g, i, j), sigma) == partial(permute(g, sigma), i, sigma(j)));
  }
}

TEST_CASE("degree laws and Euler identity") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Shape s(2, 3);
    std::vector<int> degree = {trial % 4, (trial / 4) % 3};
    auto f = polaris::testing::random_homogeneous(rng, s, degree, 4);
    if (f.is_zero()) continue;
    for (int i = 0; i < 2; ++i) {
      CHECK(polarize(f, i, i, 1) == Rational(degree[i]) * f);
      for (int p = 1; p <= 3; ++p) {
        auto g = polarize(f, 1 - i, i, p);
        if (!g.is_zero()) CHECK(g.total_degree() == f.total_degree() + 1 - p);
      }
      auto d = partial(f, i, 0);
      if (!d.is_zero()) CHECK(d.total_degree() == f.total_degree() - 1);
    }
  }
}

TEST_CASE("substitution composes as a right action") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    Shape s(2, 2);
    auto f = polaris::testing::random_polynomial(rng, s, 3, 3);
    RationalMatrix m(2, 2), n(2, 2);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        m(a, b) = polaris::testing::random_rational(rng, 3);
        n(a, b) = polaris::testing::random_rational(rng, 3);
      }
    }
    // f(MX) followed by X -> NX gives f(MNX).
    CHECK(matrix_substitute(matrix_substitute(f, m), n) == matrix_substitute(f, m * n));
  }
}
