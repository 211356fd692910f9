#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "polaris/errors.hpp"
#include "polaris/families.hpp"
#include "polaris/formulas.hpp"
#include "polaris/subspace.hpp"
#include "test_support.hpp"

using namespace polaris;
using polaris::testing::c;
using polaris::testing::x;

namespace {

// det(x_j^i) by the Leibniz expansion.
MatrixPolynomial leibniz_vandermonde(int n) {
  Shape s(1, n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MatrixPolynomial out(s);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    MatrixPolynomial term = c(s, inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term = term * power(x(s, 1, perm[i] + 1), i);
    out = out + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

long binomial(int a, int b) {
  long r = 1;
  for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

}  // namespace

TEST_CASE("named symmetric polynomials") {
  Shape s2(1, 2), s3(1, 3);
  CHECK(sym_poly(Basis::Power, {2}, 2) == x(s2, 1, 1) * x(s2, 1, 1) + x(s2, 1, 2) * x(s2, 1, 2));
  CHECK(sym_poly(Basis::Elementary, {2}, 3) ==
        x(s3, 1, 1) * x(s3, 1, 2) + x(s3, 1, 1) * x(s3, 1, 3) + x(s3, 1, 2) * x(s3, 1, 3));
  CHECK(sym_poly(Basis::Monomial, {2, 1}, 2) ==
        x(s2, 1, 1) * x(s2, 1, 1) * x(s2, 1, 2) + x(s2, 1, 2) * x(s2, 1, 2) * x(s2, 1, 1));
  CHECK_THROWS_AS(sym_poly(Basis::Elementary, {3}, 2), DomainError);
  CHECK_THROWS_AS(sym_poly(Basis::Monomial, {1, 1, 1}, 2), DomainError);
  CHECK_THROWS_AS(sym_poly(Basis::Schur, {1, 1, 1}, 2), DomainError);
  CHECK_THROWS_AS(sym_poly(Basis::Power, {1}, 0), DomainError);

  for (int n = 1; n <= 4; ++n) {
    auto p1 = sym_poly(Basis::Power, {1}, n);
    auto m = [&](const Partition& l) { return basis_polynomial(Basis::Monomial, l, n); };
    CHECK(power(p1, 2) == m({2}) + scale(m({1, 1}), 2));
    CHECK(sym_poly(Basis::Homogeneous, {2}, n) == m({2}) + m({1, 1}));
    for (int d = 1; d <= 4; ++d) {
      CHECK(power(sym_poly(Basis::Elementary, {1}, n), d) == power(p1, d));
      CHECK(sym_poly(Basis::Power, Partition(std::vector<int>(d, 1)), n) == power(p1, d));
    }
  }
}

TEST_CASE("vandermonde") {
  CHECK(vandermonde(1) == c(Shape(1, 1), 1));
  Shape s2(1, 2);
  CHECK(vandermonde(2) == x(s2, 1, 1) - x(s2, 1, 2));
  CHECK(vandermonde(3).terms().size() == 6);
  CHECK(vandermonde(3).total_degree() == 3);
  for (int n = 1; n <= 5; ++n) {
    auto v = vandermonde(n);
    const int sign = (n * (n - 1) / 2) % 2 ? -1 : 1;
    CHECK(scale(leibniz_vandermonde(n), sign) == v);
    for (int j = 0; j + 1 < n; ++j) CHECK(permute(v, Permutation::transposition(n, j, j + 1)) == -v);
  }
}

TEST_CASE("families") {
  Shape s(1, 2);
  auto x1 = x(s, 1, 1), x2 = x(s, 1, 2);
  CHECK(family(FamilyKind::A, 2, 2) == std::vector{x1 * x1, x2 * x2});
  CHECK(family(FamilyKind::B, 2, 2) == std::vector{x1 * x1 - x2 * x2});
  auto t = family(FamilyKind::T, 2, 2);
  std::sort(t.begin(), t.end());
  auto expected = std::vector{x1 * x1, x1 * x2, x2 * x2};
  std::sort(expected.begin(), expected.end());
  CHECK(t == expected);
  CHECK(family(FamilyKind::C, 2, 2) == std::vector{x1 * x2});
  CHECK_THROWS_AS(family(FamilyKind::C, 3, 2), DomainError);
  CHECK_THROWS_AS(family(FamilyKind::A, 0, 2), DomainError);

  for (int n = 1; n <= 5; ++n) {
    for (int d = 1; d <= 3; ++d) {
      for (auto kind : {FamilyKind::A, FamilyKind::B, FamilyKind::C, FamilyKind::T}) {
        if (kind == FamilyKind::C && d > n) continue;
        auto fam = family(kind, d, n);
        CHECK_NOTHROW(check_stable_family(fam));
        for (const auto& f : fam) CHECK(f.total_degree() == d);
      }
      CHECK(static_cast<long>(family(FamilyKind::T, d, n).size()) == binomial(n + d - 1, d));
      if (d <= n) CHECK(static_cast<long>(family(FamilyKind::C, d, n).size()) == binomial(n, d));
      CHECK(static_cast<long>(family(FamilyKind::B, d, n).size()) == binomial(n, 2));
    }
  }
}

TEST_CASE("generator grammar") {
  const int n = 3;
  auto p13 = power(sym_poly(Basis::Power, {1}, n), 3);
  auto single = [&](std::string_view text) {
    auto g = parse_generator(text, n);
    REQUIRE(g.members.size() == 1);
    return g.members.front();
  };
  CHECK(single("p[3]") == sym_poly(Basis::Power, {3}, n));
  CHECK(single("1*m[3]+3*m[2,1]+6*m[1,1,1]") == p13);
  CHECK(single(" 1 * m[3] + 3 m[2, 1] + 6*m[1,1,1] ") == p13);
  CHECK(single("[1:3:6]") == p13);
  CHECK(single("[2:6:12]") == scale(p13, 2));
  CHECK(single("p[1]^3") == p13);
  CHECK(single("e[1,1,1]") == p13);
  CHECK(single("e[1,2]") == sym_poly(Basis::Elementary, {2, 1}, n));
  CHECK(single("-p[2] + 1/2*e[2]") ==
        scale(sym_poly(Basis::Elementary, {2}, n), Rational(1, 2)) - sym_poly(Basis::Power, {2}, n));
  auto m = [&](const Partition& l) { return basis_polynomial(Basis::Monomial, l, n); };
  CHECK(single("[3:3:-2]") == scale(m({3}), 3) + scale(m({2, 1}), 3) - scale(m({1, 1, 1}), 2));

  auto g = parse_generator("h[3]", n);
  CHECK(g.symmetric);
  CHECK(g.degree == 3);
  auto v = parse_generator("vdm", n);
  CHECK_FALSE(v.symmetric);
  CHECK(v.members.size() == 2);
  auto a = parse_generator("A:2", n);
  CHECK(a.members == family(FamilyKind::A, 2, n));
  CHECK(a.degree == 2);
  CHECK_FALSE(a.symmetric);

  for (const char* bad : {"", "q[2]", "p[2", "p[]", "m[1,2]", "s[1,2]", "[1:2:3:4]", "2*", "p[2]p[1]",
                          "A:", "p[2]+", "1/0*p[2]", "p[0]"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_generator(bad, n), ParseError);
  }
  CHECK_THROWS_AS(parse_generator("e[4]", n), DomainError);
  CHECK_THROWS_AS(parse_generator("p[2]-p[2]", n), DomainError);
  CHECK_THROWS_AS(parse_generator("p[2]+p[3]", n), DomainError);
  CHECK_THROWS_AS(parse_generator("C:4", n), DomainError);
}
