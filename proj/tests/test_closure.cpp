#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polaris/subspace.hpp"
#include "test_support.hpp"

using namespace polaris;
using polaris::testing::c;
using polaris::testing::x;

namespace {

// Independent fixed point: apply every operator to every basis vector and
// rebuild the span from scratch until the dimension stops growing.
GradedSubspace naive_closure(const GradedSubspace& seed, bool derivatives,
                             int max_order) {
  GradedSubspace v = seed;
  const Shape s = seed.shape();
  while (true) {
    std::vector<MatrixPolynomial> all = v.basis();
    for (const auto& b : v.basis()) {
      if (derivatives) {
        for (int i = 0; i < s.rows(); ++i) {
          for (int j = 0; j < s.cols(); ++j) all.push_back(partial(b, i, j));
        }
      }
      for (int i = 0; i < s.rows(); ++i) {
        for (int k = 0; k < s.rows(); ++k) {
          for (int p = 1; p <= max_order; ++p) all.push_back(polarize(b, i, k, p));
        }
      }
    }
    GradedSubspace next = span(all, s);
    if (next.dimension() == v.dimension()) return next;
    v = std::move(next);
  }
}

MatrixPolynomial sum_over_columns(Shape s, auto term) {
  MatrixPolynomial p(s);
  for (int j = 1; j <= s.cols(); ++j) p = p + term(j);
  return p;
}

PolarizationModule module_of(const MatrixPolynomial& f, int rows) {
  auto fam = orbit(f);
  return polarization_module(fam, rows);
}

}  // namespace

TEST_CASE("span") {
  Shape s(1, 2);
  std::vector<MatrixPolynomial> a = {x(s, 1, 1), 2 * x(s, 1, 1)};
  auto v = span(a, s);
  CHECK(v.dimension() == 1);
  CHECK(v.graded_dimensions().at(MultiDegree({1})) == 1);
  std::vector<MatrixPolynomial> b = {x(s, 1, 1) + x(s, 1, 2), x(s, 1, 1) - x(s, 1, 2)};
  CHECK(span(b, s).dimension() == 2);
  CHECK(span(std::vector<MatrixPolynomial>{}, s).dimension() == 0);
  std::vector<MatrixPolynomial> bad = {x(s, 1, 1) + c(s, 1)};
  CHECK_THROWS_AS(span(bad, s), DomainError);
}

TEST_CASE("insert and contains") {
  Shape s(1, 2);
  std::vector<MatrixPolynomial> a = {x(s, 1, 1)};
  auto [same, changed] = insert(span(a, s), x(s, 1, 1));
  CHECK_FALSE(changed);
  CHECK(same.dimension() == 1);
  auto [bigger, grew] = insert(span(a, s), x(s, 1, 2));
  CHECK(grew);
  CHECK(bigger.dimension() == 2);
  std::vector<MatrixPolynomial> d = {x(s, 1, 1) + x(s, 1, 2)};
  CHECK_FALSE(contains(span(d, s), x(s, 1, 1) - x(s, 1, 2)));
  CHECK(contains(span(d, s), 3 * x(s, 1, 1) + 3 * x(s, 1, 2)));
  CHECK_THROWS_AS(insert(span(d, s), x(s, 1, 1) + c(s, 1)), DomainError);
}

TEST_CASE("echelon basis is reduced and normalized") {
  Shape s(1, 3);
  std::vector<MatrixPolynomial> gens = {x(s, 1, 1) + 2 * x(s, 1, 2) + x(s, 1, 3),
                                        3 * x(s, 1, 2) - x(s, 1, 3),
                                        x(s, 1, 1) + 5 * x(s, 1, 2)};
  auto v = span(gens, s);
  auto basis = v.component(MultiDegree({1}));
  REQUIRE(basis.size() == 2);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    CHECK(basis[k].leading_term().coef == 1);
    for (std::size_t m = 0; m < basis.size(); ++m) {
      if (m != k) CHECK(basis[m].coefficient(basis[k].leading_term().exponent) == 0);
    }
    if (k + 1 < basis.size()) {
      CHECK(basis[k].leading_term().exponent > basis[k + 1].leading_term().exponent);
    }
  }
}

TEST_CASE("derivative closure") {
  Shape s(1, 1);
  std::vector<MatrixPolynomial> sq = {x(s, 1, 1) * x(s, 1, 1)};
  auto d = derivative_closure(span(sq, s));
  CHECK(d.dimension() == 3);
  for (int k = 0; k <= 2; ++k) CHECK(d.graded_dimensions().at(MultiDegree({k})) == 1);
  CHECK(derivative_closure(GradedSubspace(s)).dimension() == 0);
  Shape t(1, 2);
  std::vector<MatrixPolynomial> prod = {x(t, 1, 1) * x(t, 1, 2)};
  CHECK(derivative_closure(span(prod, t)).dimension() == 4);
}

TEST_CASE("polarization closure") {
  Shape s(2, 1);
  std::vector<MatrixPolynomial> one = {x(s, 1, 1)};
  auto e = polarization_closure(span(one, s), 1);
  CHECK(e.dimension() == 2);
  CHECK(e.graded_dimensions().at(MultiDegree({1, 0})) == 1);
  CHECK(e.graded_dimensions().at(MultiDegree({0, 1})) == 1);
  CHECK(polarization_closure(GradedSubspace(s), 1).dimension() == 0);

  Shape t(2, 2);
  std::vector<MatrixPolynomial> p2 = {
      sum_over_columns(t, [&](int j) { return x(t, 1, j) * x(t, 1, j); })};
  auto seed = span(p2, t);
  auto closed = polarization_closure(seed, 2);
  CHECK(closed.contains(sum_over_columns(t, [&](int j) { return x(t, 1, j) * x(t, 2, j); })));
  CHECK(closed.contains(sum_over_columns(t, [&](int j) { return x(t, 2, j) * x(t, 2, j); })));
  CHECK(closed.contains(sum_over_columns(t, [&](int j) { return x(t, 1, j); })));
  CHECK(closed == naive_closure(seed, false, 2));
  CHECK_THROWS_AS(polarization_closure(seed, 1), DomainError);
}

TEST_CASE("polarization modules of small generators") {
  Shape s(1, 2);
  auto e1 = x(s, 1, 1) + x(s, 1, 2);
  auto m = module_of(e1, 2);
  CHECK(m.space.dimension() == 3);
  CHECK(to_q_string(hilbert_polynomial(m.space)) == "1 + q1 + q2");

  auto delta = x(s, 1, 1) - x(s, 1, 2);
  CHECK(module_of(delta, 1).space.dimension() == 2);
  CHECK(module_of(delta, 2).space.dimension() == 3);

  auto p2 = x(s, 1, 1) * x(s, 1, 1) + x(s, 1, 2) * x(s, 1, 2);
  auto mp = module_of(p2, 1);
  CHECK(to_q_string(hilbert_polynomial(mp.space)) == "1 + 2q + q^2");
  auto e2 = x(s, 1, 1) * x(s, 1, 2);
  CHECK(to_q_string(hilbert_polynomial(module_of(e2, 1).space)) == "1 + 2q + q^2");
  CHECK(to_q_string(hilbert_polynomial(GradedSubspace(Shape(2, 2)))) == "0");
}

TEST_CASE("degenerate families") {
  Shape s(1, 3);
  std::vector<MatrixPolynomial> none;
  CHECK(polarization_module(none, 2).space.dimension() == 0);
  std::vector<MatrixPolynomial> zero = {MatrixPolynomial(s)};
  CHECK(polarization_module(zero, 2).space.dimension() == 0);
  std::vector<MatrixPolynomial> constant = {c(s, 5)};
  auto m = polarization_module(constant, 2);
  CHECK(m.space.dimension() == 1);
  CHECK(m.space.graded_dimensions().at(MultiDegree({0, 0})) == 1);
}

TEST_CASE("family validation") {
  Shape s(1, 3);
  std::vector<MatrixPolynomial> unstable = {x(s, 1, 1)};
  try {
    polarization_module(unstable, 1);
    FAIL("expected UnstableFamilyError");
  } catch (const UnstableFamilyError& e) {
    CHECK(e.member() == x(s, 1, 1));
    CHECK_FALSE(span(unstable, s).contains(permute(e.member(), e.permutation())));
  }
  std::vector<MatrixPolynomial> inhomogeneous = {x(s, 1, 1) + x(s, 1, 2) + x(s, 1, 3) + c(s, 1)};
  CHECK_THROWS_AS(polarization_module(inhomogeneous, 1), DomainError);
}

TEST_CASE("closure commutation E(D(V)) = D(E(V))") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = 1 + trial % 2, cols = 1 + (trial / 2) % 3;
    Shape s(rows, cols);
    std::vector<MatrixPolynomial> seeds;
    int top = 0;
    for (int k = 0; k < 2; ++k) {
      std::vector<int> degree(rows, 0);
      degree[0] = 1 + (trial + k) % 3;
      if (rows == 2 && k == 1) std::swap(degree[0], degree[1]);
      top = std::max(top, degree[0] + (rows == 2 ? degree[1] : 0));
      seeds.push_back(polaris::testing::random_homogeneous(rng, s, degree, 3));
    }
    auto v = span(seeds, s);
    int order = std::max(1, v.max_total_degree());
    auto ed = polarization_closure(derivative_closure(v), order);
    auto de = derivative_closure(polarization_closure(v, order));
    CHECK(ed.graded_dimensions() == de.graded_dimensions());
    CHECK(ed == de);
  }
}

TEST_CASE("worklist agrees with the naive fixed point") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Shape s(2, 2);
    std::vector<MatrixPolynomial> seeds = {
        polaris::testing::random_homogeneous(rng, s, {2, 1}, 3)};
    auto v = span(seeds, s);
    auto fast = polarization_closure(derivative_closure(v), 3);
    CHECK(fast == naive_closure(v, true, 3));
  }
}

TEST_CASE("module invariants: stability, GL-closure, idempotence, determinism") {
  Shape s(1, 3);
  auto x1 = x(s, 1, 1), x2 = x(s, 1, 2), x3 = x(s, 1, 3);
  auto vdm = (x1 - x2) * (x1 - x3) * (x2 - x3);
  auto fam = orbit(vdm);
  auto m = polarization_module(fam, 2);
  CHECK(m.space.dimension() == 16);
  CHECK(m.report.dimension == 16);
  CHECK(m.generator_degree == 3);

  for (const auto& b : m.space.basis()) {
    for (int j = 0; j + 1 < 3; ++j) {
      CHECK(m.space.contains(permute(b, Permutation::transposition(3, j, j + 1))));
    }
    CHECK(m.space.contains(matrix_substitute(b, RationalMatrix{{2, 1}, {-1, 3}})));
  }

  auto basis = m.space.basis();
  auto again = polarization_module(basis, 2);
  CHECK(again.space.graded_dimensions() == m.space.graded_dimensions());

  auto parallel = polarization_module(fam, 2, ClosureOptions{3});
  CHECK(parallel.space == m.space);
}

TEST_CASE("rank") {
  Shape s(1, 2);
  std::vector<MatrixPolynomial> polys = {x(s, 1, 1), x(s, 1, 2), x(s, 1, 1) + x(s, 1, 2),
                                         c(s, 1)};
  CHECK(rank(polys) == 3);
  CHECK(rank(std::span<const MatrixPolynomial>{}) == 0);
}
