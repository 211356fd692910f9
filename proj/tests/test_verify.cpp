#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polaris/errors.hpp"
#include "polaris/families.hpp"
#include "polaris/io.hpp"
#include "polaris/verify.hpp"
#include "test_support.hpp"

using namespace polaris;

TEST_CASE("module cache") {
  ModuleCache cache;
  int computed = 0;
  cache.on_module([&](const ComputedModule& m) {
    ++computed;
    CHECK(hilbert_from_frobenius(m.series, m.ell) == m.hilbert);
  });
  const auto& a = cache.get("p[2]", 3, 2);
  const auto& b = cache.get("p[2]", 3, 2);
  CHECK(&a == &b);
  CHECK(computed == 1);
  CHECK(a.module.space.dimension() == 10);
  cache.get("p[2]", 3, 1);
  CHECK(computed == 2);
  CHECK(cache.size() == 2);
  CHECK(cache.modules().front() == &a);
  CHECK_THROWS_AS(cache.get("p[2", 3, 1), ParseError);
  CHECK(cache.size() == 2);
}

TEST_CASE("fixture checks") {
  ModuleCache cache;
  const auto fixtures = degree2_fixtures();
  const auto& m = cache.get("p[2]", 3, 2);
  auto ok = check_fixture(fixtures[1], m);
  CHECK(ok.passed);
  CHECK(ok.detail.empty());
  CHECK(ok.computed.empty());
  auto bad = check_fixture(fixtures[0], m);
  CHECK_FALSE(bad.passed);
  CHECK(bad.detail == "+1 s[1](q) s[2,1](w)");
  CHECK(bad.computed == render(m.series));
  CHECK(bad.expected == "(1 + s[1](q) + s[2](q)) s[3](w)");
  CHECK(hard_failure(bad));
}

TEST_CASE("points") {
  std::mt19937 rng(3);
  for (int d = 1; d <= 5; ++d) {
    auto p = random_point(rng, d);
    CHECK(p.size() == partitions_of(d).size());
    auto g = parse_generator(point_text(p), 5);
    CHECK(g.degree == d);
  }
  CHECK(point_text({1, Rational(-2, 3), 0}) == "[1:-2/3:0]");
}

TEST_CASE("suites") {
  CHECK(suite_names().size() == 9);
  ModuleCache cache;
  SuiteOptions o;
  o.max_n = 3;
  o.samples = 2;
  CHECK_THROWS_AS(run_suite("nonsense", o, cache), DomainError);

  for (const auto& name : {"closed-forms", "degree-2", "degree-3", "monomials-3", "degree-4"}) {
    CAPTURE(name);
    for (const auto& r : run_suite(name, o, cache)) {
      CAPTURE(r.id);
      CHECK(r.suite == name);
      CHECK_FALSE(hard_failure(r));
    }
  }
  auto tables = run_suite("degree-4", o, cache);
  REQUIRE(tables.size() == 1);
  CHECK(tables.front().id == "skipped");

  auto exceptions = run_suite("exceptions", o, cache);
  int grids = 0;
  for (const auto& r : exceptions) {
    CAPTURE(r.id);
    CAPTURE(r.n);
    if (r.id == "criterion vs rank") ++grids;
    if (r.id == "[0:0:1] exception" && r.n == 2) {
      CHECK_FALSE(r.gating);
    } else {
      CHECK(r.passed);
    }
  }
  CHECK(grids == 5);

  const std::size_t before = cache.size();
  auto conj = run_suite("conjectures", o, cache);
  CHECK(cache.size() > before);
  int positivity = 0;
  for (const auto& r : conj) {
    CHECK(r.status == Status::Conjecture);
    CHECK_FALSE(r.gating);
    positivity += r.id.starts_with("h-positive ");
  }
  CHECK(positivity == static_cast<int>(cache.size()));
}

TEST_CASE("suites are deterministic") {
  SuiteOptions o;
  o.max_n = 3;
  o.samples = 3;
  ModuleCache a, b(3);
  auto ra = run_suite("degree-3", o, a);
  auto rb = run_suite("degree-3", o, b);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t k = 0; k < ra.size(); ++k) {
    CHECK(ra[k].id == rb[k].id);
    CHECK(to_json(ra[k]) == to_json(rb[k]));
  }
}

TEST_CASE("json round trips") {
  std::mt19937 rng(8);
  for (int k = 0; k < 10; ++k) {
    auto f = polaris::testing::random_polynomial(rng, Shape(2, 3), 4, 3);
    CHECK(polynomial_from_json(to_json(f)) == f);
    CHECK(polynomial_from_json(Json::parse(to_json(f).dump())) == f);
  }
  ModuleCache cache;
  const auto& m = cache.get("h[3]", 4, 2);
  const auto j = to_json(m.series);
  CHECK(frobenius_from_json(j) == m.series);
  CHECK(j["entries"][0]["lambda"] == Json::array({4}));
  CHECK(j["entries"][0]["mu"] == Json::array());

  CHECK_THROWS_AS(frobenius_from_json(Json::parse(R"({"entries": []})")), ParseError);
  CHECK_THROWS_AS(frobenius_from_json(Json::parse(R"({"n": 2, "entries": [{"lambda": [1,2], "mu": [], "mult": 1}]})")),
                  ParseError);
  CHECK_THROWS_AS(frobenius_from_json(Json::parse(R"({"n": 2, "entries": [{"lambda": [2], "mu": [], "mult": 0}]})")),
                  ParseError);
  CHECK_THROWS_AS(frobenius_from_json(Json::parse(R"({"n": 3, "entries": [{"lambda": [2], "mu": [], "mult": 1}]})")),
                  ParseError);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"rows": 1, "cols": 2, "terms": [{"coef": "x", "exponent": [[1,0]]}]})")),
                  ParseError);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"rows": 1, "cols": 2, "terms": [{"coef": "1", "exponent": [[1]]}]})")),
                  ParseError);
}

TEST_CASE("verdict json") {
  auto v = classify(sym_poly(Basis::Power, {1, 1, 1}, 3), ClassifyOptions{1, true, 1});
  auto j = to_json(v);
  CHECK(j["point"] == Json::array({"1", "3", "6"}));
  CHECK(j["iso_type"] == "P1_POWER");
  CHECK(j["verified_by_module"] == true);
  CHECK(j["exception"] == false);
  auto plain = to_json(classify(sym_poly(Basis::Power, {3}, 3)));
  CHECK(plain["verified_by_module"].is_null());
  CHECK(plain["exception"] == true);
}
