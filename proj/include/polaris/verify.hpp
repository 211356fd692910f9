#pragma once

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "polaris/formulas.hpp"
#include "polaris/frobenius.hpp"
#include "polaris/subspace.hpp"

namespace polaris {

/// A polarization module with its series, built from generator text.
struct ComputedModule {
  std::string generator;
  int n = 0;
  int ell = 0;
  std::vector<MatrixPolynomial> family;
  PolarizationModule module;
  FrobeniusSeries series;
  QPolynomial hilbert;
  double seconds = 0;
};

/// Memoizes modules by (generator, n, ell). Observers run once per newly
/// computed module, in computation order.
class ModuleCache {
 public:
  using Observer = std::function<void(const ComputedModule&)>;

  explicit ModuleCache(unsigned jobs = 1) : jobs_(jobs) {}

  void on_module(Observer observer) { observers_.push_back(std::move(observer)); }
  const ComputedModule& get(const std::string& generator, int n, int ell);
  std::vector<const ComputedModule*> modules() const;
  std::size_t size() const { return cache_.size(); }
  unsigned jobs() const { return jobs_; }

 private:
  unsigned jobs_;
  std::vector<Observer> observers_;
  std::map<std::tuple<std::string, int, int>, std::unique_ptr<ComputedModule>> cache_;
  std::vector<const ComputedModule*> order_;
};

struct CheckResult {
  std::string suite;
  std::string id;
  std::string citation;
  Status status = Status::Theorem;
  /// A failure of a gating check is a hard failure.
  bool gating = true;
  int n = 0;
  int ell = 0;
  bool passed = false;
  /// Discrepancy or note.
  std::string detail;
  /// Rendered series, filled for failed checks.
  std::string computed;
  std::string expected;
};

inline bool hard_failure(const CheckResult& r) { return r.gating && !r.passed; }

struct SuiteOptions {
  int max_n = 4;
  int max_ell = 2;
  int max_degree = 3;
  /// Random points per sampled family of checks.
  int samples = 5;
  unsigned seed = 1;
};

/// closed-forms, degree-2, degree-3, exceptions, monomials-3, degree-4,
/// degree-5, families, conjectures.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws DomainError on an unknown name. The conjectures
/// suite also checks h-positivity of every Hilbert series in the cache.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& options, ModuleCache& cache);

/// Compares a computed module against a fixture at its n and ell.
CheckResult check_fixture(const Fixture& fx, const ComputedModule& m);

/// Random nonzero point with small rational coordinates.
std::vector<Rational> random_point(std::mt19937& rng, int degree);

/// "[1:-2/3]" in generator syntax.
std::string point_text(const std::vector<Rational>& coords);

}  // namespace polaris
