#include <CLI11.hpp>

#include <iostream>
#include <regex>
#include <set>

#include "polaris/classify.hpp"
#include "polaris/errors.hpp"
#include "polaris/families.hpp"
#include "polaris/io.hpp"
#include "polaris/verify.hpp"

using namespace polaris;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitConsistency = 4;

struct Guards {
  int max_n = 6;
  int max_ell = 3;
  int max_degree = 6;
  bool allow_large = false;

  void check(int n, int ell, int degree) const {
    if (n < 1) throw InfeasibleError("--n must be at least 1");
    if (ell < 1) throw InfeasibleError("--l must be at least 1");
    if (allow_large) return;
    if (n > max_n) throw InfeasibleError("n = " + std::to_string(n) + " exceeds the ceiling " + std::to_string(max_n));
    if (ell > max_ell) {
      throw InfeasibleError("l = " + std::to_string(ell) + " exceeds the ceiling " + std::to_string(max_ell));
    }
    if (degree > max_degree) {
      throw InfeasibleError("generator degree " + std::to_string(degree) + " exceeds the ceiling " +
                            std::to_string(max_degree));
    }
  }
};

struct Job {
  std::vector<std::string> generators;
  std::string family;
  int n = 3;
  int ell = 1;
  std::string format = "text";
  std::vector<std::string> show;
  bool verify = false;
  std::string style = "schur";
};

std::vector<std::string> job_generators(const Job& job) {
  std::vector<std::string> out = job.generators;
  if (!job.family.empty()) {
    if (!std::regex_match(job.family, std::regex("[ABCT]:[0-9]+"))) {
      throw ParseError("--family expects A:d, B:d, C:d or T:d, got '" + job.family + "'");
    }
    out.push_back(job.family);
  }
  if (out.empty()) throw ParseError("give a generator with --gen or --family");
  return out;
}

Generator load(const std::string& text, const Job& job, const Guards& guards) {
  guards.check(job.n, job.ell, 0);
  auto g = parse_generator(text, job.n);
  guards.check(job.n, job.ell, g.degree);
  return g;
}

std::string latex_label(const std::string& text) {
  std::string out = std::regex_replace(text, std::regex(R"(\[([0-9,]*)\])"), "_{$1}");
  out = std::regex_replace(out, std::regex(","), "");
  out = std::regex_replace(out, std::regex(R"(\^([0-9]+))"), "^{$1}");
  return "$" + std::regex_replace(out, std::regex(R"(\*)"), "") + "$";
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_module(const Job& job, const Guards& guards, unsigned jobs) {
  const auto text = job_generators(job).front();
  auto g = load(text, job, guards);
  auto m = polarization_module(g.members, job.ell, ClosureOptions{jobs});
  std::set<std::string> show(job.show.begin(), job.show.end());
  if (show.empty()) show = {"dims", "hilbert"};
  for (const auto& s : show) {
    if (s != "dims" && s != "hilbert" && s != "frobenius" && s != "basis") {
      throw ParseError("--show accepts dims, hilbert, frobenius, basis");
    }
  }
  const auto hilbert = hilbert_polynomial(m.space);
  std::optional<FrobeniusSeries> fs;
  if (show.count("frobenius")) fs = frobenius_series(m.space, FrobeniusOptions{jobs});

  if (job.format == "json") {
    Json out{{"generator", text}, {"n", job.n}, {"ell", job.ell}};
    if (show.count("dims")) out["dims"] = dimensions_json(m.space);
    if (show.count("hilbert")) out["hilbert"] = hilbert_json(hilbert, job.n);
    if (fs) out["frobenius"] = to_json(*fs);
    if (show.count("basis")) {
      Json basis = Json::array();
      for (const auto& b : m.space.basis()) basis.push_back(to_json(b));
      out["basis"] = basis;
    }
    print_json(out);
    return 0;
  }
  if (show.count("dims")) {
    std::cout << "dimension " << m.space.dimension() << "\n";
    for (const auto& [degree, dim] : m.space.graded_dimensions()) {
      std::cout << "  " << to_string(degree) << " " << dim << "\n";
    }
  }
  if (show.count("hilbert")) std::cout << "hilbert " << to_q_string(hilbert) << "\n";
  if (fs) std::cout << "frobenius " << render(*fs) << "\n";
  if (show.count("basis")) {
    for (const auto& b : m.space.basis()) std::cout << "  " << to_string(b) << "\n";
  }
  return 0;
}

int run_frobenius(const Job& job, const Guards& guards, unsigned jobs) {
  const auto style = job.style == "hh" ? RenderStyle::HH : RenderStyle::SchurSchur;
  if (job.style != "hh" && job.style != "schur") throw ParseError("--style accepts schur or hh");
  const auto texts = job_generators(job);
  Json rows = Json::array();
  std::vector<std::string> lines;
  for (const auto& text : texts) {
    auto g = load(text, job, guards);
    auto m = polarization_module(g.members, job.ell, ClosureOptions{jobs});
    auto fs = frobenius_series(m.space, FrobeniusOptions{jobs});
    if (job.format == "json") {
      Json row = to_json(fs);
      row["generator"] = text;
      rows.push_back(row);
    } else if (job.format == "latex") {
      lines.push_back(render_latex_row(fs, latex_label(text), style));
    } else {
      lines.push_back((texts.size() > 1 ? text + ": " : "") + render(fs, style));
    }
  }
  if (job.format == "json") {
    print_json(texts.size() == 1 ? rows.front() : rows);
  } else if (job.format == "latex") {
    std::cout << "\\begin{tabular}{|c|c|}\n\\hline\nFrobenius characteristic & generator \\\\ \\hline\n";
    for (const auto& l : lines) std::cout << l << "\n";
    std::cout << "\\end{tabular}\n";
  } else {
    for (const auto& l : lines) std::cout << l << "\n";
  }
  return 0;
}

int run_hilbert(const Job& job, const Guards& guards, unsigned jobs) {
  const auto text = job_generators(job).front();
  auto g = load(text, job, guards);
  auto m = polarization_module(g.members, job.ell, ClosureOptions{jobs});
  const auto h = hilbert_polynomial(m.space);
  if (job.format == "json") {
    print_json(hilbert_json(h, job.n));
  } else {
    std::cout << to_q_string(h) << "\n";
  }
  return 0;
}

MatrixPolynomial single_symmetric(const Job& job, const Guards& guards) {
  const auto text = job_generators(job).front();
  auto g = load(text, job, guards);
  if (!g.symmetric || g.members.size() != 1) throw DomainError("'" + text + "' is not a single symmetric polynomial");
  return g.members.front();
}

int run_classify(const Job& job, const Guards& guards, unsigned jobs) {
  const auto f = single_symmetric(job, guards);
  const auto v = classify(f, ClassifyOptions{job.ell, job.verify, jobs});
  if (job.format == "json") {
    print_json(to_json(v));
  } else {
    std::cout << "point " << to_string(v.point) << "\n"
              << "n " << v.n << "\n"
              << "exception " << (v.exception ? "true" : "false") << "\n"
              << "iso_type " << to_string(v.iso_type) << "\n";
    if (v.verified_by_module) {
      std::cout << "verified_by_module " << (*v.verified_by_module ? "true" : "false") << " (l = " << v.ell << ")\n";
      if (!v.discrepancy.empty()) std::cout << "discrepancy " << v.discrepancy << "\n";
    }
    if (v.series) std::cout << "frobenius " << render(*v.series) << "\n";
  }
  return v.verified_by_module.value_or(true) ? 0 : kExitConsistency;
}

int run_exception(const Job& job, const Guards& guards) {
  const auto f = single_symmetric(job, guards);
  const bool e = is_exception(f);
  const auto p = projective_point(f);
  if (job.format == "json") {
    Json point = Json::array();
    for (const auto& c : p.coords()) point.push_back(to_string(c));
    print_json({{"point", point}, {"n", job.n}, {"exception", e}});
  } else {
    std::cout << to_string(p) << " n=" << job.n << " " << (e ? "exception" : "not an exception") << "\n";
  }
  return 0;
}

struct VerifyJob {
  std::vector<std::string> suites;
  SuiteOptions options;
  std::string format = "text";
  bool quiet = false;
};

int run_verify(const VerifyJob& job, const Guards& guards, unsigned jobs) {
  guards.check(job.options.max_n, job.options.max_ell, job.options.max_degree);
  std::vector<std::string> suites = job.suites;
  if (suites.empty() || (suites.size() == 1 && suites.front() == "all")) suites = suite_names();
  for (const auto& s : suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw ParseError("unknown suite '" + s + "'");
    }
  }
  ModuleCache cache(jobs);
  Json report = Json::array();
  int hard = 0;
  for (const auto& suite : suites) {
    const auto results = run_suite(suite, job.options, cache);
    int passed = 0, reported = 0;
    for (const auto& r : results) {
      passed += r.passed;
      hard += hard_failure(r);
      if (!r.passed && !r.gating) ++reported;
      if (job.format == "json") {
        report.push_back(to_json(r));
        continue;
      }
      if (job.quiet && r.passed) continue;
      std::cout << (r.passed ? "PASS" : r.gating ? "FAIL" : "DIFF") << " " << suite << " " << r.id << " n=" << r.n
                << " l=" << r.ell << " [" << to_string(r.status) << "]";
      if (!r.detail.empty()) std::cout << " " << r.detail;
      std::cout << "\n";
      if (!r.passed && !r.computed.empty()) {
        std::cout << "  computed: " << r.computed << "\n  expected: " << r.expected << "\n";
      }
    }
    if (job.format != "json") {
      std::cout << "suite " << suite << ": " << passed << "/" << results.size() << " passed";
      if (reported) std::cout << ", " << reported << " reported differences";
      std::cout << "\n";
    }
  }
  if (job.format == "json") print_json(report);
  return hard ? 1 : 0;
}

void add_job_options(CLI::App* cmd, Job& job, bool multi) {
  if (multi) {
    cmd->add_option("--gen", job.generators, "Generator expression (repeatable)")->allow_extra_args(false);
  } else {
    cmd->add_option("--gen", job.generators, "Generator expression")->expected(1)->allow_extra_args(false);
  }
  cmd->add_option("--family", job.family, "Family A:d, B:d, C:d or T:d");
  cmd->add_option("--n", job.n, "Number of variables per row");
  cmd->add_option("--l", job.ell, "Number of rows of variables");
  cmd->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polarization modules of symmetric polynomials"};
  app.require_subcommand(1);
  Guards guards;
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--allow-large", guards.allow_large, "Lift the n, l and degree ceilings");
  app.add_option("--max-n-guard", guards.max_n, "Ceiling on n");
  app.add_option("--max-l-guard", guards.max_ell, "Ceiling on l");

  Job module_job, frob_job, hilbert_job, classify_job, exception_job;
  auto* module_cmd = app.add_subcommand("module", "Build a module and print its invariants");
  add_job_options(module_cmd, module_job, false);
  module_cmd->add_option("--show", module_job.show, "dims, hilbert, frobenius, basis")->delimiter(',');
  module_cmd->add_option("--max-degree", guards.max_degree, "Ceiling on the generator degree");

  auto* frob_cmd = app.add_subcommand("frobenius", "Graded Frobenius characteristic");
  add_job_options(frob_cmd, frob_job, true);
  frob_cmd->add_option("--style", frob_job.style, "schur or hh");
  frob_cmd->add_option("--max-degree", guards.max_degree, "Ceiling on the generator degree");

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series");
  add_job_options(hilbert_cmd, hilbert_job, false);
  hilbert_cmd->add_option("--max-degree", guards.max_degree, "Ceiling on the generator degree");

  auto* classify_cmd = app.add_subcommand("classify", "Projective point, exception test and isomorphism type");
  add_job_options(classify_cmd, classify_job, false);
  classify_cmd->add_flag("--verify", classify_job.verify, "Compute the module and compare with the branch formula");

  auto* exception_cmd = app.add_subcommand("exception", "Rank test for n-exceptions");
  add_job_options(exception_cmd, exception_job, false);

  VerifyJob verify_job;
  verify_job.options.max_n = 4;
  auto* verify_cmd = app.add_subcommand("verify", "Replay the stated formulas against computed modules");
  verify_cmd->add_option("--suite", verify_job.suites, "Suite name or all (repeatable)");
  verify_cmd->add_option("--max-n", verify_job.options.max_n, "Largest n");
  verify_cmd->add_option("--max-l", verify_job.options.max_ell, "Largest l");
  verify_cmd->add_option("--max-degree", verify_job.options.max_degree, "Largest degree");
  verify_cmd->add_option("--samples", verify_job.options.samples, "Random points per sampled check");
  verify_cmd->add_option("--seed", verify_job.options.seed, "Random seed");
  verify_cmd->add_option("--format", verify_job.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--quiet", verify_job.quiet, "Print only failures and summaries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*module_cmd) return run_module(module_job, guards, jobs);
    if (*frob_cmd) return run_frobenius(frob_job, guards, jobs);
    if (*hilbert_cmd) return run_hilbert(hilbert_job, guards, jobs);
    if (*classify_cmd) return run_classify(classify_job, guards, jobs);
    if (*exception_cmd) return run_exception(exception_job, guards);
    if (*verify_cmd) return run_verify(verify_job, guards, jobs);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const Error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  }
  return 0;
}
