#include "polaris/io.hpp"

#include <algorithm>

#include "polaris/errors.hpp"

namespace polaris {

namespace {

Json partition_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from(const Json& j) {
  auto parts = j.get<std::vector<int>>();
  if (!std::is_sorted(parts.rbegin(), parts.rend()) || (!parts.empty() && parts.back() <= 0)) {
    throw ParseError("not a partition: " + j.dump());
  }
  return Partition(parts);
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

Json to_json(const MatrixPolynomial& f) {
  Json terms = Json::array();
  const Shape s = f.shape();
  for (const auto& t : f.terms()) {
    Json rows = Json::array();
    for (int i = 0; i < s.rows(); ++i) {
      std::vector<int> row;
      for (int j = 0; j < s.cols(); ++j) row.push_back(t.exponent(i, j));
      rows.push_back(row);
    }
    terms.push_back({{"coef", to_string(t.coef)}, {"exponent", rows}});
  }
  return {{"rows", s.rows()}, {"cols", s.cols()}, {"terms", terms}};
}

MatrixPolynomial polynomial_from_json(const Json& j) {
  return guarded([&] {
    const Shape s(j.at("rows").get<int>(), j.at("cols").get<int>());
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      auto rows = t.at("exponent").get<std::vector<std::vector<int>>>();
      if (static_cast<int>(rows.size()) != s.rows()) throw ParseError("exponent row count does not match shape");
      for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != s.cols()) throw ParseError("exponent column count does not match shape");
      }
      terms.push_back({ExponentMatrix::from_rows(rows), parse_rational(t.at("coef").get<std::string>())});
    }
    return MatrixPolynomial(s, std::move(terms));
  });
}

Json to_json(const FrobeniusSeries& fs) {
  // Same order as the rendered text: lambda descending, then mu by size.
  std::vector<std::pair<std::pair<Partition, Partition>, long>> sorted(fs.entries.begin(), fs.entries.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return DisplayOrder{}(a.first.second, b.first.second);
  });
  Json entries = Json::array();
  for (const auto& [key, mult] : sorted) {
    entries.push_back({{"lambda", partition_json(key.first)}, {"mu", partition_json(key.second)}, {"mult", mult}});
  }
  return {{"n", fs.n}, {"ell", fs.ell}, {"complete", fs.complete}, {"entries", entries}};
}

FrobeniusSeries frobenius_from_json(const Json& j) {
  return guarded([&] {
    FrobeniusSeries fs;
    fs.n = j.at("n").get<int>();
    fs.ell = j.value("ell", 0);
    fs.complete = j.value("complete", false);
    for (const auto& e : j.at("entries")) {
      auto lambda = partition_from(e.at("lambda"));
      if (lambda.size() != fs.n) throw ParseError("lambda " + to_string(lambda) + " is not a partition of n");
      const long mult = e.at("mult").get<long>();
      if (mult <= 0) throw ParseError("multiplicities are positive");
      fs.entries[{lambda, partition_from(e.at("mu"))}] = mult;
    }
    return fs;
  });
}

Json to_json(const Verdict& v) {
  Json point = Json::array();
  for (const auto& c : v.point.coords()) point.push_back(to_string(c));
  Json out{{"point", point},
           {"degree", v.point.degree()},
           {"n", v.n},
           {"exception", v.exception},
           {"iso_type", to_string(v.iso_type)},
           {"verified_by_module", nullptr}};
  if (v.verified_by_module) {
    out["verified_by_module"] = *v.verified_by_module;
    out["ell"] = v.ell;
    out["discrepancy"] = v.discrepancy;
  }
  if (v.series) out["series"] = to_json(*v.series);
  return out;
}

Json to_json(const CheckResult& r) {
  Json out{{"suite", r.suite}, {"id", r.id},         {"citation", r.citation}, {"status", to_string(r.status)},
           {"gating", r.gating}, {"n", r.n},         {"ell", r.ell},           {"passed", r.passed},
           {"detail", r.detail}};
  if (!r.computed.empty()) out["computed"] = r.computed;
  if (!r.expected.empty()) out["expected"] = r.expected;
  return out;
}

Json dimensions_json(const GradedSubspace& v) {
  Json graded = Json::array();
  for (const auto& [degree, dim] : v.graded_dimensions()) {
    graded.push_back({{"degree", degree.values()}, {"dim", dim}});
  }
  return {{"n", v.shape().cols()}, {"ell", v.shape().rows()}, {"dimension", v.dimension()}, {"graded", graded}};
}

Json hilbert_json(const QPolynomial& h, int n) {
  Json terms = Json::array();
  for (const auto& t : h.terms()) {
    std::vector<int> degree;
    for (int j = 0; j < h.shape().cols(); ++j) degree.push_back(t.exponent(0, j));
    terms.push_back({{"degree", degree}, {"dim", to_string(t.coef)}});
  }
  return {{"n", n}, {"ell", h.shape().cols()}, {"text", to_q_string(h)}, {"terms", terms}};
}

}  // namespace polaris
