#pragma once

#include <json.hpp>

#include "polaris/classify.hpp"
#include "polaris/frobenius.hpp"
#include "polaris/verify.hpp"

namespace polaris {

using Json = nlohmann::ordered_json;

/// Rationals are written as strings ("3", "-2/3") to stay exact.
Json to_json(const MatrixPolynomial& f);
Json to_json(const FrobeniusSeries& fs);
Json to_json(const Verdict& v);
Json to_json(const CheckResult& r);
/// Graded dimensions of a module: {"n","ell","dimension","graded":[...]}.
Json dimensions_json(const GradedSubspace& v);
Json hilbert_json(const QPolynomial& h, int n);

/// Inverse of to_json; throws ParseError on malformed documents.
MatrixPolynomial polynomial_from_json(const Json& j);
FrobeniusSeries frobenius_from_json(const Json& j);

}  // namespace polaris
