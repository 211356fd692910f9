#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polaris/frobenius.hpp"

namespace polaris {

/// Evaluates a series formula at a given n into Schur-Schur form.
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | '(' expr ')' | q | w
///   q      := ('s' | 'h' | 'e' | 'p' | 'm') '[' parts? ']'     q-side
///   w      := ('sw' | 'hw') '[' parts? ']'                       w-side
///
/// A w-side index lists the tail of lambda: sw[1] is s_{n-1,1}(w), sw[]
/// is s_n(w). Each product may hold at most one q factor and one w factor,
/// except that h, e and p factors on the same side multiply. Every term
/// must carry a w factor. Throws ParseError on malformed text and
/// DomainError when a w-index is not a partition at this n.
BiSymFunc evaluate_formula(std::string_view formula, int n);

/// Keeps the mu with at most ell parts.
BiSymFunc truncate(const BiSymFunc& f, int ell);

/// Exact comparison of a computed table with an expected Schur-Schur
/// function truncated to the table's ell.
bool matches(const FrobeniusSeries& computed, const BiSymFunc& expected);

/// "+2 s[2](q) s[3](w); -1 s[1](q) s[2,1](w)" style list of
/// computed-minus-expected terms; empty when they agree.
std::string difference(const FrobeniusSeries& computed, const BiSymFunc& expected);

enum class Status { Theorem, Conjecture };
std::string to_string(Status s);

/// A stated Frobenius series together with where it comes from.
struct Fixture {
  std::string suite;
  std::string id;
  /// Short human-readable source label.
  std::string citation;
  Status status = Status::Theorem;
  /// Generator grammar text (see parse_generator).
  std::string generator;
  int degree = 0;
  int min_n = 1;
  /// 0 for no upper bound.
  int max_n = 0;
  std::string schur_form;
  /// Second printed form of the same series; empty when none.
  std::string h_form;
  /// A mismatch is a hard failure: proved formulas, and table rows also
  /// covered by one.
  bool gating = true;

  bool applies(int n) const { return n >= min_n && (max_n == 0 || n <= max_n); }
};

/// p_1^d, p_d and e_d for 1 <= d <= max_degree.
std::vector<Fixture> closed_form_fixtures(int max_degree);
/// The two degree-2 branches ("p1-power", "power-sum").
std::vector<Fixture> degree2_fixtures();
/// The three degree-3 branches ("p1-power", "exception", "otherwise").
std::vector<Fixture> degree3_fixtures();
/// Rows of the degree-3 monomial family table, one per n range.
std::vector<Fixture> monomial3_fixtures();
/// Rows of the degree-4 and degree-5 tables, one fixture per generator.
std::vector<Fixture> table_fixtures(int degree);
/// Families A, B, C for 1 <= d <= max_degree, the degree-2 monomial family,
/// and the m_{2,1^{d-2}} formula for 3 <= d <= max_degree.
std::vector<Fixture> conjecture_fixtures(int max_degree);

/// Every fixture of every suite.
std::vector<Fixture> all_fixtures();

}  // namespace polaris
