#pragma once

#include <map>
#include <string>
#include <utility>

#include "polaris/operators.hpp"
#include "polaris/partition.hpp"
#include "polaris/subspace.hpp"
#include "polaris/symfunc.hpp"

namespace polaris {

/// Character values indexed by cycle type; the keys are exactly the
/// partitions of n.
struct ClassFunction {
  int n = 0;
  std::map<Partition, Rational> values;

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

/// The permutation of cycle type rho whose cycles are runs of consecutive
/// columns, longest first.
Permutation cycle_type_representative(const Partition& rho);

/// Character of the diagonal action on V_d. Throws ConsistencyError when a
/// permuted basis vector leaves V_d.
ClassFunction component_character(const GradedSubspace& v, const MultiDegree& d);

/// Multiplicities b_{lambda,mu} of s_mu(q) s_lambda(w).
struct FrobeniusSeries {
  int n = 0;
  /// Number of q variables the table was decomposed with.
  int ell = 0;
  /// ell is at least the top degree, so no mu was lost to truncation.
  bool complete = false;
  /// (lambda, mu) -> multiplicity >= 1.
  std::map<std::pair<Partition, Partition>, long> entries;

  bool empty() const { return entries.empty(); }
  long multiplicity(const Partition& lambda, const Partition& mu) const;

  /// Compares tables only.
  friend bool operator==(const FrobeniusSeries& a, const FrobeniusSeries& b) {
    return a.n == b.n && a.entries == b.entries;
  }
};

struct FrobeniusOptions {
  unsigned jobs = 1;
};

/// Graded Frobenius characteristic of an S_n-stable subspace, with n the
/// column count and ell the row count of its shape. The result is checked
/// for integrality and reconciled against the Hilbert series; failures
/// throw ConsistencyError.
FrobeniusSeries frobenius_series(const GradedSubspace& m,
                                 const FrobeniusOptions& options = {});

/// sum b_{lambda,mu} f^lambda s_mu(q_1..q_ell).
QPolynomial hilbert_from_frobenius(const FrobeniusSeries& fs, int ell);

/// Drops every mu with more than ell parts.
FrobeniusSeries truncate(const FrobeniusSeries& fs, int ell);

/// The q-side coefficient of s_lambda(w) as a Schur-basis SymFunc.
SymFunc q_coefficient(const FrobeniusSeries& fs, const Partition& lambda);

/// Bisymmetric function sum c * b_mu(q) b_lambda(w), keyed (lambda, mu).
/// Used to state expected tables in any basis and to render series.
struct BiSymFunc {
  Basis q_basis = Basis::Schur;
  Basis w_basis = Basis::Schur;
  std::map<std::pair<Partition, Partition>, Rational> terms;

  friend bool operator==(const BiSymFunc&, const BiSymFunc&) = default;
};

BiSymFunc to_bisym(const FrobeniusSeries& fs);
BiSymFunc change_basis(const BiSymFunc& f, Basis q_basis, Basis w_basis);

enum class RenderStyle { SchurSchur, HH };

/// Text form grouped by the w-side, e.g.
/// "(1 + s[1](q) + s[2](q)) s[3](w) + s[1](q) s[2,1](w)"; "0" when empty.
std::string render(const FrobeniusSeries& fs, RenderStyle style = RenderStyle::SchurSchur);
std::string render(const BiSymFunc& f);

/// One LaTeX table row "$...$ & label \\ \hline" with w-partitions written
/// relative to n, as in s_{n-1,1}(\mathbf{w}).
std::string render_latex_row(const FrobeniusSeries& fs, const std::string& label,
                             RenderStyle style = RenderStyle::SchurSchur);

}  // namespace polaris
