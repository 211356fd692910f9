#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polaris/frobenius.hpp"

namespace polaris {

/// Monomial-basis coordinates [c_lambda] of a symmetric polynomial of
/// degree d, indexed by partitions_of(d), up to a nonzero scalar. Stored
/// with the first nonzero coordinate scaled to 1.
class ProjectivePoint {
 public:
  /// Throws DomainError when coords is all zero or its length is not p(d).
  ProjectivePoint(int degree, std::vector<Rational> coords);

  int degree() const { return degree_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t k) const { return coords_[k]; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  int degree_;
  std::vector<Rational> coords_;
};

/// "[1:3:6]"
std::string to_string(const ProjectivePoint& p);

/// Coordinates of a homogeneous symmetric polynomial in the row-1
/// variables. A coordinate whose m_lambda vanishes in n variables (more
/// parts than columns) is reported as 0. Throws DomainError on zero,
/// inhomogeneous or non-symmetric input.
ProjectivePoint projective_point(const MatrixPolynomial& f);

/// sum c_lambda m_lambda in x_11..x_1n.
MatrixPolynomial point_polynomial(const ProjectivePoint& p, int n);

/// Rank test: the n first partials in row 1 together with E_{1,1}^{(2)} f
/// span a space of dimension exactly n (n = column count of f). Throws
/// DomainError below degree 2 or on non-symmetric input.
bool is_exception(const MatrixPolynomial& f);

/// Closed-form test for f = a m_3 + b m_21 + c m_111 in n >= 2 variables.
/// For n >= 3: 6a(2b + (n-2)c) = 4(n-1)b^2 and [a:b:c] != [1:3:6]. For
/// n = 2, where m_111 vanishes: b = 0 and a != 0.
bool exception_criterion_deg3(const Rational& a, const Rational& b, const Rational& c, int n);

enum class IsoType { P1Power, PowerSum, H3, Unknown };

/// "P1_POWER", "POWER_SUM", "H3", "UNKNOWN".
std::string to_string(IsoType t);

/// P1_POWER iff [a:b] = [1:2], otherwise POWER_SUM. Needs n >= 2 and
/// (a, b) != 0.
IsoType classify_degree2(const Rational& a, const Rational& b, int n);

/// P1_POWER when f is a multiple of p_1^3 in n variables, POWER_SUM for
/// n-exceptions, H3 otherwise. Throws DomainError when f vanishes in n
/// variables or n < 2.
IsoType classify_degree3(const Rational& a, const Rational& b, const Rational& c, int n);

/// Expansion of a polynomial in q_1..q_ell in products h_mu(q) with
/// |mu| <= degree and at most ell parts.
struct HExpansion {
  /// False for non-symmetric input or when no such expansion exists.
  bool solvable = false;
  /// The h_mu used are linearly independent at this ell.
  bool unique = false;
  /// Solvable with nonnegative integer coefficients.
  bool positive = false;
  std::map<Partition, Rational> coefficients;
};

HExpansion h_expansion(const QPolynomial& p);

/// Classification of one symmetric generator, optionally confirmed by
/// computing its module at ell rows and comparing with the branch formula.
struct Verdict {
  ProjectivePoint point;
  int n = 0;
  int ell = 1;
  bool exception = false;
  IsoType iso_type = IsoType::Unknown;
  /// Set when the module was computed.
  std::optional<bool> verified_by_module;
  /// Difference between the computed and predicted series; empty on
  /// agreement.
  std::string discrepancy;
  std::optional<FrobeniusSeries> series;
};

struct ClassifyOptions {
  int ell = 1;
  bool verify = false;
  unsigned jobs = 1;
};

Verdict classify(const MatrixPolynomial& f, const ClassifyOptions& options = {});

/// Fixture id of the branch formula for an iso type in degree 2 or 3.
std::string branch_id(int degree, IsoType t);

}  // namespace polaris
