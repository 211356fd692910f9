#pragma once

#include <map>
#include <string>
#include <string_view>

#include "polaris/partition.hpp"
#include "polaris/polynomial.hpp"

namespace polaris {

enum class Basis { Monomial, Elementary, Homogeneous, Power, Schur };

/// 'm', 'e', 'h', 'p', 's'.
char basis_letter(Basis b);

/// Finite rational combination of basis elements b_lambda; sizes of the
/// indexing partitions may be mixed.
class SymFunc {
 public:
  explicit SymFunc(Basis basis) : basis_(basis) {}
  SymFunc(Basis basis, std::map<Partition, Rational> terms);
  static SymFunc single(Basis basis, const Partition& lambda,
                        const Rational& coef = 1);

  Basis basis() const { return basis_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& lambda) const;

  void add(const Partition& lambda, const Rational& coef);

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

 private:
  Basis basis_;
  std::map<Partition, Rational> terms_;
};

SymFunc operator+(const SymFunc& a, const SymFunc& b);
SymFunc operator*(const Rational& c, const SymFunc& f);

/// Re-expresses f in another basis; exact.
SymFunc change_basis(const SymFunc& f, Basis target);

/// "s[2,1](q) + 2 s[2](q)"; "0" when empty. The empty partition prints as
/// the bare coefficient.
std::string to_string(const SymFunc& f, std::string_view variables = "");

/// Number of semistandard tableaux of shape lambda and content mu.
long kostka(const Partition& lambda, const Partition& mu);

/// chi^lambda at the class of cycle type rho (Murnaghan-Nakayama).
long irreducible_character(const Partition& lambda, const Partition& rho);

/// The basis element b_lambda as a polynomial in `variables` variables
/// (a one-row matrix polynomial). Products b_lambda = prod b_{lambda_i} for
/// e, h, p.
MatrixPolynomial basis_polynomial(Basis basis, const Partition& lambda,
                                  int variables);

/// s_mu(q_1..q_l); zero when mu has more than l parts.
QPolynomial schur_polynomial(const Partition& mu, int variables);

/// True when p is invariant under every permutation of its variables.
bool is_symmetric(const QPolynomial& p);

/// Integer coefficients c_mu with p = sum c_mu s_mu(q_1..q_l). Throws
/// DomainError on asymmetric input and ConsistencyError when the expansion
/// is not integral.
std::map<Partition, long> decompose_schur(const QPolynomial& p);

}  // namespace polaris
