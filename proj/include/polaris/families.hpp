#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polaris/symfunc.hpp"

namespace polaris {

/// b_lambda in the row-1 variables x_11..x_1n. Throws DomainError when the
/// element vanishes identically in n variables (m, e, s with too many
/// parts) so that a typo cannot silently produce the zero module.
MatrixPolynomial sym_poly(Basis basis, const Partition& lambda, int n);

/// prod_{i<j} (x_1i - x_1j), expanded.
MatrixPolynomial vandermonde(int n);

enum class FamilyKind { A, B, C, T };

/// A = {x_1j^d}, B = {x_1i^d - x_1j^d : i < j}, C = squarefree degree-d
/// monomials, T = all degree-d monomials; all in row 1.
std::vector<MatrixPolynomial> family(FamilyKind kind, int d, int n);

/// A parsed generator: the S_n-stable family whose module is wanted.
struct Generator {
  std::string text;
  std::vector<MatrixPolynomial> members;
  int degree = 0;
  /// Set when the generator is one symmetric polynomial rather than a
  /// family or an alternating polynomial.
  bool symmetric = false;
};

/// Grammar:
///   gen    := family | point | sum
///   family := ('A' | 'B' | 'C' | 'T') ':' int
///   point  := '[' rational (':' rational)* ']'   monomial coordinates
///   sum    := ['-'] term (('+' | '-') term)*
///   term   := [rational ['*']] atom ['^' int]
///   atom   := ('m' | 'e' | 'h' | 'p' | 's') '[' int (',' int)* ']' | 'vdm'
/// Whitespace is ignored. Throws ParseError on malformed text and
/// DomainError on a well-formed generator that is unusable at this n.
Generator parse_generator(std::string_view text, int n);

}  // namespace polaris
