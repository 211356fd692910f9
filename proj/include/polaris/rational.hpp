#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polaris {

/// Arbitrary-precision rational; always kept canonical (reduced, positive
/// denominator).
using Rational = mpq_class;

/// Parses "7", "-3", "2/6" (reduced on return). Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

}  // namespace polaris
