#pragma once

#include <stdexcept>
#include <string>

namespace polaris {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes disagree, or an index falls outside the variable matrix.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition (inhomogeneous input,
/// zero polynomial where a point is expected, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input: generator expressions, rationals, formulas.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A job exceeds the configured size ceilings.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// An internal identity failed: non-integral multiplicities, asymmetric
/// q-coefficients, a Hilbert series that does not reconcile. Always a bug
/// upstream of the point where it is raised.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace polaris
