#ifndef ARCDEG_ERRORS_HPP
#define ARCDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arcdeg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two objects (or partitions) that must share a type (β,γ) do not.
class TypeMismatch : public Error {
 public:
  using Error::Error;
};

class InconsistentDiagram : public Error {
 public:
  using Error::Error;
};

class MoveNotApplicable : public Error {
 public:
  using Error::Error;
};

class NoDescentMove : public Error {
 public:
  using Error::Error;
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

/// Raised when a result the theory guarantees fails to materialize.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace arcdeg

#endif  // ARCDEG_ERRORS_HPP
