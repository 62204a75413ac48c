#pragma once

#include <stdexcept>
#include <string>

namespace hnerve {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (facet files, ideal files, field specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed a configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (for example a negative Betti number).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hnerve
