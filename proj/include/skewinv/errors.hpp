#pragma once

#include <stdexcept>
#include <string>

namespace skewinv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (shape mismatch, empty input, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input: rationals, polynomials, problem files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A substitution that does not extend to a ring homomorphism under the active sign rule.
class UnsupportedSubstitution : public Error {
 public:
  using Error::Error;
};

/// Group closure grew past the configured element cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace skewinv
