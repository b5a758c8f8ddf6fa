#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (unknown vertex, inadmissible pair, parse errors, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Rational factorization refused because the degree exceeds the configured bound.
class DegreeBoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Simple-cycle enumeration hit its cap.
class CycleCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A constructed factorization did not re-multiply to its target.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace lpa
