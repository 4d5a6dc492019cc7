#pragma once

#include <stdexcept>
#include <string>

namespace qkforge {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: zero multiplier, mismatched moduli, constant polynomial...
class UsageError : public Error {
 public:
  using Error::Error;
};

/// The prime does not satisfy the congruence a multiplier class needs.
class UnsupportedPrime : public UsageError {
 public:
  using UsageError::UsageError;
};

/// Input violates a structural precondition (e.g. not equal-degree).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A computed object contradicts the construction's theorems.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Internal inconsistency (signals a bug upstream).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qkforge
