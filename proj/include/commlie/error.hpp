#pragma once

#include <stdexcept>
#include <string>

namespace commlie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments or configuration (CLI exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Even q passed to a symplectic routine.
class CharacteristicTwoError : public UsageError {
 public:
  explicit CharacteristicTwoError(const std::string& where)
      : UsageError(where + ": q must be odd (characteristic 2 symplectic Lie algebras are excluded)") {}
};

/// Operands built in different coefficient modes (numeric q vs symbolic, or two different q).
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

/// Reciprocal of a power series whose constant term is not invertible.
class NonUnitError : public Error {
 public:
  using Error::Error;
};

/// A count that must be an exact integer (or integer polynomial) was not.
/// The message names the stratum that produced it.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed the brute-force size guard.
class GuardExceeded : public UsageError {
 public:
  using UsageError::UsageError;
};

/// Two routes that must agree did not.
class MismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace commlie
