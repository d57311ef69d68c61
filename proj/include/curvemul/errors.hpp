#pragma once

#include <stdexcept>
#include <string>

namespace curvemul {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke a precondition: mismatched fields, wrong lengths, bad arguments.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Inversion or division by zero in a field or polynomial ring.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Instance data violates one of its invariants (off-curve point, reducible modulus, ...).
class InstanceError : public Error {
 public:
  using Error::Error;
};

/// A basis function's denominator vanishes at an evaluation place.
class SupportCollision : public InstanceError {
 public:
  using InstanceError::InstanceError;
};

/// A function has a pole at the infinite place it is evaluated at.
class PoleError : public InstanceError {
 public:
  using InstanceError::InstanceError;
};

/// Setup could not produce a working multiplication algorithm (singular T, unreachable degree sum).
class SetupError : public Error {
 public:
  using Error::Error;
};

/// Malformed instance file or element text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace curvemul
