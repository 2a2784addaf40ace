#pragma once

#include <stdexcept>
#include <string>

namespace veronese {

/// Root of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: wrong dimension, unsorted data, out-of-range index.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class OrderingError : public InputError {
 public:
  using InputError::InputError;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The value is outside the domain of a partial function (e.g. order of a non-member).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateConeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Input data violates the structure an algorithm relies on; carries a witness in the message.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// The object is in the wrong state for the request (e.g. minors of an unfilled matrix).
class StateError : public Error {
 public:
  using Error::Error;
};

/// A configured computational budget was exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A self-check of the library failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace veronese
