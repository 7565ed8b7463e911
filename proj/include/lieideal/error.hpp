#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieideal {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid field parameters, mixed-field operands, division by zero.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Vector/subspace shapes that do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on a mathematical object failed (not an ideal, not contained, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// The requested computation is not available for this field.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace lieideal
