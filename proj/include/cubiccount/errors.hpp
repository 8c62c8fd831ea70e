#pragma once

#include <stdexcept>

namespace cubiccount {

// Base class for all library-specific errors. Plain bad arguments
// (mismatched elements, out-of-range n, zero coefficients) throw
// std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The field does not satisfy the congruence the operation needs
// (e.g. cube classes are trivial when q ≡ 2 mod 3).
class UnsupportedFieldError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed the configured point budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// A self-check failed; indicates a bug in this library, not bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubiccount
