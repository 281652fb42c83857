#pragma once

#include <stdexcept>
#include <string>

namespace tga {

/// Caller violated an operation contract (wrong field, unvalidated input, ...).
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A mathematical precondition does not hold (zero has no inverse, H is not
/// normal, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input data is structurally invalid (non-associative table, bad modulus).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant that the mathematics guarantees was observed to fail.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A requested exhaustive computation exceeds its budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tga
