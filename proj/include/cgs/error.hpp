#pragma once

#include <stdexcept>
#include <string>

namespace cgs {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was called with arguments violating its contract
// (bad symbol index, unsorted change list, move precondition not met, ...).
struct ContractError : Error {
  using Error::Error;
};

// Two sets (or a set and a string) disagree on alphabet or length.
struct MismatchError : ContractError {
  using ContractError::ContractError;
};

// Malformed bytes or text: bad magic, version, truncation, unparseable position.
struct FormatError : Error {
  using Error::Error;
};

// Meet-in-the-middle seed is not fully solved; caller must deepen the
// backward chain or extend the forward plies.
struct SeedNotClosedError : Error {
  using Error::Error;
};

// An explicit enumeration exceeded its position budget.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace cgs
