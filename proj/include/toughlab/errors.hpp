#pragma once

#include <stdexcept>

namespace toughlab {

// Error categories map onto the stable CLI exit codes:
//   InputError/DomainError -> 2, CapacityError -> 3, NotACutError -> 4,
//   everything else -> 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct CapacityError : Error {
  using Error::Error;
};

struct NotACutError : Error {
  using Error::Error;
};

// A construction hypothesis failed; the message names the violated clause.
struct HypothesisError : Error {
  using Error::Error;
};

// An internal cross-check failed (e.g. the two quotient-matrix
// constructions disagree). Never expected on valid inputs.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace toughlab
