#pragma once

#include <stdexcept>
#include <string>

namespace kicked_top {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller supplied an argument outside the operation's domain.
struct InvalidParameter : Error {
  using Error::Error;
};

// Exponential-size expansion refused.
struct SizeLimitError : Error {
  using Error::Error;
};

// A numerical invariant (norm, Hermiticity, positivity, ...) was violated.
struct ContractViolation : Error {
  using Error::Error;
};

// Density matrix with eigenvalues below the clamping threshold, or otherwise
// unphysical.
struct InvalidState : ContractViolation {
  using ContractViolation::ContractViolation;
};

}  // namespace kicked_top
