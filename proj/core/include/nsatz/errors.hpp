#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsatz {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the polynomial parser; pos is a 0-based byte offset into the input.
struct parse_error : error {
  std::size_t pos;
  parse_error(const std::string& msg, std::size_t pos_)
      : error(msg + " (at offset " + std::to_string(pos_) + ")"), pos(pos_) {}
};

// Domain violations: division by zero, zero polynomial where nonzero required,
// mismatched contexts, bad dimensions, non-homogeneous input, and the like.
struct domain_error : error {
  using error::error;
};

// Degenerate elimination states: no generator contains the stage variable, or
// a vanishing resultant admits no nontrivial cofactor pair.
struct degenerate_error : error {
  using error::error;
};

// The seeded linear-change retry loop hit its cap without finding a
// non-degenerate configuration.
struct retry_exhausted : error {
  using error::error;
};

// A cooperatively budgeted computation grew past its operation allowance;
// the caller is expected to fall back to a cheaper formulation.
struct budget_exceeded : error {
  using error::error;
};

}  // namespace nsatz
