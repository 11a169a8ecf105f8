#pragma once

#include <stdexcept>

namespace stairprune {

// Raised for malformed input text: bad rational syntax, zero denominators,
// structurally invalid JSON documents.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for well-formed input that violates a contract: dimension mismatch,
// empty generator sets, negative shift amounts where forbidden, size caps.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stairprune
