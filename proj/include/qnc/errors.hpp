#pragma once

#include <stdexcept>

namespace qnc {

// Mismatched sizes, out-of-range indices, ill-formed call arguments.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A domain invariant does not hold (non-bijective image, non-physical
// density matrix, malformed configuration).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource cap would be exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qnc
