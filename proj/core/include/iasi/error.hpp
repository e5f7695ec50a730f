#pragma once

#include <stdexcept>
#include <string>

namespace iasi {

/// Input that violates an operation's precondition (bad family parameters,
/// malformed files, non-independent vertex sets, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well formed but outside what an exact routine will do:
/// order above the exact-computation cap, or a structural requirement
/// (bipartiteness) that the input does not meet.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the exact-computation cap is exceeded.
class CapExceeded : public Unsupported {
 public:
  using Unsupported::Unsupported;
};

}  // namespace iasi
