#pragma once

#include <stdexcept>
#include <string>

namespace invariants {

/// The adaptive phase-unwrap refinement hit its sample cap without settling,
/// which signals a symbol that is vanishing (or nearly vanishing) on the
/// unit circle.
class IndeterminateWindingError : public std::runtime_error {
 public:
  explicit IndeterminateWindingError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Two independent computation routes that must coincide produced different
/// answers. This is an internal verification failure, not a user error.
class DiscrepancyError : public std::runtime_error {
 public:
  explicit DiscrepancyError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace invariants
