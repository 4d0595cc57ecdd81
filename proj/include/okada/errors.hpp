#pragma once

#include <stdexcept>
#include <string>

namespace okada {

// Raised when an internal mathematical invariant fails (a library bug, not bad input).
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// Raised for malformed structure (not a perfect matching, wrong rank, ...), as
// opposed to a well-formed object whose labels break a rule.
class StructureError : public std::invalid_argument {
 public:
  explicit StructureError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace okada
