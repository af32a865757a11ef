#pragma once

#include <stdexcept>
#include <string>

namespace dml {

/// Raised on invalid input: mismatched rings, malformed expressions,
/// out-of-range parameters. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal postcondition fails. The CLI maps it to exit
/// code 2; seeing one means a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dml
