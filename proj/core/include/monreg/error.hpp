#pragma once

#include <stdexcept>
#include <string>

namespace monreg {

/// An input violates a documented precondition of an operation (for example a
/// chain computation requested for an ideal that is not of Borel type).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A result contradicts a proven invariant. Seeing one means either the input
/// bypassed validation or the kernel has a bug.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace monreg
