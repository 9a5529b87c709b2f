#pragma once

#include <stdexcept>
#include <string>

namespace rccs {

/// Malformed or structurally invalid input: bad rationals, non-canonical
/// events, out-of-range indices, non-partitions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which mathematical precondition an operation refused to proceed without.
enum class Gate {
  NotCorrelated,
  NotLogicallyIndependent,
  Incompatible,
  ZeroMeasure,
  CarveOutOfRange,
  ScreeningOffFails,
};

const char* to_string(Gate gate) noexcept;

/// A theorem-gated refusal: the inputs are well formed but the requested
/// object cannot exist (or the operation is undefined) for them.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(Gate gate, const std::string& what)
      : std::runtime_error(what), gate_(gate) {}

  Gate gate() const noexcept { return gate_; }

 private:
  Gate gate_;
};

/// A proven identity or inequality failed to hold. Always a bug in a model
/// or in this library, never a property of the input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rccs
