#pragma once

#include <stdexcept>
#include <string>

namespace convexdim {

/// Malformed or out-of-contract input (unknown label, bad rational, collinear
/// triple where general position is required, ...).
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A closed-set family that violates one of the convex-geometry axioms.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Instance exceeds a size guard (binomial / exponential blowup).
class SizeGuardError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Two independent computations disagreed. Always an implementation bug.
class InvariantError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace convexdim
