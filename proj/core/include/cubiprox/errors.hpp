#pragma once

#include <stdexcept>

namespace cubiprox {

// Malformed or degenerate input: non-finite values, zero leading
// coefficient, nonpositive scale parameter.
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A closed-form case condition does not hold at the given point.
struct precondition_violation : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace cubiprox
