#pragma once

#include "cubiprox/point.hpp"
#include "cubiprox/solve_info.hpp"

namespace cubiprox {

enum class PerspectiveBranch { Zero, Positive };

/// Prox of the closed perspective function (y, eta) |-> ||y||^2/(2 eta)
/// on eta > 0 (0 at the origin, +infinity elsewhere). lambda is the
/// nonnegative root of lambda^3 + 2(eta+gamma)/gamma lambda - 2||y||/gamma
/// in the Positive branch and 0 in the Zero branch.
struct PerspectiveProxResult {
  LabeledPoint point;
  double lambda = 0.0;
  PerspectiveBranch branch = PerspectiveBranch::Zero;
};

PerspectiveProxResult prox_perspective(double gamma, const LabeledPoint& p,
                                       SolveInfo* info = nullptr);

}  // namespace cubiprox
