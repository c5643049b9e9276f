#pragma once

#include "cubiprox/solve_info.hpp"

namespace cubiprox {

/// h(x) = alpha/x on x > 0, +infinity otherwise; alpha > 0.
struct ReciprocalFn {
  double alpha = 1.0;

  explicit ReciprocalFn(double alpha_);

  /// The fold point y0 = -3 * cbrt(alpha/4) separating the radical and
  /// trigonometric prox branches.
  double breakpoint() const;

  double value(double x) const;  // +infinity for x <= 0
};

/// Unique positive solution of x^3 - y x^2 - alpha = 0.
double prox_reciprocal(const ReciprocalFn& f, double y, SolveInfo* info = nullptr);

/// Conjugate: -2*sqrt(-alpha*y) for y <= 0, +infinity for y > 0.
double conjugate_reciprocal(const ReciprocalFn& f, double y);

}  // namespace cubiprox
