#pragma once

#include <cmath>

// Internal numeric helpers shared by the closed-form solvers.

namespace cubiprox::detail {

// Up to `steps` Newton iterations from x0; a step is accepted only if
// it reduces |f|. Returns the best iterate seen, so a diverging start
// falls back to the closed-form value.
template <class F, class Fp>
double newton_polish(F&& f, Fp&& fp, double x0, int steps = 3) {
  double x = x0;
  double fx = f(x);
  if (!std::isfinite(fx)) return x0;
  double best = x;
  double best_abs = std::fabs(fx);
  for (int i = 0; i < steps; ++i) {
    const double d = fp(x);
    if (d == 0.0 || !std::isfinite(d)) break;
    const double xn = x - fx / d;
    if (!std::isfinite(xn)) break;
    const double fn = f(xn);
    if (!std::isfinite(fn) || std::fabs(fn) >= best_abs) break;
    x = xn;
    fx = fn;
    best = x;
    best_abs = std::fabs(fn);
    if (fn == 0.0) break;
  }
  return best;
}

struct CardanoTerms {
  double hi;  // larger of the two cube-root terms
  double lo;
};

// The two Cardano terms cbrt(-q/2 +- sqrt_delta). The smaller-magnitude
// term is recovered from the product identity u-.u+ = -p/3, which keeps
// it accurate when the direct difference would cancel. sqrt_delta >= 0.
inline CardanoTerms cardano_terms(double p, double q, double sqrt_delta) {
  if (q == 0.0) {
    const double u = std::cbrt(sqrt_delta);
    return {u, -u};
  }
  const double s = q > 0.0 ? 1.0 : -1.0;
  const double big = std::cbrt(-q / 2.0 - s * sqrt_delta);
  const double other = (-p / 3.0) / big;
  return big >= other ? CardanoTerms{big, other} : CardanoTerms{other, big};
}

inline double cardano_sum(double p, double q, double sqrt_delta) {
  const CardanoTerms t = cardano_terms(p, q, sqrt_delta);
  return t.hi + t.lo;
}

inline double clamped_acos(double t) {
  if (t < -1.0) t = -1.0;
  if (t > 1.0) t = 1.0;
  return std::acos(t);
}

}  // namespace cubiprox::detail
