#include "cubiprox/reciprocal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cubiprox/errors.hpp"
#include "newton.hpp"

namespace cubiprox {

ReciprocalFn::ReciprocalFn(double alpha_) : alpha(alpha_) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw invalid_input("ReciprocalFn: alpha must be positive and finite");
  }
}

double ReciprocalFn::breakpoint() const { return -3.0 * std::cbrt(alpha / 4.0); }

double ReciprocalFn::value(double x) const {
  return x > 0.0 ? alpha / x : std::numeric_limits<double>::infinity();
}

double prox_reciprocal(const ReciprocalFn& f, double y, SolveInfo* info) {
  if (!std::isfinite(y)) throw invalid_input("prox_reciprocal: y must be finite");
  const double a = f.alpha;
  const double y0 = f.breakpoint();
  const double c = y / 3.0;
  const double c3 = c * c * c;

  // Stationarity cubic x^3 - y x^2 - alpha; the (x-y) grouping keeps the
  // evaluation accurate when x is close to y.
  const auto res = [&](double x) { return ((x - y) * x) * x - a; };
  const auto dres = [&](double x) { return (3.0 * x - 2.0 * y) * x; };

  const double fold_tol = 1e-12 * std::max(1.0, std::fabs(y0));
  double x;
  const char* branch;
  if (std::fabs(y - y0) <= fold_tol) {
    // Both neighbouring formulas lose digits at the fold; use its limit.
    x = std::cbrt(a) / std::cbrt(4.0);
    branch = "fold";
  } else if (y > 1e8) {
    // x = y + a/x^2, twice from x = y; the radical form would waste the
    // a/y^2 signal against (y/3)^3-sized terms.
    double t = y + a / (y * y);
    x = y + a / (t * t);
    branch = "asymptotic";
  } else if (y < -1e8) {
    // Dominant balance -y x^2 = a of the stationarity equation.
    x = std::sqrt(a / -y);
    branch = "asymptotic";
  } else if (y > y0) {
    const double sq = std::sqrt(std::max(0.0, a * (a / 4.0 + c3)));
    // -q/2 = a/2 + (y/3)^3, u-.u+ = (y/3)^2
    x = c + detail::cardano_sum(-y * y / 3.0, -a - 2.0 * c3, sq);
    branch = "cardano";
  } else {
    x = c * (1.0 - 2.0 * std::cos(detail::clamped_acos((c3 + a / 2.0) / -c3) / 3.0));
    branch = "trig";
  }

  x = detail::newton_polish(res, dres, x);

  bool fellback = false;
  const double rtol = 1e-9 * std::max({1.0, std::fabs(y * y * y), a});
  if (!(x > 0.0) || std::fabs(res(x)) > rtol) {
    fellback = true;
    double lo = std::max(0.0, y);
    double hi = std::fabs(y) + a + 1.0;
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
      const double mid = 0.5 * (lo + hi);
      (res(mid) < 0.0 ? lo : hi) = mid;
    }
    x = 0.5 * (lo + hi);
  }

  if (info) {
    info->branch = fellback ? "bisection" : branch;
    info->p = -y * y / 3.0;
    info->q = -a - 2.0 * c3;
    info->delta = a * (a / 4.0 + c3);
    info->root = x;
    info->residual = res(x);
    info->fallback = fellback;
  }
  return x;
}

double conjugate_reciprocal(const ReciprocalFn& f, double y) {
  if (!std::isfinite(y)) throw invalid_input("conjugate_reciprocal: y must be finite");
  if (y > 0.0) return std::numeric_limits<double>::infinity();
  return -2.0 * std::sqrt(-f.alpha * y);
}

}  // namespace cubiprox
