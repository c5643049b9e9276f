#include "cubiprox/perspective.hpp"

#include <algorithm>
#include <cmath>

#include "cubiprox/errors.hpp"
#include "newton.hpp"

namespace cubiprox {

PerspectiveProxResult prox_perspective(double gamma, const LabeledPoint& pt, SolveInfo* info) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw invalid_input("prox_perspective: gamma must be positive and finite");
  }
  if (pt.vec.empty() || !std::isfinite(pt.scalar)) {
    throw invalid_input("prox_perspective: point must be finite and nonempty");
  }
  for (double v : pt.vec) {
    if (!std::isfinite(v)) throw invalid_input("prox_perspective: point must be finite");
  }

  const double eta = pt.scalar;
  const double ny = norm(pt.vec);
  const std::size_t n = pt.dim();

  if (ny * ny + 2.0 * gamma * eta <= 0.0) {
    if (info) *info = SolveInfo{.branch = "zero"};
    return {LabeledPoint{std::vector<double>(n, 0.0), 0.0}, 0.0, PerspectiveBranch::Zero};
  }
  if (ny == 0.0) {
    // ||y||^2 + 2 gamma eta > 0 with y = 0 forces eta > 0, p > 0, q = 0;
    // lambda collapses to 0 and the point is kept.
    if (info) *info = SolveInfo{.branch = "cardano", .p = 2.0 * (eta + gamma) / gamma};
    return {LabeledPoint{std::vector<double>(n, 0.0), eta}, 0.0, PerspectiveBranch::Positive};
  }

  const double p = 2.0 * (eta + gamma) / gamma;
  const double w = ny / gamma;  // -q/2
  const double pc = p / 3.0;
  const double delta = pc * pc * pc + w * w;

  double lam;
  const char* branch;
  if (delta >= 0.0) {
    lam = detail::cardano_sum(p, -2.0 * w, std::sqrt(delta));
    branch = "cardano";
  } else {
    const double m = std::sqrt(-pc);
    lam = 2.0 * m * std::cos(detail::clamped_acos(w / (m * m * m)) / 3.0);
    branch = "trig";
  }

  const auto res = [&](double t) { return (t * t + p) * t - 2.0 * w; };
  const auto dres = [&](double t) { return 3.0 * t * t + p; };
  lam = detail::newton_polish(res, dres, lam);

  bool fellback = false;
  const double rtol =
      1e-9 * std::max({1.0, std::fabs(lam * lam * lam), std::fabs(p * lam), 2.0 * w});
  if (!(lam >= 0.0) || std::fabs(res(lam)) > rtol) {
    fellback = true;
    double lo = 0.0;
    double hi = std::cbrt(2.0 * w) + std::sqrt(std::max(0.0, -p)) + 1.0;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (res(mid) < 0.0 ? lo : hi) = mid;
    }
    lam = 0.5 * (lo + hi);
  }

  if (info) {
    info->branch = fellback ? "bisection" : branch;
    info->p = p;
    info->q = -2.0 * w;
    info->delta = delta;
    info->root = lam;
    info->residual = res(lam);
    info->fallback = fellback;
  }

  const double factor = 1.0 - gamma * lam / ny;
  return {LabeledPoint{scaled(pt.vec, factor), eta + gamma * lam * lam / 2.0}, lam,
          PerspectiveBranch::Positive};
}

}  // namespace cubiprox
