#include "cubiprox/epigraph.hpp"

#include <algorithm>
#include <cmath>

#include "cubiprox/errors.hpp"
#include "newton.hpp"

namespace cubiprox {

namespace {

void require_finite_point(const LabeledPoint& p, const char* what) {
  if (p.vec.empty()) throw invalid_input(what);
  if (!std::isfinite(p.scalar)) throw invalid_input(what);
  for (double v : p.vec) {
    if (!std::isfinite(v)) throw invalid_input(what);
  }
}

}  // namespace

EpiProjection project_epigraph(double alpha, const LabeledPoint& pt, SolveInfo* info) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw invalid_input("project_epigraph: alpha must be positive and finite");
  }
  require_finite_point(pt, "project_epigraph: point must be finite and nonempty");

  const double eta = pt.scalar;
  const double nu = norm(pt.vec);
  if (alpha * nu * nu <= eta) {
    if (info) *info = SolveInfo{.branch = "interior"};
    return {pt, 0.0, EpiBranch::Interior};
  }

  const double w = 2.0 * alpha * eta - 1.0;
  const double p = -(w * w) / (12.0 * alpha * alpha);
  const double q = (w * w * w - 27.0 * alpha * alpha * nu * nu) / (108.0 * alpha * alpha * alpha);
  const double pc = p / 3.0;
  const double qc = q / 2.0;
  const double delta = pc * pc * pc + qc * qc;

  double x;
  EpiBranch br;
  if (nu == 0.0) {
    // The cubic degenerates to (x+eta)(1+2 alpha x)^2 = 0 and the unique
    // positive root is -eta (eta < 0 here).
    x = -eta;
    br = EpiBranch::Cardano;
  } else if (delta >= 0.0) {
    x = -(alpha * eta + 1.0) / (3.0 * alpha) + detail::cardano_sum(p, q, std::sqrt(delta));
    br = EpiBranch::Cardano;
  } else {
    const double mp3 = -pc;
    x = -(alpha * eta + 1.0) / (3.0 * alpha) +
        std::fabs(w) / (3.0 * alpha) *
            std::cos(detail::clamped_acos(-qc / (mp3 * std::sqrt(mp3))) / 3.0);
    br = EpiBranch::Trig;
  }

  // phi(x) = alpha nu^2/(1+2 alpha x)^2 - x - eta is strictly decreasing
  // on x >= 0 with exactly one positive root; its residual is the
  // boundary-membership error of the result.
  const auto phi = [&](double t) {
    const double s = 1.0 + 2.0 * alpha * t;
    return alpha * nu * nu / (s * s) - t - eta;
  };
  const auto dphi = [&](double t) {
    const double s = 1.0 + 2.0 * alpha * t;
    return -4.0 * alpha * alpha * nu * nu / (s * s * s) - 1.0;
  };
  x = std::max(0.0, detail::newton_polish(phi, dphi, x));

  const double s = 1.0 + 2.0 * alpha * x;
  if (info) {
    info->branch = br == EpiBranch::Cardano ? "cardano" : "trig";
    info->p = p;
    info->q = q;
    info->delta = delta;
    info->root = x;
    info->residual = phi(x);
    info->fallback = false;
  }
  return {LabeledPoint{scaled(pt.vec, 1.0 / s), eta + x}, x, br};
}

}  // namespace cubiprox
