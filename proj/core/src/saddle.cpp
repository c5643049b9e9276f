#include "cubiprox/saddle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <utility>

#include "cubiprox/errors.hpp"
#include "cubiprox/point.hpp"
#include "newton.hpp"

namespace cubiprox {

SaddleSet::SaddleSet(double alpha_, double beta_, std::size_t n_) : alpha(alpha_), beta(beta_), n(n_) {
  if (alpha == 0.0 || !std::isfinite(alpha)) throw invalid_input("SaddleSet: alpha must be nonzero");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw invalid_input("SaddleSet: beta must be positive");
  if (n == 0) throw invalid_input("SaddleSet: dimension must be at least 1");
}

bool SaddleSet::admits_antidiag(double zeta, double gamma) const {
  return alpha * (gamma - alpha / (beta * beta)) < -zeta * zeta / 4.0;
}

bool SaddleSet::admits_diag(double zeta, double gamma) const {
  return alpha * (gamma + alpha / (beta * beta)) > zeta * zeta / 4.0;
}

SaddleCase make_saddle_case(const SaddleSet& S, SaddleKind kind, std::vector<double> z,
                            double gamma) {
  if (z.size() != S.n) throw invalid_input("make_saddle_case: dimension mismatch");
  for (double v : z) {
    if (!std::isfinite(v)) throw invalid_input("make_saddle_case: z must be finite");
  }
  if (!std::isfinite(gamma)) throw invalid_input("make_saddle_case: gamma must be finite");
  const double zeta = norm(z);
  if (zeta == 0.0) throw precondition_violation("saddle case: z must be nonzero");
  if (kind == SaddleKind::AntiDiag && !S.admits_antidiag(zeta, gamma)) {
    throw precondition_violation("saddle case: alpha*(gamma - alpha/beta^2) < -||z||^2/4 violated");
  }
  if (kind == SaddleKind::Diag && !S.admits_diag(zeta, gamma)) {
    throw precondition_violation("saddle case: alpha*(gamma + alpha/beta^2) > ||z||^2/4 violated");
  }
  return {kind, std::move(z), gamma, zeta};
}

namespace {

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Bracketing bisection on (-1, 1); S is strictly monotone there with a
// sign change, so this is a total safety net for the closed forms.
template <class F>
double bisect_unit_interval(F&& s) {
  double lo = -1.0 + 1e-12;
  double hi = 1.0 - 1e-12;
  const bool lo_neg = s(lo) < 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((s(mid) < 0.0) == lo_neg ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct ScalarSolve {
  double x = 0.0;
  const char* branch = "";
  double p = 0.0;
  double q = 0.0;
  double delta = 0.0;
  bool fallback = false;
  double residual = 0.0;
};

template <class S, class DS>
ScalarSolve finish(double x, const char* branch, double p, double q, double delta, double zeta,
                   double alpha, double beta, double gamma, S&& s, DS&& ds) {
  x = detail::newton_polish(s, ds, x);
  ScalarSolve out{x, branch, p, q, delta, false, 0.0};
  const double rtol =
      1e-8 * std::max({1.0, zeta * zeta, std::fabs(alpha * gamma), alpha * alpha / (beta * beta)});
  if (!(x > -1.0 && x < 1.0) || std::fabs(s(x)) > rtol) {
    out.x = bisect_unit_interval(s);
    out.branch = "bisection";
    out.fallback = true;
  }
  out.residual = s(out.x);
  return out;
}

void fill_info(SolveInfo* info, const ScalarSolve& r) {
  if (!info) return;
  info->branch = r.branch;
  info->p = r.p;
  info->q = r.q;
  info->delta = r.delta;
  info->root = r.x;
  info->residual = r.residual;
  info->fallback = r.fallback;
}

}  // namespace

SaddleProjection project_antidiag(const SaddleSet& S, std::span<const double> z, double gamma,
                                  SolveInfo* info) {
  const SaddleCase c = make_saddle_case(S, SaddleKind::AntiDiag,
                                        std::vector<double>(z.begin(), z.end()), gamma);
  const double a = S.alpha;
  const double b2 = S.beta * S.beta;
  const double zeta = c.zeta;

  const double u = a + b2 * gamma;
  const double x0 = (2.0 * a - b2 * gamma) / (3.0 * a);
  const double p = -(u * u) / (3.0 * a * a);
  const double q = 2.0 * u * u * u / (27.0 * a * a * a) + b2 * zeta * zeta / (a * a);
  const double pc = p / 3.0;
  const double qc = q / 2.0;
  const double delta = pc * pc * pc + qc * qc;
  assert(p <= 0.0);

  double x;
  const char* branch;
  if (delta >= 0.0) {
    x = x0 + detail::cardano_sum(p, q, std::sqrt(delta));
    branch = "cardano";
  } else {
    const double dsgn = sign_of(a * a + a * b2 * gamma);
    const double mp3 = -pc;
    const double angle =
        ((3.0 + dsgn) * std::numbers::pi + detail::clamped_acos(-qc / (mp3 * std::sqrt(mp3)))) /
        3.0;
    x = x0 + dsgn * (2.0 * u / (3.0 * a)) * std::cos(angle);
    branch = "trig";
  }

  const auto s = [&](double t) {
    const double w = 1.0 - t;
    return 2.0 * zeta * zeta / (w * w) + 2.0 * a * a * t / b2 + 2.0 * a * gamma;
  };
  const auto ds = [&](double t) {
    const double w = 1.0 - t;
    return 4.0 * zeta * zeta / (w * w * w) + 2.0 * a * a / b2;
  };
  const ScalarSolve r = finish(x, branch, p, q, delta, zeta, a, S.beta, gamma, s, ds);
  fill_info(info, r);

  const double m = 1.0 / (1.0 - r.x);
  return {scaled(z, m), scaled(z, -m), gamma + a * r.x / b2, r.x};
}

SaddleProjection project_diag(const SaddleSet& S, std::span<const double> z, double gamma,
                              SolveInfo* info) {
  const SaddleCase c =
      make_saddle_case(S, SaddleKind::Diag, std::vector<double>(z.begin(), z.end()), gamma);
  const double a = S.alpha;
  const double b2 = S.beta * S.beta;
  const double zeta = c.zeta;

  const double v = b2 * gamma - a;
  const double x0 = -(2.0 * a + b2 * gamma) / (3.0 * a);
  const double p = -(v * v) / (3.0 * a * a);
  const double q = 2.0 * v * v * v / (27.0 * a * a * a) - b2 * zeta * zeta / (a * a);
  const double pc = p / 3.0;
  const double qc = q / 2.0;
  const double delta = pc * pc * pc + qc * qc;
  assert(p <= 0.0);

  double x;
  const char* branch;
  if (delta >= 0.0) {
    x = x0 + detail::cardano_sum(p, q, std::sqrt(delta));
    branch = "cardano";
  } else {
    const double dsgn = sign_of(a * a - a * b2 * gamma);
    const double mp3 = -pc;
    const double angle =
        ((2.0 + 2.0 * dsgn) * std::numbers::pi +
         detail::clamped_acos(-qc / (mp3 * std::sqrt(mp3)))) /
        3.0;
    x = x0 + dsgn * (2.0 * (a - b2 * gamma) / (3.0 * a)) * std::cos(angle);
    branch = "trig";
  }

  const auto s = [&](double t) {
    const double w = 1.0 + t;
    return 2.0 * zeta * zeta / (w * w) - 2.0 * a * a * t / b2 - 2.0 * a * gamma;
  };
  const auto ds = [&](double t) {
    const double w = 1.0 + t;
    return -4.0 * zeta * zeta / (w * w * w) - 2.0 * a * a / b2;
  };
  const ScalarSolve r = finish(x, branch, p, q, delta, zeta, a, S.beta, gamma, s, ds);
  fill_info(info, r);

  const double m = 1.0 / (1.0 + r.x);
  return {scaled(z, m), scaled(z, m), gamma + a * r.x / b2, r.x};
}

SaddleProjection project(const SaddleSet& S, const SaddleCase& c, SolveInfo* info) {
  return c.kind == SaddleKind::AntiDiag ? project_antidiag(S, c.z, c.gamma, info)
                                        : project_diag(S, c.z, c.gamma, info);
}

}  // namespace cubiprox
