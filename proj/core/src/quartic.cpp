#include "cubiprox/quartic.hpp"

#include <cmath>
#include <stdexcept>

#include "cubiprox/cubic.hpp"
#include "cubiprox/errors.hpp"
#include "newton.hpp"

namespace cubiprox {

bool is_convex(double alpha, double beta, double gamma, double /*delta*/, double /*epsilon*/) {
  return alpha > 0.0 && 8.0 * alpha * gamma >= 3.0 * beta * beta;
}

ConvexQuartic::ConvexQuartic(double alpha_, double beta_, double gamma_, double delta_,
                             double epsilon_)
    : alpha(alpha_), beta(beta_), gamma(gamma_), delta(delta_), epsilon(epsilon_) {
  for (double v : {alpha, beta, gamma, delta, epsilon}) {
    if (!std::isfinite(v)) throw invalid_input("ConvexQuartic: coefficients must be finite");
  }
  if (!is_convex(alpha, beta, gamma, delta, epsilon)) {
    throw invalid_input("ConvexQuartic: needs alpha > 0 and 8*alpha*gamma >= 3*beta^2");
  }
}

double ConvexQuartic::value(double x) const {
  return (((alpha * x + beta) * x + gamma) * x + delta) * x + epsilon;
}

double ConvexQuartic::derivative(double x) const {
  return ((4.0 * alpha * x + 3.0 * beta) * x + 2.0 * gamma) * x + delta;
}

namespace {

// The stationarity cubics of the conjugate and of the prox have at most
// one distinct real root (p >= 0); anything else is a solver defect.
double unique_real_root(const RealRootSet& roots) {
  if (const auto* s = std::get_if<OneSimple>(&roots)) return s->root;
  if (const auto* t = std::get_if<OneTriple>(&roots)) return t->root;
  throw std::logic_error("convex quartic stationarity cubic produced multiple real roots");
}

void fill_info(SolveInfo* info, const Cubic& f, double root, double residual) {
  if (!info) return;
  const DepressedCubic g = f.depress();
  info->branch = "cardano";
  info->p = g.p;
  info->q = g.q;
  info->delta = g.discriminant();
  info->root = root;
  info->residual = residual;
  info->fallback = false;
}

}  // namespace

ConjugateValue conjugate(const ConvexQuartic& h, double y, SolveInfo* info) {
  if (!std::isfinite(y)) throw invalid_input("conjugate: y must be finite");
  const Cubic f{4.0 * h.alpha, 3.0 * h.beta, 2.0 * h.gamma, h.delta - y};
  const double x = unique_real_root(solve_general(f));
  fill_info(info, f, x, h.derivative(x) - y);
  return {x, y * x - h.value(x)};
}

double prox(const ConvexQuartic& h, double y, SolveInfo* info) {
  if (!std::isfinite(y)) throw invalid_input("prox: y must be finite");
  const Cubic f{4.0 * h.alpha, 3.0 * h.beta, 2.0 * h.gamma + 1.0, h.delta - y};
  const double x = unique_real_root(solve_general(f));
  fill_info(info, f, x, h.derivative(x) + x - y);
  return x;
}

double prox_geometric(double y) {
  if (!std::isfinite(y)) throw invalid_input("prox_geometric: y must be finite");
  const double s = y - 0.375;
  const double r = std::sqrt(s * s + 0.421875);  // (3/4)^3
  return -0.25 + 0.5 * std::cbrt(s + r) + 0.5 * std::cbrt(s - r);
}

double prox_pure_quartic(double alpha, double y) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw invalid_input("prox_pure_quartic: alpha must be positive");
  }
  if (!std::isfinite(y)) throw invalid_input("prox_pure_quartic: y must be finite");
  const double t = y / alpha;
  const double r = std::sqrt((1.0 + 27.0 * alpha * y * y) / (27.0 * alpha * alpha * alpha));
  return 0.5 * std::cbrt(t + r) + 0.5 * std::cbrt(t - r);
}

}  // namespace cubiprox
