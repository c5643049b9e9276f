#include "cubiprox/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cubiprox/errors.hpp"
#include "newton.hpp"

namespace cubiprox {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw invalid_input(what);
}

}  // namespace

DepressedCubic::DepressedCubic(double p_, double q_) : p(p_), q(q_) {
  require_finite(p, "DepressedCubic: p must be finite");
  require_finite(q, "DepressedCubic: q must be finite");
}

double DepressedCubic::discriminant() const {
  const double u = p / 3.0;
  const double v = q / 2.0;
  return u * u * u + v * v;
}

double DepressedCubic::eval(double z) const { return (z * z + p) * z + q; }

double DepressedCubic::derivative(double z) const { return 3.0 * z * z + p; }

Cubic::Cubic(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
  require_finite(a, "Cubic: a must be finite");
  require_finite(b, "Cubic: b must be finite");
  require_finite(c, "Cubic: c must be finite");
  require_finite(d, "Cubic: d must be finite");
  if (a == 0.0) throw invalid_input("Cubic: leading coefficient is zero (degree < 3)");
}

DepressedCubic Cubic::depress() const {
  const double p = (3.0 * a * c - b * b) / (3.0 * a * a);
  const double q = (27.0 * a * a * d + 2.0 * b * b * b - 9.0 * a * b * c) / (27.0 * a * a * a);
  return {p, q};
}

double Cubic::eval(double x) const { return ((a * x + b) * x + c) * x + d; }

double Cubic::derivative(double x) const { return (3.0 * a * x + 2.0 * b) * x + c; }

std::vector<std::pair<double, int>> roots_with_multiplicity(const RealRootSet& roots) {
  std::vector<std::pair<double, int>> out;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, OneSimple>) {
          out.emplace_back(r.root, 1);
        } else if constexpr (std::is_same_v<T, OneTriple>) {
          out.emplace_back(r.root, 3);
        } else if constexpr (std::is_same_v<T, SimpleAndDouble>) {
          out.emplace_back(r.simple, 1);
          out.emplace_back(r.repeated, 2);
        } else {
          out.emplace_back(r.low, 1);
          out.emplace_back(r.mid, 1);
          out.emplace_back(r.high, 1);
        }
      },
      roots);
  return out;
}

int distinct_real_count(const RealRootSet& roots) {
  return static_cast<int>(roots_with_multiplicity(roots).size());
}

Trichotomy classify(const DepressedCubic& g) {
  const double p = g.p;
  const double q = g.q;
  const double delta = g.discriminant();
  const double pc = std::fabs(p) / 3.0;
  const double qc = std::fabs(q) / 2.0;
  const double tol_delta = 1e-12 * std::max({pc * pc * pc, qc * qc, 1.0});
  const double tol_p = 1e-12 * std::max(1.0, std::fabs(p));

  Trichotomy t;
  t.delta = delta;
  t.p = p;
  t.q = q;
  if (delta < -tol_delta) {
    t.branch = CubicBranch::ThreeReal;
    const double s = std::sqrt(-p / 3.0);
    t.theta = detail::clamped_acos((-q / 2.0) / (s * s * s));
  } else if (delta <= tol_delta && p < -tol_p) {
    t.branch = CubicBranch::DoubleRoot;
  } else {
    t.branch = CubicBranch::SingleReal;
  }
  return t;
}

namespace {

bool residual_ok(const DepressedCubic& g, double root) {
  const double m = std::max(1.0, std::fabs(root));
  const double scale = (m * m + std::fabs(g.p)) * m + std::fabs(g.q);
  return std::fabs(g.eval(root)) <= 1e-9 * scale;
}

ThreeSimple solve_three_real(const DepressedCubic& g, double theta) {
  const double m = 2.0 * std::sqrt(-g.p / 3.0);
  const double base = theta / 3.0;
  constexpr double third_turn = 2.0 * std::numbers::pi / 3.0;
  const auto value = [&g](double z) { return g.eval(z); };
  const auto slope = [&g](double z) { return g.derivative(z); };
  // z1 < z2 < z0 in the (theta + 2k pi)/3 labeling.
  ThreeSimple r{m * std::cos(base + third_turn), m * std::cos(base + 2.0 * third_turn),
                m * std::cos(base)};
  r.low = detail::newton_polish(value, slope, r.low);
  r.mid = detail::newton_polish(value, slope, r.mid);
  r.high = detail::newton_polish(value, slope, r.high);
  if (r.low > r.mid) std::swap(r.low, r.mid);
  if (r.mid > r.high) std::swap(r.mid, r.high);
  if (r.low > r.mid) std::swap(r.low, r.mid);
  return r;
}

OneSimple solve_single_real(const DepressedCubic& g, double delta) {
  // delta may be a hair below zero inside the classification band.
  const double sq = std::sqrt(std::max(delta, 0.0));
  const detail::CardanoTerms t = detail::cardano_terms(g.p, g.q, sq);
  const auto value = [&g](double z) { return g.eval(z); };
  const auto slope = [&g](double z) { return g.derivative(z); };
  const double root = detail::newton_polish(value, slope, t.hi + t.lo);
  const double im = 0.5 * std::sqrt(3.0) * (t.hi - t.lo);
  return {root, ComplexPair{-0.5 * root, im}};
}

}  // namespace

RealRootSet solve_depressed(const DepressedCubic& g) {
  const double p = g.p;
  const double q = g.q;
  if (p == 0.0 && q == 0.0) return OneTriple{0.0};

  const Trichotomy tri = classify(g);
  switch (tri.branch) {
    case CubicBranch::ThreeReal:
      return solve_three_real(g, *tri.theta);
    case CubicBranch::DoubleRoot: {
      // Rational forms of the two roots; exact when delta = 0.
      SimpleAndDouble r{3.0 * q / p, -1.5 * q / p};
      const auto value = [&g](double z) { return g.eval(z); };
      const auto slope = [&g](double z) { return g.derivative(z); };
      r.simple = detail::newton_polish(value, slope, r.simple);
      // The double root is a simple root of g', so polish there.
      r.repeated = detail::newton_polish(slope, [](double z) { return 6.0 * z; }, r.repeated);
      if (residual_ok(g, r.simple) && residual_ok(g, r.repeated)) return r;
      // The zero band misfired (possible when |p| and |q| are both far
      // below the band's unit floor); route by the raw sign of delta.
      if (tri.delta < 0.0) {
        const double s = std::sqrt(-p / 3.0);
        return solve_three_real(g, detail::clamped_acos((-q / 2.0) / (s * s * s)));
      }
      return solve_single_real(g, tri.delta);
    }
    case CubicBranch::SingleReal:
    default:
      return solve_single_real(g, tri.delta);
  }
}

namespace {

bool general_residual_ok(const Cubic& f, double root) {
  const double m = std::max(1.0, std::fabs(root));
  const double scale =
      ((std::fabs(f.a) * m + std::fabs(f.b)) * m + std::fabs(f.c)) * m + std::fabs(f.d);
  return std::fabs(f.eval(root)) <= 1e-9 * scale;
}

double bisect_root(const Cubic& f, double lo, double hi, double flo) {
  const bool lo_neg = flo < 0.0;
  for (int i = 0; i < 200 && lo < hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f.eval(mid);
    if (fm == 0.0) return mid;
    ((fm < 0.0) == lo_neg ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Last-resort isolation in the original coordinates. The depressed-form
// closed expressions lose the roots entirely when |x0| exceeds the root
// scale by ~1e8 (the shift cancels every significant digit), which is
// far outside what Newton polishing can repair.
RealRootSet bracketed_rescue(const Cubic& f, RealRootSet fallback) {
  const double bound =
      1.0 + std::max({std::fabs(f.b), std::fabs(f.c), std::fabs(f.d)}) / std::fabs(f.a);
  std::vector<double> edges{-bound};
  const double disc = f.b * f.b - 3.0 * f.a * f.c;
  double clo = 0.0;
  double chi = 0.0;
  if (disc > 0.0) {
    // stable quadratic formula on f'
    const double s = std::sqrt(disc);
    const double t = -(f.b + (f.b >= 0.0 ? s : -s));
    clo = t / (3.0 * f.a);
    chi = f.c / t;
    if (clo > chi) std::swap(clo, chi);
    if (clo > -bound && clo < bound) edges.push_back(clo);
    if (chi > -bound && chi < bound) edges.push_back(chi);
  }
  edges.push_back(bound);

  const auto value = [&f](double x) { return f.eval(x); };
  const auto slope = [&f](double x) { return f.derivative(x); };

  std::vector<double> simple;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double flo = f.eval(edges[i]);
    const double fhi = f.eval(edges[i + 1]);
    if (flo == 0.0 && i == 0) {
      simple.push_back(edges[i]);
      continue;
    }
    if (flo * fhi < 0.0 || (fhi == 0.0 && i + 2 == edges.size())) {
      double r = bisect_root(f, edges[i], edges[i + 1], flo);
      r = detail::newton_polish(value, slope, r);
      if (simple.empty() || simple.back() != r) simple.push_back(r);
    }
  }

  if (simple.size() == 3) return ThreeSimple{simple[0], simple[1], simple[2]};
  if (simple.size() == 1) {
    const double r = simple[0];
    const double re = 0.5 * (-f.b / f.a - r);
    const double im2 = f.c / f.a - 2.0 * r * re - re * re;
    // a touching (double) root sits at a critical point that the sign
    // scan cannot see
    for (double crit : {clo, chi}) {
      if (crit == 0.0 && disc <= 0.0) continue;
      const double m = std::max(1.0, std::fabs(crit));
      const double scale =
          ((std::fabs(f.a) * m + std::fabs(f.b)) * m + std::fabs(f.c)) * m + std::fabs(f.d);
      if (crit != r && std::fabs(f.eval(crit)) <= 1e-12 * scale) {
        const double dbl = detail::newton_polish(
            slope, [&f](double x) { return 6.0 * f.a * x + 2.0 * f.b; }, crit);
        return SimpleAndDouble{r, dbl};
      }
    }
    return OneSimple{r, ComplexPair{re, std::sqrt(std::max(0.0, im2))}};
  }
  return fallback;
}

void shift_and_polish(RealRootSet& rs, const Cubic& f, double x0) {
  const auto value = [&f](double x) { return f.eval(x); };
  const auto slope = [&f](double x) { return f.derivative(x); };
  const auto curve = [&f](double x) { return 6.0 * f.a * x + 2.0 * f.b; };
  std::visit(
      [&](auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, OneSimple>) {
          r.root = detail::newton_polish(value, slope, r.root + x0);
          r.pair.re += x0;
        } else if constexpr (std::is_same_v<T, OneTriple>) {
          r.root += x0;
        } else if constexpr (std::is_same_v<T, SimpleAndDouble>) {
          r.simple = detail::newton_polish(value, slope, r.simple + x0);
          r.repeated = detail::newton_polish(slope, curve, r.repeated + x0);
        } else {
          r.low = detail::newton_polish(value, slope, r.low + x0);
          r.mid = detail::newton_polish(value, slope, r.mid + x0);
          r.high = detail::newton_polish(value, slope, r.high + x0);
          if (r.low > r.mid) std::swap(r.low, r.mid);
          if (r.mid > r.high) std::swap(r.mid, r.high);
          if (r.low > r.mid) std::swap(r.low, r.mid);
        }
      },
      rs);
}

}  // namespace

RealRootSet solve_general(const Cubic& f0) {
  // Normalizing the sign of the leading coefficient leaves the roots
  // unchanged.
  const Cubic f = f0.a < 0.0 ? Cubic{-f0.a, -f0.b, -f0.c, -f0.d} : f0;
  const double x0 = f.inflection();
  RealRootSet rs = solve_depressed(f.depress());
  shift_and_polish(rs, f, x0);

  // The depressed-form expressions can lose a tight root pair when the
  // shift by x0 cancels most of the digits (|b/a| extreme). If any
  // returned root violates the residual contract, rebuild the set by
  // sign-change bracketing in the original coordinates.
  bool ok = true;
  for (const auto& [root, mult] : roots_with_multiplicity(rs)) {
    ok = ok && general_residual_ok(f, root);
    (void)mult;
  }
  if (!ok) rs = bracketed_rescue(f, std::move(rs));
  return rs;
}

std::vector<MonotoneInterval> monotone_intervals(const Cubic& f) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const bool up = f.a > 0.0;
  const double disc = f.b * f.b - 3.0 * f.a * f.c;
  if (disc <= 0.0) return {{-inf, inf, up}};
  const double s = std::sqrt(disc);
  const double r1 = (-f.b - s) / (3.0 * f.a);
  const double r2 = (-f.b + s) / (3.0 * f.a);
  const double lo = std::min(r1, r2);
  const double hi = std::max(r1, r2);
  return {{-inf, lo, up}, {lo, hi, !up}, {hi, inf, up}};
}

}  // namespace cubiprox
