#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cubiprox/cubic.hpp"

namespace cubiprox::oracle {

/// Sign-change bracket: lo < hi and f_lo * f_hi <= 0.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

/// One bracket per distinct real root of f, built from sign changes
/// over the monotone pieces clipped to the Cauchy bound
/// 1 + max(|b|,|c|,|d|)/|a|. A critical point where f evaluates to
/// numerical zero is reported as the right endpoint of its piece
/// (double roots).
std::vector<Bracket> isolate_roots(const Cubic& f);

/// Plain bisection; at most 200 halvings or until the interval is
/// below tol. Throws invalid_input on a bad bracket.
double bisect(const Bracket& br, const std::function<double(double)>& f, double tol);

struct GoldenResult {
  double argmin = 0.0;
  double min = 0.0;
};

/// Golden-section minimization of a unimodal f over [lo, hi].
GoldenResult golden_min(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Seed for randomized suites: env CUBIPROX_SEED if set (decimal or
/// 0x-prefixed), else 0x5EED.
std::uint64_t default_seed();

}  // namespace cubiprox::oracle
