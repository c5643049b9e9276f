#pragma once

namespace cubiprox {

/// Optional per-call diagnostics filled by the closed-form operators.
/// `root` is the scalar unknown the operator solved for (prox point,
/// epigraph shift, saddle root x, perspective lambda) and `residual`
/// the defining-equation value at the returned solution.
struct SolveInfo {
  const char* branch = "";
  double p = 0.0;
  double q = 0.0;
  double delta = 0.0;
  double root = 0.0;
  double residual = 0.0;
  bool fallback = false;
};

}  // namespace cubiprox
