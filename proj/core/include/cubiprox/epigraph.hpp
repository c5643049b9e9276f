#pragma once

#include "cubiprox/point.hpp"
#include "cubiprox/solve_info.hpp"

namespace cubiprox {

enum class EpiBranch { Interior, Cardano, Trig };

/// Projection onto epi(alpha ||.||^2): projected point, the scalar
/// shift x >= 0 of the height coordinate, and the formula branch used.
struct EpiProjection {
  LabeledPoint point;
  double shift = 0.0;
  EpiBranch branch = EpiBranch::Interior;
};

/// Euclidean projection of (vec, scalar) onto the epigraph of
/// x |-> alpha ||x||^2 over R^n, alpha > 0. Interior points are
/// returned unchanged; exterior points land on the boundary.
EpiProjection project_epigraph(double alpha, const LabeledPoint& p, SolveInfo* info = nullptr);

}  // namespace cubiprox
