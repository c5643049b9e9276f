#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cubiprox/solve_info.hpp"

namespace cubiprox {

/// The set S = {(x, y, g) : <x, y> = alpha*g} in R^n x R^n x R, with
/// the weighted norm ||(x, y, g)||^2 = ||x||^2 + ||y||^2 + beta^2 g^2.
struct SaddleSet {
  double alpha = 1.0;  // != 0
  double beta = 1.0;   // > 0
  std::size_t n = 1;

  SaddleSet(double alpha_, double beta_, std::size_t n_);

  /// Strict inequality admitting the closed form for P_S(z, -z, gamma).
  bool admits_antidiag(double zeta, double gamma) const;
  /// Strict inequality admitting the closed form for P_S(z, z, gamma).
  bool admits_diag(double zeta, double gamma) const;
};

enum class SaddleKind { AntiDiag, Diag };

/// A point (z, -z, gamma) or (z, z, gamma) certified to satisfy the
/// relevant precondition; zeta caches ||z||.
struct SaddleCase {
  SaddleKind kind = SaddleKind::AntiDiag;
  std::vector<double> z;
  double gamma = 0.0;
  double zeta = 0.0;
};

/// Validates z != 0 and the case inequality; throws
/// precondition_violation otherwise.
SaddleCase make_saddle_case(const SaddleSet& S, SaddleKind kind, std::vector<double> z,
                            double gamma);

/// Projection result plus the scalar root x in (-1, 1) that generated
/// it.
struct SaddleProjection {
  std::vector<double> first;
  std::vector<double> second;
  double gamma = 0.0;
  double root = 0.0;
};

SaddleProjection project_antidiag(const SaddleSet& S, std::span<const double> z, double gamma,
                                  SolveInfo* info = nullptr);
SaddleProjection project_diag(const SaddleSet& S, std::span<const double> z, double gamma,
                              SolveInfo* info = nullptr);
SaddleProjection project(const SaddleSet& S, const SaddleCase& c, SolveInfo* info = nullptr);

}  // namespace cubiprox
