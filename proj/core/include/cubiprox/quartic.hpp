#pragma once

#include "cubiprox/solve_info.hpp"

namespace cubiprox {

/// True iff alpha x^4 + beta x^3 + gamma x^2 + delta x + epsilon is
/// convex on R: alpha > 0 and 8 alpha gamma >= 3 beta^2.
bool is_convex(double alpha, double beta, double gamma, double delta, double epsilon);

/// Quartic certified convex at construction.
struct ConvexQuartic {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;

  ConvexQuartic(double alpha_, double beta_, double gamma_, double delta_, double epsilon_);

  double value(double x) const;       // Horner
  double derivative(double x) const;  // 4a x^3 + 3b x^2 + 2g x + d
};

/// Conjugate evaluation h*(y) = y*argmax - h(argmax), with argmax the
/// unique solution of h'(x) = y.
struct ConjugateValue {
  double argmax = 0.0;
  double value = 0.0;
};

ConjugateValue conjugate(const ConvexQuartic& h, double y, SolveInfo* info = nullptr);

/// Unique minimizer of h(x) + (x-y)^2/2, i.e. the root of h'(x)+x-y.
double prox(const ConvexQuartic& h, double y, SolveInfo* info = nullptr);

/// Closed-form prox of x^4+x^3+x^2+x+1.
double prox_geometric(double y);

/// Closed-form prox of alpha x^4 (alpha > 0); odd in y.
double prox_pure_quartic(double alpha, double y);

}  // namespace cubiprox
