#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace cubiprox {

/// Depressed cubic g(z) = z^3 + p z + q.
struct DepressedCubic {
  double p = 0.0;
  double q = 0.0;

  DepressedCubic(double p_, double q_);

  /// Discriminant proxy (p/3)^3 + (q/2)^2. Its sign decides the
  /// real-root trichotomy.
  double discriminant() const;

  double eval(double z) const;        // Horner
  double derivative(double z) const;  // 3 z^2 + p
};

/// General cubic f(x) = a x^3 + b x^2 + c x + d with a != 0.
struct Cubic {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  Cubic(double a_, double b_, double c_, double d_);

  /// Unique inflection point x0 = -b/(3a).
  double inflection() const { return -b / (3.0 * a); }

  /// Depressed form of f(x0 + z)/a.
  DepressedCubic depress() const;

  double eval(double x) const;  // Horner
  double derivative(double x) const;
};

/// Conjugate nonreal root pair re +- i*im, stored with im >= 0 and
/// reported with the positive imaginary part.
struct ComplexPair {
  double re = 0.0;
  double im = 0.0;
};

// The four real-root configurations of a real cubic. ThreeSimple is
// always ordered ascending.
struct OneSimple {
  double root = 0.0;
  ComplexPair pair;
};
struct OneTriple {
  double root = 0.0;
};
struct SimpleAndDouble {
  double simple = 0.0;
  double repeated = 0.0;
};
struct ThreeSimple {
  double low = 0.0;
  double mid = 0.0;
  double high = 0.0;
};

using RealRootSet = std::variant<OneSimple, OneTriple, SimpleAndDouble, ThreeSimple>;

/// Real roots with multiplicities; total multiplicity is 3 minus twice
/// the number of nonreal pairs.
std::vector<std::pair<double, int>> roots_with_multiplicity(const RealRootSet& roots);

/// Number of distinct real roots (1, 2, or 3).
int distinct_real_count(const RealRootSet& roots);

enum class CubicBranch { SingleReal, DoubleRoot, ThreeReal };

/// Outcome of the discriminant trichotomy for a depressed cubic.
/// theta is the arccos angle of the three-real-root branch, in (0, pi).
struct Trichotomy {
  CubicBranch branch = CubicBranch::SingleReal;
  double delta = 0.0;
  double p = 0.0;
  double q = 0.0;
  std::optional<double> theta;
};

/// Classify the real-root structure of g by the sign of the
/// discriminant, with a scaled tolerance band around zero:
/// |delta| <= 1e-12 * max(|p/3|^3, (q/2)^2, 1) counts as zero, and the
/// double-root branch additionally requires p < -1e-12 * max(1, |p|).
Trichotomy classify(const DepressedCubic& g);

/// All roots of the depressed cubic, classified, Newton-polished.
RealRootSet solve_depressed(const DepressedCubic& g);

/// All roots of the general cubic: solve the depressed form, shift by
/// the inflection point, and re-polish against f. Multiplicities are
/// preserved by the shift.
RealRootSet solve_general(const Cubic& f);

/// A maximal interval of strict monotonicity of f. Unbounded ends are
/// +-infinity.
struct MonotoneInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool increasing = true;
};

/// One interval when b^2 <= 3ac (f strictly monotone on R), otherwise
/// three intervals split at the critical points x- < x+.
std::vector<MonotoneInterval> monotone_intervals(const Cubic& f);

}  // namespace cubiprox
