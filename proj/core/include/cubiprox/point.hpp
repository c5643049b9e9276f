#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace cubiprox {

/// A point of R^n x R: vector part plus a distinguished scalar
/// coordinate (epigraph height, saddle offset, perspective weight).
struct LabeledPoint {
  std::vector<double> vec;
  double scalar = 0.0;

  std::size_t dim() const { return vec.size(); }
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(std::span<const double> v) {
  // hypot-style scaling is unnecessary here; operands are O(1)-scaled.
  return std::sqrt(dot(v, v));
}

inline std::vector<double> scaled(std::span<const double> v, double s) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

}  // namespace cubiprox
