#include "cubiprox/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "cubiprox/errors.hpp"

namespace cubiprox::oracle {

namespace {

// Coefficient-magnitude scale of f at x; Horner evaluation noise sits a
// few ulp below this.
double eval_scale(const Cubic& f, double x) {
  const double m = std::max(1.0, std::fabs(x));
  return ((std::fabs(f.a) * m + std::fabs(f.b)) * m + std::fabs(f.c)) * m + std::fabs(f.d);
}

}  // namespace

std::vector<Bracket> isolate_roots(const Cubic& f) {
  const double bound =
      1.0 + std::max({std::fabs(f.b), std::fabs(f.c), std::fabs(f.d)}) / std::fabs(f.a);
  const auto pieces = monotone_intervals(f);

  std::vector<Bracket> out;
  bool prev_hi_zero = false;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const double lo = std::max(pieces[i].lo, -bound);
    const double hi = std::min(pieces[i].hi, bound);
    if (!(lo < hi)) continue;

    const double flo = f.eval(lo);
    const double fhi = f.eval(hi);
    const bool hi_zero =
        i + 1 < pieces.size() && std::fabs(fhi) <= 4e-15 * eval_scale(f, hi);

    if (prev_hi_zero) {
      // root already claimed as the previous piece's right endpoint
      prev_hi_zero = hi_zero;
      continue;
    }
    prev_hi_zero = hi_zero;

    if (hi_zero) {
      out.push_back({lo, hi, flo, 0.0});
    } else if (flo * fhi <= 0.0) {
      out.push_back({lo, hi, flo, fhi});
    }
  }
  return out;
}

double bisect(const Bracket& br, const std::function<double(double)>& f, double tol) {
  if (!(br.lo < br.hi) || !(br.f_lo * br.f_hi <= 0.0)) {
    throw invalid_input("bisect: invalid bracket");
  }
  if (br.f_lo == 0.0) return br.lo;
  if (br.f_hi == 0.0) return br.hi;
  double lo = br.lo;
  double hi = br.hi;
  const bool lo_neg = br.f_lo < 0.0;
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    ((fm < 0.0) == lo_neg ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

GoldenResult golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!(lo <= hi)) throw invalid_input("golden_min: empty interval");
  constexpr double invphi = 0.61803398874989484820;
  double a = lo;
  double b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < 500 && b - a > tol; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CUBIPROX_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 0);
    if (end != env && *end == '\0') return v;
  }
  return 0x5EED;
}

}  // namespace cubiprox::oracle
