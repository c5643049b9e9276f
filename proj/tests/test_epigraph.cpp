#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <cubiprox/epigraph.hpp>
#include <cubiprox/errors.hpp>
#include <cubiprox/oracle.hpp>

#include "test_util.hpp"

using namespace cubiprox;

namespace {

double dist(const LabeledPoint& a, const LabeledPoint& b) {
  double s = (a.scalar - b.scalar) * (a.scalar - b.scalar);
  for (std::size_t i = 0; i < a.vec.size(); ++i) {
    s += (a.vec[i] - b.vec[i]) * (a.vec[i] - b.vec[i]);
  }
  return std::sqrt(s);
}

// Best boundary point along the radial direction of p.vec: the curve
// t >= 0 |-> (t*u, alpha t^2), coarse grid plus golden refinement.
LabeledPoint radial_oracle(double alpha, const LabeledPoint& p) {
  const double nu = norm(p.vec);
  const double tmax = nu + std::sqrt(std::max(0.0, p.scalar) / alpha) + 2.0;
  const auto dist2 = [&](double t) {
    const double dv = t - nu;
    const double dh = alpha * t * t - p.scalar;
    return dv * dv + dh * dh;
  };
  double best_t = 0.0;
  double best = dist2(0.0);
  const int cells = 4000;
  for (int i = 1; i <= cells; ++i) {
    const double t = tmax * i / cells;
    const double d = dist2(t);
    if (d < best) {
      best = d;
      best_t = t;
    }
  }
  const double lo = std::max(0.0, best_t - 2.0 * tmax / cells);
  const double hi = std::min(tmax, best_t + 2.0 * tmax / cells);
  const double t = oracle::golden_min(dist2, lo, hi, 1e-9).argmin;
  LabeledPoint out;
  out.vec = nu > 0.0 ? scaled(p.vec, t / nu) : std::vector<double>(p.vec.size(), 0.0);
  out.scalar = alpha * t * t;
  return out;
}

LabeledPoint random_exterior(std::mt19937_64& gen, std::size_t n, double alpha) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> drop(0.05, 4.0);
  LabeledPoint p;
  p.vec = testutil::random_vector(gen, n, -3.0, 3.0);
  const double nu = norm(p.vec);
  p.scalar = alpha * nu * nu - drop(gen);
  return p;
}

}  // namespace

TEST_CASE("projection reference instances") {
  SUBCASE("axis point below the vertex") {
    const auto pr = project_epigraph(1.0, LabeledPoint{{0.0}, -1.0});
    CHECK(pr.branch != EpiBranch::Interior);
    CHECK(pr.shift == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pr.point.vec[0] == 0.0);
    CHECK(pr.point.scalar == doctest::Approx(0.0).epsilon(1e-14));
  }
  SUBCASE("(2, 0) lands on (t, t^2) with 2t^3 + t - 2 = 0") {
    const auto pr = project_epigraph(1.0, LabeledPoint{{2.0}, 0.0});
    CHECK(std::fabs(pr.point.vec[0] - 0.8351223484813665) <= 1e-8);
    CHECK(std::fabs(pr.point.scalar - 0.6974293369330330) <= 1e-8);
  }
  SUBCASE("interior point is fixed") {
    const auto pr = project_epigraph(1.0, LabeledPoint{{1.0}, 2.0});
    CHECK(pr.branch == EpiBranch::Interior);
    CHECK(pr.shift == 0.0);
    CHECK(pr.point.vec[0] == 1.0);
    CHECK(pr.point.scalar == 2.0);
  }
  SUBCASE("2-d instance matches the radial oracle") {
    const LabeledPoint p{{3.0, 4.0}, 0.0};
    const auto pr = project_epigraph(0.5, p);
    const LabeledPoint g = radial_oracle(0.5, p);
    CHECK(dist(pr.point, g) <= 1e-6);
  }
  CHECK_THROWS_AS(project_epigraph(0.0, LabeledPoint{{1.0}, 0.0}), invalid_input);
  CHECK_THROWS_AS(project_epigraph(-1.0, LabeledPoint{{1.0}, 0.0}), invalid_input);
}

TEST_CASE("boundary membership, idempotence, optimality, nonexpansiveness") {
  auto gen = testutil::rng(31);
  int bad_member = 0;
  int bad_idem = 0;
  int bad_opt = 0;
  int bad_nonexp = 0;
  for (double alpha : {0.5, 1.0, 3.0}) {
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{5}}) {
      for (int i = 0; i < 120; ++i) {
        const LabeledPoint p = random_exterior(gen, n, alpha);
        const auto pr = project_epigraph(alpha, p);

        const double nu2 = dot(pr.point.vec, pr.point.vec);
        const double scale = std::max(1.0, alpha * dot(p.vec, p.vec));
        if (std::fabs(alpha * nu2 - pr.point.scalar) > 1e-8 * scale) ++bad_member;

        const auto again = project_epigraph(alpha, pr.point);
        if (dist(again.point, pr.point) > 1e-9) ++bad_idem;

        const LabeledPoint g = radial_oracle(alpha, p);
        if (dist(p, pr.point) > dist(p, g) + 1e-6) ++bad_opt;

        const LabeledPoint p2 = random_exterior(gen, n, alpha);
        const auto pr2 = project_epigraph(alpha, p2);
        if (dist(pr.point, pr2.point) > dist(p, p2) + 1e-10) ++bad_nonexp;
      }
    }
  }
  CHECK(bad_member == 0);
  CHECK(bad_idem == 0);
  CHECK(bad_opt == 0);
  CHECK(bad_nonexp == 0);
}

TEST_CASE("normal-cone optimality: p - P is a nonnegative multiple of (2a P, -1)") {
  auto gen = testutil::rng(32);
  int bad = 0;
  for (int i = 0; i < 2000; ++i) {
    const double alpha = 0.4 + 2.0 * (i % 7) / 6.0;
    const LabeledPoint p = random_exterior(gen, 2 + i % 3, alpha);
    const auto pr = project_epigraph(alpha, p);

    std::vector<double> v(p.vec.size() + 1);
    std::vector<double> nrm(p.vec.size() + 1);
    for (std::size_t k = 0; k < p.vec.size(); ++k) {
      v[k] = p.vec[k] - pr.point.vec[k];
      nrm[k] = 2.0 * alpha * pr.point.vec[k];
    }
    v.back() = p.scalar - pr.point.scalar;
    nrm.back() = -1.0;

    const double nn = norm(nrm);
    const double mult = dot(v, nrm) / (nn * nn);
    if (mult < -1e-12) ++bad;
    double off2 = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const double r = v[k] - mult * nrm[k];
      off2 += r * r;
    }
    if (std::sqrt(off2) > 1e-7 * std::max(1e-300, norm(v))) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("rotational equivariance") {
  auto gen = testutil::rng(33);
  std::uniform_real_distribution<double> ang(0.0, 6.28318530717958648);
  int bad = 0;
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 2 + i % 4;
    const double alpha = 0.3 + (i % 5) * 0.6;
    const LabeledPoint p = random_exterior(gen, n, alpha);

    // Givens rotation in a random coordinate plane.
    const std::size_t a = i % n;
    const std::size_t b = (a + 1 + i % (n - 1)) % n;
    const double phi = ang(gen);
    const double cs = std::cos(phi);
    const double sn = std::sin(phi);
    const auto rotate = [&](std::vector<double> v) {
      const double va = v[a];
      const double vb = v[b];
      v[a] = cs * va - sn * vb;
      v[b] = sn * va + cs * vb;
      return v;
    };

    const auto direct = project_epigraph(alpha, LabeledPoint{rotate(p.vec), p.scalar});
    const auto rotated = rotate(project_epigraph(alpha, p).point.vec);
    for (std::size_t k = 0; k < n; ++k) {
      if (std::fabs(direct.point.vec[k] - rotated[k]) > 1e-9) {
        ++bad;
        break;
      }
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("discriminant sum form agrees with the product form") {
  auto gen = testutil::rng(34);
  int bad = 0;
  for (int i = 0; i < 5000; ++i) {
    const double alpha = 0.2 + 3.0 * (i % 11) / 10.0;
    const LabeledPoint p = random_exterior(gen, 1 + i % 3, alpha);
    SolveInfo info;
    project_epigraph(alpha, p, &info);

    const double nu2 = dot(p.vec, p.vec);
    const double w = 2.0 * alpha * p.scalar - 1.0;
    const double a4 = alpha * alpha * alpha * alpha;
    const double product = nu2 * (27.0 * alpha * alpha * nu2 - 2.0 * w * w * w) / (1728.0 * a4);
    const double pc = std::fabs(info.p) / 3.0;
    const double qc = std::fabs(info.q) / 2.0;
    const double denom = std::max({pc * pc * pc, qc * qc, 1e-300});
    if (std::fabs(info.delta - product) > 1e-10 * denom) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("degenerate exterior axis points (nu = 0)") {
  for (double alpha : {0.5, 1.0, 2.5}) {
    for (double eta : {-4.0, -1.0, -1e-3}) {
      const auto pr = project_epigraph(alpha, LabeledPoint{{0.0, 0.0}, eta});
      CHECK(pr.shift == doctest::Approx(-eta).epsilon(1e-12));
      CHECK(pr.point.scalar == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(norm(pr.point.vec) == 0.0);
    }
  }
}
