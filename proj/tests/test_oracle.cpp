#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <cubiprox/errors.hpp>
#include <cubiprox/oracle.hpp>

#include "test_util.hpp"

using namespace cubiprox;
using oracle::Bracket;

namespace {

bool some_bracket_contains(const std::vector<Bracket>& brs, double x) {
  for (const auto& b : brs) {
    if (b.lo <= x && x <= b.hi) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("isolate_roots brackets every distinct real root") {
  SUBCASE("three simple roots") {
    const auto brs = oracle::isolate_roots(Cubic{1.0, -6.0, 11.0, -6.0});
    REQUIRE(brs.size() == 3);
    CHECK(some_bracket_contains(brs, 1.0));
    CHECK(some_bracket_contains(brs, 2.0));
    CHECK(some_bracket_contains(brs, 3.0));
  }
  SUBCASE("monotone cubic") {
    const auto brs = oracle::isolate_roots(Cubic{1.0, 0.0, 1.0, 0.0});
    REQUIRE(brs.size() == 1);
    CHECK(some_bracket_contains(brs, 0.0));
  }
  SUBCASE("double root via critical-point value") {
    const auto brs = oracle::isolate_roots(Cubic{1.0, 0.0, -3.0, 2.0});  // (x-1)^2 (x+2)
    REQUIRE(brs.size() == 2);
    CHECK(some_bracket_contains(brs, -2.0));
    CHECK(some_bracket_contains(brs, 1.0));
  }
}

TEST_CASE("bisect pins the frozen reference roots") {
  const auto root = [](double lo, double hi, auto f) {
    const Bracket br{lo, hi, f(lo), f(hi)};
    return oracle::bisect(br, f, 1e-10);
  };
  CHECK(root(0.0, 1.0, [](double t) { return 2.0 * t * t * t + t - 2.0; }) ==
        doctest::Approx(0.8351223484813665).epsilon(1e-9));
  CHECK(root(1.0, 2.0, [](double l) { return l * l * l + 2.0 * l - 4.0; }) ==
        doctest::Approx(1.1795090246029168).epsilon(1e-9));
  CHECK(root(2.0, 3.0, [](double x) { return x * x * x - 2.0 * x * x - 1.0; }) ==
        doctest::Approx(2.2055694304005903).epsilon(1e-9));
}

TEST_CASE("bisect rejects invalid brackets") {
  const auto f = [](double x) { return x; };
  CHECK_THROWS_AS(oracle::bisect(Bracket{1.0, 0.0, 1.0, -1.0}, f, 1e-10), invalid_input);
  CHECK_THROWS_AS(oracle::bisect(Bracket{1.0, 2.0, 1.0, 2.0}, f, 1e-10), invalid_input);
}

TEST_CASE("golden_min on convex references") {
  const auto sq = oracle::golden_min([](double x) { return (x - 1.0) * (x - 1.0); }, 0.0, 3.0, 1e-10);
  CHECK(sq.argmin == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(sq.min == doctest::Approx(0.0).epsilon(1e-12));

  const auto quart =
      oracle::golden_min([](double x) { return x * x * x * x + 0.5 * x * x; }, -1.0, 1.0, 1e-10);
  CHECK(std::fabs(quart.argmin) < 1e-7);
  CHECK(quart.min == doctest::Approx(0.0).epsilon(1e-12));

  // prox objective of 1/x at y = 2; location matches the bisect value.
  const auto recip = oracle::golden_min(
      [](double x) { return 1.0 / x + 0.5 * (x - 2.0) * (x - 2.0); }, 1e-6, 10.0, 1e-10);
  CHECK(recip.argmin == doctest::Approx(2.2055694304005903).epsilon(1e-6));
  CHECK(recip.min == doctest::Approx(0.4745270468740153).epsilon(1e-10));
}

TEST_CASE("bisect and golden_min agree on shared stationarity instances") {
  auto gen = testutil::rng(8);
  std::uniform_real_distribution<double> yd(-8.0, 8.0);
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    const double y = yd(gen);
    // prox objective of x^4: minimizer solves 4x^3 + x - y = 0
    const auto slope = [y](double x) { return 4.0 * x * x * x + x - y; };
    const Bracket br{-3.0, 3.0, slope(-3.0), slope(3.0)};
    const double via_bisect = oracle::bisect(br, slope, 1e-12);
    const auto via_golden = oracle::golden_min(
        [y](double x) { return x * x * x * x + 0.5 * (x - y) * (x - y); }, -3.0, 3.0, 1e-10);
    if (std::fabs(via_bisect - via_golden.argmin) > 1e-6) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("default_seed is the documented constant without the env override") {
  if (std::getenv("CUBIPROX_SEED") == nullptr) {
    CHECK(oracle::default_seed() == 0x5EED);
  }
}
