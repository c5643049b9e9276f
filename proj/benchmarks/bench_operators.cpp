#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <cubiprox/cubic.hpp>
#include <cubiprox/epigraph.hpp>
#include <cubiprox/perspective.hpp>
#include <cubiprox/quartic.hpp>
#include <cubiprox/reciprocal.hpp>
#include <cubiprox/saddle.hpp>

namespace {

using namespace cubiprox;

std::vector<Cubic> cubic_stream(std::size_t n) {
  std::mt19937_64 gen{0x5EED};
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  std::vector<Cubic> out;
  out.reserve(n);
  while (out.size() < n) {
    const double a = coef(gen);
    if (std::fabs(a) < 0.1) continue;
    out.emplace_back(a, coef(gen), coef(gen), coef(gen));
  }
  return out;
}

void BM_SolveGeneral(benchmark::State& state) {
  const auto fs = cubic_stream(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_general(fs[i++ & 1023]));
  }
}
BENCHMARK(BM_SolveGeneral);

void BM_Classify(benchmark::State& state) {
  const auto fs = cubic_stream(1024);
  std::vector<DepressedCubic> gs;
  gs.reserve(fs.size());
  for (const auto& f : fs) gs.push_back(f.depress());
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(gs[i++ & 1023]));
  }
}
BENCHMARK(BM_Classify);

void BM_ProxQuartic(benchmark::State& state) {
  const ConvexQuartic h{1.0, 1.0, 1.0, 1.0, 1.0};
  double y = -10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prox(h, y));
    y = y < 10.0 ? y + 0.01 : -10.0;
  }
}
BENCHMARK(BM_ProxQuartic);

void BM_ProxReciprocal(benchmark::State& state) {
  const ReciprocalFn f{1.0};
  double y = -40.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prox_reciprocal(f, y));
    y = y < 40.0 ? y + 0.01 : -40.0;
  }
}
BENCHMARK(BM_ProxReciprocal);

void BM_ProjectEpigraph(benchmark::State& state) {
  const LabeledPoint p{{1.0, -2.0, 0.5}, -1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_epigraph(0.5, p));
  }
}
BENCHMARK(BM_ProjectEpigraph);

void BM_ProjectSaddleDiag(benchmark::State& state) {
  const SaddleSet S{1.0, 1.0, 2};
  const std::vector<double> z{1.0, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_diag(S, z, 2.0));
  }
}
BENCHMARK(BM_ProjectSaddleDiag);

void BM_ProxPerspective(benchmark::State& state) {
  const LabeledPoint p{{2.0, -1.0}, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(prox_perspective(1.0, p));
  }
}
BENCHMARK(BM_ProxPerspective);

}  // namespace

BENCHMARK_MAIN();
