#include <benchmark/benchmark.h>

#include <cmath>

#include "ladderlab/analytic.hpp"
#include "ladderlab/dirichlet.hpp"
#include "ladderlab/divisor.hpp"
#include "ladderlab/ladder.hpp"
#include "ladderlab/moments.hpp"
#include "ladderlab/quadrature.hpp"

namespace {

using namespace ladderlab;

void BM_ZetaEulerMaclaurin(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_em(0.75, t));
}
BENCHMARK(BM_ZetaEulerMaclaurin)->Arg(10)->Arg(100)->Arg(1000);

void BM_HardyZ(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hardy_z(t));
}
BENCHMARK(BM_HardyZ)->Arg(100)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_Kronrod(benchmark::State& state) {
  const auto f = [](double t) { return std::cos(t) * std::exp(-0.01 * t); };
  for (auto _ : state) benchmark::DoNotOptimize(integrate_adaptive(f, 0.0, 200.0, 1e-10));
}
BENCHMARK(BM_Kronrod);

void BM_CritIntegral(benchmark::State& state) {
  const double T = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(crit_integral(T, T + 10.0, 1e-8));
}
BENCHMARK(BM_CritIntegral)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_DirichletSumD(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_sum_D(n));
}
BENCHMARK(BM_DirichletSumD)->Arg(1'000'000)->Arg(1'000'000'000);

void BM_SeriesEvaluator(benchmark::State& state) {
  const SeriesEvaluator f(unit_series(2.0), 1e-6);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f(t));
    t += 0.37;
  }
  state.counters["terms"] = static_cast<double>(f.terms());
}
BENCHMARK(BM_SeriesEvaluator);

void BM_LadderInverse(benchmark::State& state) {
  const Ladder ladder;
  for (auto _ : state) benchmark::DoNotOptimize(ladder.phi1_inv(1e4));
}
BENCHMARK(BM_LadderInverse);

}  // namespace

BENCHMARK_MAIN();
