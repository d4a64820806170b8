#include <benchmark/benchmark.h>

#include <cmath>

#include "entropy_lab/digamma.hpp"
#include "entropy_lab/distribution.hpp"
#include "entropy_lab/estimators.hpp"
#include "entropy_lab/exact_risk.hpp"
#include "entropy_lab/monte_carlo.hpp"

using namespace entropy_lab;

static void BM_Digamma(benchmark::State& state) {
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(digamma(x));
    x += 0.37;
    if (x > 1e6) x = 0.3;
  }
}
BENCHMARK(BM_Digamma);

static void BM_Entropy(benchmark::State& state) {
  const auto p = make_uniform(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(entropy(p));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Entropy)->Range(64, 1 << 16)->Complexity(benchmark::oN);

static void BM_SeparableBias(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const auto p = make_two_level(s, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        exact_bias_separable(EstimatorKind::dirichlet_plugin(1.0), p, 1000));
  }
}
BENCHMARK(BM_SeparableBias)->Arg(10)->Arg(100);

static void BM_SampleCounts(benchmark::State& state) {
  const auto p = make_uniform(static_cast<int>(state.range(0)));
  const SeedSpec seed{7};
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_counts(p, 1000, seed, trial++));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampleCounts)->Range(16, 4096)->Complexity(benchmark::oN);

static void BM_McRisk(benchmark::State& state) {
  const auto p = make_uniform(50);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mc_risk(EstimatorKind::dirichlet_plugin(1.0), p, 1000, state.range(0), SeedSpec{5}));
  }
}
BENCHMARK(BM_McRisk)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_Enumeration(benchmark::State& state) {
  const auto p = Distribution({0.7, 0.2, 0.1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_risk_enumeration(EstimatorKind::mle(), p, 12));
  }
}
BENCHMARK(BM_Enumeration);

BENCHMARK_MAIN();
