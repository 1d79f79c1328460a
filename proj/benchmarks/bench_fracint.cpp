#include <cmath>

#include <benchmark/benchmark.h>

#include "mittag/fracint.hpp"

namespace {

void BM_RiemannLiouville(benchmark::State& state) {
  mittag::fracint::FracIntConfig cfg;
  cfg.steps = static_cast<std::size_t>(state.range(0));
  const auto f = [](double u) { return std::exp(-u); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag::fracint::rl_integral(f, 0.6, 2.0, cfg));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RiemannLiouville)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

// Weights built once and reused across many integrands.
void BM_ReusedWeights(benchmark::State& state) {
  const mittag::fracint::RLQuadrature q(0.6, mittag::fracint::FracIntConfig{});
  const auto f = [](double u) { return std::exp(-u); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(q.integrate(f, 2.0));
  }
}
BENCHMARK(BM_ReusedWeights);

}  // namespace
