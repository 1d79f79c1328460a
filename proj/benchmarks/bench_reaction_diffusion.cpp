#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "mittag/reaction_diffusion.hpp"

namespace {

mittag::rd::RDProblem wave_problem(std::size_t modes) {
  mittag::rd::RDProblem p;
  p.a = 0.5;
  p.nu2 = 1.0;
  p.xi = 0.5;
  p.length = 2.0 * std::numbers::pi;
  p.modes = modes;
  const std::vector<mittag::rd::FourierComponent> u0{{1, 0.8, -0.3}, {2, 0.4, 0.25}, {3, -0.2, 0.1}};
  p.initial_profile = mittag::rd::sample_fourier(u0, p.length, modes);
  p.times = {0.5, 1.0, 2.0};
  return p;
}

void BM_Spectral(benchmark::State& state) {
  const auto p = wave_problem(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag::rd::rd_solve_spectral(p));
  }
}
BENCHMARK(BM_Spectral)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMicrosecond);

void BM_FiniteDifference(benchmark::State& state) {
  const auto p = wave_problem(static_cast<std::size_t>(state.range(0)));
  const double dt = 0.5 * p.length / static_cast<double>(p.modes);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag::rd::rd_solve_fd(p, dt));
  }
}
BENCHMARK(BM_FiniteDifference)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMicrosecond);

}  // namespace
