#include <benchmark/benchmark.h>

#include "mittag/kinetics.hpp"
#include "mittag/laplace.hpp"

namespace {

void BM_InvertGammaPower(benchmark::State& state) {
  const mittag::laplace::TransformDescriptor d = mittag::laplace::GammaPower{1.7, 0.8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag::laplace::lt_invert_numeric(d, 1.5));
  }
}
BENCHMARK(BM_InvertGammaPower);

void BM_InvertTwoSided(benchmark::State& state) {
  const mittag::laplace::TransformDescriptor d = mittag::laplace::LaplaceDensity{0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag::laplace::lt_invert_numeric(d, 1.5));
  }
}
BENCHMARK(BM_InvertTwoSided)->Unit(benchmark::kMillisecond);

void BM_InvertKinetic(benchmark::State& state) {
  mittag::kinetics::KineticProblem p;
  p.kind = mittag::kinetics::ProblemKind::MLSource;
  p.mu = 1.4;
  p.nu = 0.7;
  p.c = 1.2;
  const auto d = mittag::kinetics::transform_of(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag::laplace::lt_invert_numeric(d, 2.0));
  }
}
BENCHMARK(BM_InvertKinetic);

void BM_ThreeTermSeries(benchmark::State& state) {
  const mittag::kinetics::ThreeTermTransform tt{1.6, 0.7, 0.5, 1.2,
                                                mittag::kinetics::Numerator::AlphaMinusOne};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag::kinetics::invert_three_term(tt, 2.0));
  }
}
BENCHMARK(BM_ThreeTermSeries);

}  // namespace
