#include <benchmark/benchmark.h>

#include "mittag/special_functions.hpp"

namespace {

void BM_MittagLeffler(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0)) / 10.0;
  const double z = -static_cast<double>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag::ml_eval({nu, 1.0, 1.0}, z));
  }
}
BENCHMARK(BM_MittagLeffler)->ArgsProduct({{5, 10, 15}, {1, 4}});

void BM_ThreeParameter(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag::ml_eval({0.8, 1.3, 2.5}, -2.0));
  }
}
BENCHMARK(BM_ThreeParameter);

void BM_Wright(benchmark::State& state) {
  const mittag::WrightParams w = mittag::ml_as_wright(0.9, 1.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag::wright_eval(w, -3.0));
  }
}
BENCHMARK(BM_Wright);

}  // namespace
