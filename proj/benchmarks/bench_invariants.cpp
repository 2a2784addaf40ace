#include <benchmark/benchmark.h>

#include <vector>

#include "veronese/invariants.hpp"
#include "veronese/koszul.hpp"

namespace {

using namespace veronese;

void BM_GradedBetti(benchmark::State& state) {
  std::vector<std::int64_t> degrees;
  for (std::int64_t i = 0; i < state.range(0); ++i) degrees.push_back(1 + (7 * i) % 11);
  for (auto _ : state) benchmark::DoNotOptimize(graded_betti(degrees));
}
BENCHMARK(BM_GradedBetti)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_HilbertExpansion(benchmark::State& state) {
  const auto gens = veronese_generators_2d({{1, 29}, 47});
  const auto hs = hilbert_series(gens.degrees(Grading::Weighted));
  for (auto _ : state) benchmark::DoNotOptimize(expand_series(hs, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_HilbertExpansion)->Arg(200)->Arg(2000);

void BM_QuadraticDefect(benchmark::State& state) {
  const auto gens = veronese_generators_nd({{3, 4, 5}, 15}).gens;
  for (auto _ : state) benchmark::DoNotOptimize(quadratic_defect(gens));
}
BENCHMARK(BM_QuadraticDefect)->Unit(benchmark::kMillisecond);

void BM_QuadraticDefectPlanar(benchmark::State& state) {
  const auto gens = veronese_generators_2d({{1, 2}, state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(quadratic_defect(gens));
  state.counters["s"] = static_cast<double>(gens.size());
}
BENCHMARK(BM_QuadraticDefectPlanar)->Arg(9)->Arg(15)->Unit(benchmark::kMillisecond);

}  // namespace
