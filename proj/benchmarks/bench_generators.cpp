#include <benchmark/benchmark.h>

#include "veronese/presentation.hpp"
#include "veronese/semigroup.hpp"

namespace {

using namespace veronese;

void BM_Generators2d(benchmark::State& state) {
  const VeroneseSpec spec{{1, 29}, state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(veronese_generators_2d(spec));
}
BENCHMARK(BM_Generators2d)->Arg(47)->Arg(997)->Arg(100003);

void BM_GeneratorsNd(benchmark::State& state) {
  const VeroneseSpec spec{{3, 4, 5}, state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(veronese_generators_nd(spec));
}
BENCHMARK(BM_GeneratorsNd)->Arg(6)->Arg(15)->Arg(30);

void BM_FillSkeleton(benchmark::State& state) {
  const auto gens = veronese_generators_2d({{1, state.range(0)}, state.range(1)});
  const auto skeleton = build_skeleton(ConvexSequence(gens.gens()));
  for (auto _ : state) benchmark::DoNotOptimize(fill_skeleton(skeleton, gens));
  state.counters["s"] = static_cast<double>(gens.size());
}
BENCHMARK(BM_FillSkeleton)->Args({29, 47})->Args({2, 17})->Args({13, 97});

}  // namespace
