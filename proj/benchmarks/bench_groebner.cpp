#include <benchmark/benchmark.h>

#include "veronese/groebner.hpp"
#include "veronese/presentation.hpp"

namespace {

using namespace veronese;

void BM_ToricIdeal2d(benchmark::State& state) {
  const auto gens = veronese_generators_2d({{1, state.range(0)}, state.range(1)});
  for (auto _ : state) benchmark::DoNotOptimize(toric_ideal(gens));
  state.counters["s"] = static_cast<double>(gens.size());
}
BENCHMARK(BM_ToricIdeal2d)->Args({5, 7})->Args({29, 47})->Args({2, 13})->Unit(benchmark::kMillisecond);

void BM_ToricIdeal3d(benchmark::State& state) {
  const auto gens = veronese_generators_nd({{3, 4, 5}, state.range(0)}).gens;
  for (auto _ : state) benchmark::DoNotOptimize(toric_ideal(gens));
}
BENCHMARK(BM_ToricIdeal3d)->Arg(6)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_GroebnerCheckOfMinors(benchmark::State& state) {
  const auto gens = veronese_generators_2d({{1, 2}, state.range(0)});
  const auto m = fill_skeleton(build_skeleton(ConvexSequence(gens.gens())), gens);
  const auto lex = TermOrder::lex(gens.size());
  std::vector<Polynomial> polys;
  for (const auto& b : minimal_minors(m)) polys.push_back(b.to_polynomial(lex));
  for (auto _ : state) benchmark::DoNotOptimize(is_groebner_basis(polys, lex));
  state.counters["s"] = static_cast<double>(gens.size());
}
BENCHMARK(BM_GroebnerCheckOfMinors)->Arg(9)->Arg(13)->Arg(17)->Unit(benchmark::kMillisecond);

}  // namespace
