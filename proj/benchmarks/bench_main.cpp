#include <benchmark/benchmark.h>

#include <random>

#include "bruhat_flip/csort.hpp"
#include "bruhat_flip/factor.hpp"
#include "bruhat_flip/rtilde.hpp"
#include "bruhat_flip/verifier.hpp"

using namespace bflip;

namespace {

const char* const kGroups[] = {"A3", "B3", "A4", "D4", "B4", "F4"};

void BM_GroupBuild(benchmark::State& state) {
  const char* name = kGroups[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(CoxeterGroup::build(name));
  state.SetLabel(name);
}
BENCHMARK(BM_GroupBuild)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_Leq(benchmark::State& state) {
  auto g = CoxeterGroup::build("F4");
  std::mt19937 rng(1);
  std::vector<std::pair<Elem, Elem>> pairs(4096);
  for (auto& p : pairs) p = {static_cast<Elem>(rng() % g->size()), static_cast<Elem>(rng() % g->size())};
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(g->leq(u, v));
  }
}
BENCHMARK(BM_Leq);

void BM_RTildeRecurrence(benchmark::State& state) {
  auto g = CoxeterGroup::build("A4");
  for (auto _ : state) {
    RTildeRecurrence rec(*g);
    benchmark::DoNotOptimize(rec(0, g->w0()));
  }
}
BENCHMARK(BM_RTildeRecurrence)->Unit(benchmark::kMillisecond);

void BM_RTildeDyer(benchmark::State& state) {
  auto g = CoxeterGroup::build("A4");
  auto ord = default_ordering(*g);
  for (auto _ : state) benchmark::DoNotOptimize(rtilde_dyer(*g, 0, g->w0(), ord));
}
BENCHMARK(BM_RTildeDyer)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const char* name = state.range(0) == 0 ? "B3" : "A4";
  const int h = state.range(0) == 0 ? 3 : 4;
  auto g = CoxeterGroup::build(name);
  auto ord = default_ordering(*g);
  auto c = diagram_coxeter_element(*g);
  for (auto _ : state) benchmark::DoNotOptimize(sweep(*g, h, ord, c));
  state.SetLabel(name);
}
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Factor(benchmark::State& state) {
  auto g = CoxeterGroup::build("A4");
  auto s = sweep(*g, 4, default_ordering(*g), diagram_coxeter_element(*g));
  for (auto _ : state) {
    for (const auto& e : s.entries) benchmark::DoNotOptimize(factor_bivariate(e.valence));
  }
}
BENCHMARK(BM_Factor)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
