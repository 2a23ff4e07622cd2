#include <benchmark/benchmark.h>

#include "ftspanner/fault_tolerant.hpp"
#include "ftspanner/tree_shortcut.hpp"
#include "ftspanner/verify.hpp"

using namespace ftspanner;

namespace {

void BM_NetTree(benchmark::State& state) {
  const Metric m(gen_uniform_cube(state.range(0), 2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(assign_representatives(build_net_tree(m), m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NetTree)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond)->Complexity();

void BM_BasicSpanner(benchmark::State& state) {
  const Metric m(gen_uniform_cube(state.range(0), 2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(build_basic_spanner(m, {}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BasicSpanner)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond)->Complexity();

void BM_FtSpanner(benchmark::State& state) {
  const Metric m(gen_uniform_cube(4096, 2, 1));
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_ft_spanner(m, {}, k));
}
BENCHMARK(BM_FtSpanner)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TreeShortcut(benchmark::State& state) {
  const WeightedTree t = random_weighted_tree(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(shortcut_tree(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TreeShortcut)->RangeMultiplier(8)->Range(1 << 9, 1 << 18)->Complexity();

void BM_ExactStretch(benchmark::State& state) {
  const Metric m(gen_uniform_cube(512, 2, 1));
  const SpannerGraph g = build_basic_spanner(m, {}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(exact_stretch(m, g));
}
BENCHMARK(BM_ExactStretch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
