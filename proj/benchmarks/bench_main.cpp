#include <benchmark/benchmark.h>

#include "ferrers/ferrers.hpp"

namespace {

using namespace ferrers;

const Placement& long_example() {
  static const Placement p = Placement::square(
      Permutation({17, 21, 20, 16, 19, 18, 13, 15, 11, 14, 12, 8, 10, 9, 7, 4, 2, 6, 5, 3, 1}));
  return p;
}

void BM_ASequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(a_sequence(long_example(), 12));
}
BENCHMARK(BM_ASequence);

void BM_BSequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(b_sequence(long_example(), 12));
}
BENCHMARK(BM_BSequence);

void BM_PhiStarDecreasing(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto p = Placement::square(Permutation::decreasing(n));
  for (auto _ : state) benchmark::DoNotOptimize(phi_star(p, 3, TraceOptions{0}));
}
BENCHMARK(BM_PhiStarDecreasing)->Arg(8)->Arg(16)->Arg(32);

void BM_CountAvoiders(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const PatternSet t({decreasing_pattern(4)});
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(Board::square(n), t, false));
}
BENCHMARK(BM_CountAvoiders)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ExploreReductions(benchmark::State& state) {
  const auto p = Placement::square(Permutation({7, 4, 6, 3, 5, 2, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(explore_reductions(p, 3));
}
BENCHMARK(BM_ExploreReductions);

}  // namespace
BENCHMARK_MAIN();
