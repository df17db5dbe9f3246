#include <benchmark/benchmark.h>

#include "rsac/autocorr.hpp"
#include "rsac/jsr.hpp"
#include "rsac/sequence.hpp"
#include "rsac/specbounds.hpp"
#include "rsac/stats.hpp"

using namespace rsac;

static void BM_AperiodicNaive(benchmark::State& state) {
  const auto seq = rs_sequence(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(aperiodic_table_naive(seq));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AperiodicNaive)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_AperiodicFast(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(aperiodic_table_fast(m));
}
BENCHMARK(BM_AperiodicFast)->DenseRange(6, 22, 4)->Unit(benchmark::kMillisecond);

static void BM_PeriodicFast(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(periodic_table(m));
}
BENCHMARK(BM_PeriodicFast)->DenseRange(6, 22, 4)->Unit(benchmark::kMillisecond);

static void BM_MaxShift(benchmark::State& state) {
  const auto t = aperiodic_table_fast(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_shift(t));
}
BENCHMARK(BM_MaxShift)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_NormBounds(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma4());
}
BENCHMARK(BM_NormBounds)->Unit(benchmark::kMicrosecond);

static void BM_BranchAndBound(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bnb_bracket(depth));
}
BENCHMARK(BM_BranchAndBound)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_InvariantPolytope(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(invariant_polytope());
}
BENCHMARK(BM_InvariantPolytope)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
