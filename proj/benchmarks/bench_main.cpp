#include <benchmark/benchmark.h>

#include "timcoop/bounds.hpp"
#include "timcoop/scheduler.hpp"
#include "timcoop/verifier.hpp"

namespace {

using namespace timcoop;

void BM_ScheduleExactWyner(benchmark::State& state) {
  const Topology t = wyner(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(schedule_exact(t));
}
BENCHMARK(BM_ScheduleExactWyner)->DenseRange(3, 12, 3);

void BM_ScheduleExactRandom(benchmark::State& state) {
  const Topology t = random_topology(static_cast<int>(state.range(0)), 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(schedule_exact(t));
}
BENCHMARK(BM_ScheduleExactRandom)->DenseRange(4, 12, 4);

void BM_BestCondition1Wyner(benchmark::State& state) {
  const Topology t = wyner(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(best_condition1_bound(t));
}
BENCHMARK(BM_BestCondition1Wyner)->DenseRange(3, 12, 3);

void BM_UpperBoundGreedy(benchmark::State& state) {
  const Topology t = wyner(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(upper_bound(t, 0));
}
BENCHMARK(BM_UpperBoundGreedy)->Arg(30)->Arg(300);

void BM_MonteCarloFigure4(benchmark::State& state) {
  const Topology t = figure4_example();
  const LinearScheme s = figure4_repetition_scheme();
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_dof(t, s, 50, 0));
}
BENCHMARK(BM_MonteCarloFigure4);

void BM_MonteCarloCooperative(benchmark::State& state) {
  const Topology t = wyner(static_cast<int>(state.range(0)));
  const LinearScheme s = random_scheme(connected_assignment(t), 4, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_dof(t, s, 10, 0));
}
BENCHMARK(BM_MonteCarloCooperative)->Arg(6)->Arg(9);

}  // namespace
BENCHMARK_MAIN();
