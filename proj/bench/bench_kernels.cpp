#include <benchmark/benchmark.h>

#include "hmstab/monomial_engine.hpp"
#include "hmstab/sweep.hpp"

using namespace hmstab;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_EllipticSweep(benchmark::State& state) {
  const auto gs = inclusive_range(3, 12);
  const auto ms = inclusive_range(2, 10);
  for (auto _ : state) benchmark::DoNotOptimize(elliptic_sweep(gs, {3, 4, 5, 6}, ms, mode(state)));
}

void BM_CuspidalTailSweep(benchmark::State& state) {
  const auto gs = inclusive_range(3, 12);
  for (auto _ : state) benchmark::DoNotOptimize(cuspidal_tail_sweep(gs, {2, 3, 4, 5}, mode(state)));
}

void BM_TailMonomials(benchmark::State& state) {
  const auto tail = cuspidal_tail();
  for (auto _ : state) benchmark::DoNotOptimize(tail_monomials(tail, 12, mode(state)));
}

void BM_MinWeightSpanningSet(benchmark::State& state) {
  const auto tail = cuspidal_tail();
  for (auto _ : state) benchmark::DoNotOptimize(min_weight_spanning_set(tail, 6, mode(state)));
}

}  // namespace

BENCHMARK(BM_EllipticSweep)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_CuspidalTailSweep)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_TailMonomials)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_MinWeightSpanningSet)->Arg(0)->Arg(1)->ArgName("parallel");

BENCHMARK_MAIN();
