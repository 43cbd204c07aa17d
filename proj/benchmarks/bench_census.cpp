#include <benchmark/benchmark.h>

#include "specden/bound_table.hpp"
#include "specden/carry_system.hpp"

using namespace specden;

static void BM_BuildAndVerify(benchmark::State& state) {
  const int bits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto sys = carry::build_carry_system({bits});
    const auto rep = carry::verify_no_interference(sys);
    benchmark::DoNotOptimize(rep.ok);
  }
}
BENCHMARK(BM_BuildAndVerify)->Arg(2)->Arg(3)->Arg(4);

static void BM_ChainCensus(benchmark::State& state) {
  const auto sys = carry::build_carry_system({2});
  const int jmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto census = carry::chain_census(sys, jmax);
    benchmark::DoNotOptimize(census.records.size());
  }
}
BENCHMARK(BM_ChainCensus)->Arg(3)->Arg(5);

static void BM_BoundTable(benchmark::State& state) {
  const auto sys = carry::build_carry_system({2});
  const auto census = carry::chain_census(sys, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto table = estimator::bound_table(sys, census, Rational(27, 100));
    benchmark::DoNotOptimize(table.all_ok);
  }
}
BENCHMARK(BM_BoundTable)->Arg(3)->Arg(5);
