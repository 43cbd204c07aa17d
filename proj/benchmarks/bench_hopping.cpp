#include <benchmark/benchmark.h>

#include "specden/hopping.hpp"

using namespace specden::hopping;

static void BM_SampleCouplings(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto law = CouplingLaw::corollary();
  for (auto _ : state) {
    auto w = sample_couplings(law, n, 1);
    benchmark::DoNotOptimize(w.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SampleCouplings)->Arg(100000)->Arg(1000000);

static void BM_CountBelow(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto w = sample_couplings(CouplingLaw::corollary(), n - 1, 1);
  double e = 1e-8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_below(w, e));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_CountBelow)->Arg(100000)->Arg(1000000);

static void BM_DosWindow(benchmark::State& state) {
  const auto law = CouplingLaw::corollary();
  for (auto _ : state) {
    auto est = dos_window(law, 100000, 2, {1e-1, 1e-4, 1e-8}, 3);
    benchmark::DoNotOptimize(est.mu.data());
  }
}
BENCHMARK(BM_DosWindow);
