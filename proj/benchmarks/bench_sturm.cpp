#include <benchmark/benchmark.h>

#include "specden/tridiagonal.hpp"

using namespace specden;

static void BM_SturmExact(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto t = spectra::chain_adjacency(m);
  const Rational threshold = pow_rational(Rational(1, 5), static_cast<std::int64_t>((m + 2) / 3));
  for (auto _ : state) {
    auto s = spectra::sturm_count(t, threshold);
    benchmark::DoNotOptimize(s.below);
  }
}
BENCHMARK(BM_SturmExact)->Arg(50)->Arg(200)->Arg(600);

static void BM_Lambda1Enclosure(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto cert = spectra::small_eigenvalue_certificate(m, 60);
    benchmark::DoNotOptimize(cert.pass);
  }
}
BENCHMARK(BM_Lambda1Enclosure)->Arg(20)->Arg(100);

static void BM_FloatEigensolver(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto t = spectra::to_double(spectra::chain_adjacency(m));
  for (auto _ : state) {
    auto ev = spectra::eigenvalues(t);
    benchmark::DoNotOptimize(ev.data());
  }
}
BENCHMARK(BM_FloatEigensolver)->Arg(100)->Arg(500);

static void BM_DeterminantRecurrence(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto d = spectra::uniform_chain_determinant(m);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DeterminantRecurrence)->Arg(500)->Arg(5000);
