#include <benchmark/benchmark.h>

#include "berkline/capacity.hpp"
#include "berkline/harmonic.hpp"

using namespace berkline;

static void BM_EquilibriumZpLevel(benchmark::State& state) {
  const PrimeConfig cfg(static_cast<unsigned long>(state.range(0)));
  const DiscUnion e = zp_level_set(cfg, static_cast<unsigned>(state.range(1)));
  const BerkPoint inf = BerkPoint::infinity(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(equilibrium(e, inf));
  state.counters["discs"] = static_cast<double>(e.size());
}
BENCHMARK(BM_EquilibriumZpLevel)->Args({2, 6})->Args({2, 10})->Args({3, 6})->Args({5, 5})->Unit(benchmark::kMillisecond);

static void BM_EquilibriumActiveSet(benchmark::State& state) {
  const PrimeConfig cfg(3);
  const DiscUnion e = zp_level_set(cfg, static_cast<unsigned>(state.range(0)));
  const BerkPoint inf = BerkPoint::infinity(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(equilibrium_active_set(e, inf));
}
BENCHMARK(BM_EquilibriumActiveSet)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_TransfiniteDiameter(benchmark::State& state) {
  const PrimeConfig cfg(2);
  const DiscUnion e = zp_level_set(cfg, 2);
  const auto cands = refined_candidates(e, 2);
  const BerkPoint inf = BerkPoint::infinity(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(transfinite_diameter(e, static_cast<unsigned>(state.range(0)), cands, inf));
}
BENCHMARK(BM_TransfiniteDiameter)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_Chebyshev(benchmark::State& state) {
  const PrimeConfig cfg(2);
  const DiscUnion e = zp_level_set(cfg, 2);
  const auto cands = refined_candidates(e, 1);
  const BerkPoint inf = BerkPoint::infinity(cfg);
  for (auto _ : state)
    benchmark::DoNotOptimize(chebyshev(e, static_cast<unsigned>(state.range(0)), ChebyshevMode::restricted, cands, inf));
}
BENCHMARK(BM_Chebyshev)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_HarmonicMeasures(benchmark::State& state) {
  const PrimeConfig cfg(3);
  std::vector<BerkPoint> boundary;
  for (long i = 0; i < state.range(0); ++i) boundary.push_back(BerkPoint::disc(Rat(i), ValExp(2 + i % 3), cfg));
  const BerkPoint g = BerkPoint::gauss(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_measures(boundary, g));
}
BENCHMARK(BM_HarmonicMeasures)->DenseRange(2, 6, 2);
