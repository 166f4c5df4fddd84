#include <benchmark/benchmark.h>

#include "berkline/dynamics.hpp"
#include "berkline/graph.hpp"

using namespace berkline;

namespace {

// (T^2 - 1/3) / 3: bad reduction at 3.
RationalMap bad_quadratic(const PrimeConfig& cfg) {
  return RationalMap(Polynomial(std::vector<Rat>{frac(-1, 3), Rat(0), Rat(1)}), Polynomial{3}, cfg);
}

}  // namespace

static void BM_Apply(benchmark::State& state) {
  const PrimeConfig cfg(3);
  const RationalMap phi = bad_quadratic(cfg);
  const BerkPoint x = BerkPoint::disc(frac(1, 3), ValExp(2), cfg);
  for (auto _ : state) benchmark::DoNotOptimize(apply(phi, x));
}
BENCHMARK(BM_Apply);

static void BM_Multiplicity(benchmark::State& state) {
  const PrimeConfig cfg(3);
  const RationalMap phi = bad_quadratic(cfg);
  const BerkPoint x = BerkPoint::disc(Rat(1), ValExp(1), cfg);
  for (auto _ : state) benchmark::DoNotOptimize(multiplicity(phi, x));
}
BENCHMARK(BM_Multiplicity);

static void BM_CallSilverman(benchmark::State& state) {
  const PrimeConfig cfg(3);
  const RationalMap phi = bad_quadratic(cfg);
  const BerkPoint x = BerkPoint::disc(frac(1, 3), ValExp(-1), cfg);
  for (auto _ : state) benchmark::DoNotOptimize(call_silverman(phi, x, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_CallSilverman)->DenseRange(2, 8, 2);

static void BM_LyubichOnGraph(benchmark::State& state) {
  const PrimeConfig cfg(3);
  const RationalMap phi = bad_quadratic(cfg);
  const MetrizedGraph g = span({BerkPoint::disc(Rat(0), ValExp(3), cfg), BerkPoint::disc(Rat(1), ValExp(2), cfg),
                                BerkPoint::disc(Rat(0), ValExp(-2), cfg)});
  for (auto _ : state) benchmark::DoNotOptimize(lyubich_on_graph(phi, g, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_LyubichOnGraph)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
