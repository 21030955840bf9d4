#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "tropdyn/ergodic.hpp"
#include "tropdyn/maxplus.hpp"
#include "tropdyn/thermo.hpp"

using namespace tropdyn;

namespace {

TransitionSystem doubling(unsigned order) {
  return TransitionSystem::discretize_doubling(
      order, [](double x) { return std::cos(2.0 * M_PI * x) + 0.3 * std::sin(6.0 * M_PI * x); });
}

TropMatrix dense_random(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<int> w(-5, 5);
  TropMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = TropValue{static_cast<double>(w(rng))};
  return m;
}

void BM_MaxCycleMean(benchmark::State& state) {
  const TropMatrix m = dense_random(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_cycle_mean(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxCycleMean)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_KleenePlus(benchmark::State& state) {
  const TropMatrix raw = dense_random(static_cast<std::size_t>(state.range(0)));
  const TropMatrix m = raw.shifted(max_cycle_mean(raw).mean.value());
  for (auto _ : state) benchmark::DoNotOptimize(kleene_plus(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KleenePlus)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_Analyze(benchmark::State& state) {
  const TransitionSystem sys = doubling(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(sys));
}
BENCHMARK(BM_Analyze)->DenseRange(3, 7);

void BM_SubactionLimsup(benchmark::State& state) {
  const TransitionSystem sys = normalize(doubling(static_cast<unsigned>(state.range(0))));
  const TropVector start(sys.size(), kUnit);
  for (auto _ : state) benchmark::DoNotOptimize(subaction_limsup(sys, start));
}
BENCHMARK(BM_SubactionLimsup)->DenseRange(3, 7);

void BM_SpectralData(benchmark::State& state) {
  const TransitionSystem sys = doubling(static_cast<unsigned>(state.range(0)));
  const double beta = static_cast<double>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_data(sys, beta));
}
BENCHMARK(BM_SpectralData)->ArgsProduct({{3, 5, 6}, {10, 1000}})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
