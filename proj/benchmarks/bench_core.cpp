#include <benchmark/benchmark.h>

#include "cfrenorm/cf.hpp"
#include "cfrenorm/coder.hpp"
#include "cfrenorm/growth.hpp"
#include "cfrenorm/oracle.hpp"

using namespace cfr;

namespace {

ExactNumber sample_x(std::size_t bits) {
  std::mt19937_64 rng = trial_rng(7, bits);
  return random_dyadic(rng, bits);
}

void BM_SlowOrbit(benchmark::State& state) {
  ExactNumber x = sample_x(4096);
  SidedPoint y(sample_x(128));
  for (auto _ : state) benchmark::DoNotOptimize(slow_orbit(x, y, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SlowOrbit)->Arg(100)->Arg(1000);

void BM_FastOrbit(benchmark::State& state) {
  ExactNumber x = sample_x(4096);
  SidedPoint y(sample_x(128));
  for (auto _ : state) benchmark::DoNotOptimize(fast_orbit(x, y, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FastOrbit)->Arg(100)->Arg(1000);

void BM_QuadraticSlowSteps(benchmark::State& state) {
  ExactNumber x = ExactNumber::parse("sqrt(7)-2");
  SidedPoint y(ExactNumber::parse("1/3"));
  for (auto _ : state) benchmark::DoNotOptimize(slow_orbit(x, y, state.range(0)));
}
BENCHMARK(BM_QuadraticSlowSteps)->Arg(200);

void BM_SubstitutionCoding(benchmark::State& state) {
  ExactNumber x = ExactNumber::parse("28657/75025");
  SidedPoint y(ExactNumber::parse("3/7"));
  Speed s = state.range(1) ? Speed::fast : Speed::slow;
  for (auto _ : state) benchmark::DoNotOptimize(substitution_coding(x, y, state.range(0), s));
}
BENCHMARK(BM_SubstitutionCoding)->Args({1000, 0})->Args({1000, 1})->Args({100000, 1});

void BM_Omega(benchmark::State& state) {
  ExactNumber x = ExactNumber::parse("28657/75025");
  SidedPoint y(ExactNumber::parse("3/7"));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::omega(x, y, state.range(0)));
}
BENCHMARK(BM_Omega)->Arg(1000)->Arg(100000);

void BM_ApproxSequenceFast(benchmark::State& state) {
  ExactNumber x = sample_x(8192);
  SidedPoint y(sample_x(128));
  for (auto _ : state) benchmark::DoNotOptimize(approx_sequence(x, y, state.range(0), Speed::fast));
}
BENCHMARK(BM_ApproxSequenceFast)->Arg(100)->Arg(1000);

void BM_Expand(benchmark::State& state) {
  ExactNumber x = sample_x(8192);
  Strategy s = state.range(1) == 0 ? Strategy::regular() : Strategy::nearest_integer();
  for (auto _ : state) benchmark::DoNotOptimize(expand(x, s, state.range(0)));
}
BENCHMARK(BM_Expand)->Args({1000, 0})->Args({1000, 1});

void BM_LevyTrial(benchmark::State& state) {
  MonteCarloConfig c;
  c.trials = 1;
  c.depths = {static_cast<std::size_t>(state.range(0))};
  c.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_levy(c));
}
BENCHMARK(BM_LevyTrial)->Arg(5000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
