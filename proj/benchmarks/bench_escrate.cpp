#include "escrate/extremal.hpp"
#include "escrate/oracle.hpp"
#include "escrate/roots.hpp"

#include <benchmark/benchmark.h>

using namespace escrate;

namespace {

Word prime_word(std::size_t r) {
  std::vector<Symbol> letters(r, 0);
  letters.back() = 1;
  return Word(letters, 2);
}

void BM_EscapeRatePrime(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const auto mu = BernoulliMeasure::two_symbols(ratio(7, 10));
  const Word w = prime_word(r);
  for (auto _ : state) benchmark::DoNotOptimize(escape_rate(w, mu));
}
BENCHMARK(BM_EscapeRatePrime)->Arg(4)->Arg(16)->Arg(64);

void BM_EscapeRateMarkov(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const MarkovChain mc(Matrix2{{{ratio(3, 4), ratio(1, 4)}, {ratio(1, 3), ratio(2, 3)}}});
  const Word w = prime_word(r);
  for (auto _ : state) benchmark::DoNotOptimize(escape_rate(w, mc));
}
BENCHMARK(BM_EscapeRateMarkov)->Arg(4)->Arg(16);

void BM_SurvivalSeries(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto mu = BernoulliMeasure::two_symbols(ratio(1, 2));
  const Word w({0, 0, 1, 1, 0, 0}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(survival_series(w, mu, n));
}
BENCHMARK(BM_SurvivalSeries)->Arg(20)->Arg(200);

void BM_BruteForceScan(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const auto mu = BernoulliMeasure::two_symbols(ratio(3, 5));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_gamma_max(r, mu));
}
BENCHMARK(BM_BruteForceScan)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_GammaMaxTwoSymbols(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_max_two_symbols(r, ratio(19, 20)));
}
BENCHMARK(BM_GammaMaxTwoSymbols)->Arg(10)->Arg(40);

} // namespace
BENCHMARK_MAIN();
