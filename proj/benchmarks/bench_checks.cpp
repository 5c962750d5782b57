#include <benchmark/benchmark.h>

#include "gctc/congruences.hpp"
#include "gctc/sweep.hpp"

namespace {

using namespace gctc;

// Largest prime not exceeding n.
std::uint64_t prime_below(std::uint64_t n) {
  while (!is_prime(n)) --n;
  return n;
}

void BM_TrinomialSquareSum(benchmark::State& state) {
  const std::uint64_t p = prime_below(static_cast<std::uint64_t>(state.range(0)));
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 2);
  const TrinomialParams params(4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(trinomial_square_sum(params, 36, mod));
  state.SetComplexityN(static_cast<std::int64_t>(p));
}
BENCHMARK(BM_TrinomialSquareSum)->RangeMultiplier(4)->Range(64, 65536)->Complexity(benchmark::oN);

void BM_ThmI(benchmark::State& state) {
  const std::uint64_t p = prime_below(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_thm_i(TrinomialParams(3, 1), p));
  state.SetComplexityN(static_cast<std::int64_t>(p));
}
BENCHMARK(BM_ThmI)->RangeMultiplier(4)->Range(64, 65536)->Complexity(benchmark::oN);

void BM_ThmII(benchmark::State& state) {
  const std::uint64_t p = prime_below(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_thm_ii(TrinomialParams(4, 1), 36, p));
  state.SetComplexityN(static_cast<std::int64_t>(p));
}
BENCHMARK(BM_ThmII)->RangeMultiplier(4)->Range(64, 65536)->Complexity(benchmark::oN);

void BM_Eq13(benchmark::State& state) {
  const std::uint64_t p = prime_below(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_eq_1_3(TrinomialParams(1, 1), p));
  state.SetComplexityN(static_cast<std::int64_t>(p));
}
BENCHMARK(BM_Eq13)->RangeMultiplier(4)->Range(64, 65536)->Complexity(benchmark::oN);

void BM_Conj54(benchmark::State& state) {
  const std::uint64_t p = prime_below(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_conj_5_4(p));
  state.SetComplexityN(static_cast<std::int64_t>(p));
}
BENCHMARK(BM_Conj54)->RangeMultiplier(4)->Range(64, 65536)->Complexity(benchmark::oN);

void BM_SunTauraso(benchmark::State& state) {
  const std::uint64_t p = prime_below(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_sun_tauraso(2, p));
  state.SetComplexityN(static_cast<std::int64_t>(p));
}
BENCHMARK(BM_SunTauraso)->RangeMultiplier(4)->Range(64, 65536)->Complexity(benchmark::oN);

void BM_Sieve(benchmark::State& state) {
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve_primes(3, hi));
}
BENCHMARK(BM_Sieve)->Range(1 << 10, 1 << 22);

}  // namespace

BENCHMARK_MAIN();
