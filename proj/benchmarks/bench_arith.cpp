#include <benchmark/benchmark.h>

#include "hitforge/arith.hpp"

using namespace hitforge;

namespace {

// Largest prime below 2^61, so l - 1 has a big prime factor for the dlog leaves.
constexpr std::uint64_t kBigPrime = 2305843009213693951ULL;

void BM_IsPrimeU64(benchmark::State& st) {
  std::uint64_t n = kBigPrime - 2000;
  for (auto _ : st) {
    bool any = false;
    for (std::uint64_t k = 0; k < 1000; ++k) any ^= is_prime(n + k);
    benchmark::DoNotOptimize(any);
  }
  st.SetItemsProcessed(st.iterations() * 1000);
}
BENCHMARK(BM_IsPrimeU64);

void BM_Factorize(benchmark::State& st) {
  // 2^64 + 1 = 274177 * 67280421310721
  const Int n = Int("18446744073709551617");
  for (auto _ : st) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize);

void BM_DiscreteLog(benchmark::State& st) {
  const std::uint64_t l = static_cast<std::uint64_t>(st.range(0));
  const std::uint64_t g = primitive_root(l);
  std::uint64_t h = 3;
  for (auto _ : st) {
    benchmark::DoNotOptimize(discrete_log(g, h, l));
    h = h % (l - 2) + 2;
  }
}
BENCHMARK(BM_DiscreteLog)->Arg(1'000'003)->Arg(1'000'000'007);

void BM_MultOrder(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(mult_order(std::uint64_t{3}, kBigPrime));
}
BENCHMARK(BM_MultOrder);

}  // namespace
