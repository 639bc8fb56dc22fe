#include <benchmark/benchmark.h>

#include "germain/sieve.hpp"

using namespace germain;

static void BM_primes_to_1e7(benchmark::State& state) {
  for (auto _ : state) {
    uint64_t count = 0;
    primes_in_range({2, 10'000'000}, [&](uint64_t) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_primes_to_1e7);

static void BM_segment_width(benchmark::State& state) {
  const std::size_t bytes = std::size_t(state.range(0));
  for (auto _ : state) {
    uint64_t count = 0;
    primes_in_range({2, 4'000'000, bytes}, [&](uint64_t) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_segment_width)->Arg(4 << 10)->Arg(64 << 10)->Arg(256 << 10)->Arg(2 << 20);

static void BM_is_prime_30bit(benchmark::State& state) {
  uint64_t n = (uint64_t(1) << 30) + 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_prime(n));
    n += 2;
  }
}
BENCHMARK(BM_is_prime_30bit);

static void BM_sophie_germain_to_1e6(benchmark::State& state) {
  for (auto _ : state) {
    uint64_t count = 0;
    sophie_germain_pairs({2, 1'000'000}, 3u, [&](const SophieGermainPair&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_sophie_germain_to_1e6);

BENCHMARK_MAIN();
