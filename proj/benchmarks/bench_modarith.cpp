#include <benchmark/benchmark.h>

#include "germain/modarith.hpp"
#include "germain/montgomery.hpp"

using namespace germain;

// The scan's inner shape: 2^p mod q^2 with q = 2p+1 in the ~2e6 range.
static constexpr uint64_t kP = 1004051;
static constexpr uint64_t kQ2 = 2008103ull * 2008103ull;

static void BM_pow_mod_plain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pow_mod(2, kP, kQ2));
}
BENCHMARK(BM_pow_mod_plain);

static void BM_pow_mod_montgomery(benchmark::State& state) {
  const Montgomery mont(kQ2);
  for (auto _ : state) benchmark::DoNotOptimize(mont.pow(2, kP));
}
BENCHMARK(BM_pow_mod_montgomery);

static void BM_pow_mod_montgomery_with_setup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Montgomery(kQ2).pow(2, kP));
}
BENCHMARK(BM_pow_mod_montgomery_with_setup);

static void BM_mul_mod(benchmark::State& state) {
  uint64_t x = 123456789;
  for (auto _ : state) {
    x = mul_mod(x, x, kQ2);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_mul_mod);

static void BM_inv_mod(benchmark::State& state) {
  uint64_t x = 123456789;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inv_mod(x, kQ2));
    ++x;
  }
}
BENCHMARK(BM_inv_mod);

BENCHMARK_MAIN();
