#include <benchmark/benchmark.h>

#include "germain/search.hpp"

using namespace germain;

static void BM_scan_theorem1_1e6(benchmark::State& state) {
  ScanConfig cfg;
  cfg.kind = ScanKind::theorem1;
  cfg.lo = 2;
  cfg.hi = 1'000'000;
  cfg.workers = unsigned(state.range(0));
  for (auto _ : state) {
    const ScanResult res = scan(cfg);
    benchmark::DoNotOptimize(res.report.tested);
  }
}
BENCHMARK(BM_scan_theorem1_1e6)->Arg(1)->Arg(2)->Arg(4);

static void BM_scan_wieferich_1e6(benchmark::State& state) {
  ScanConfig cfg;
  cfg.kind = ScanKind::wieferich;
  cfg.lo = 2;
  cfg.hi = 1'000'000;
  cfg.workers = unsigned(state.range(0));
  for (auto _ : state) {
    const ScanResult res = scan(cfg);
    benchmark::DoNotOptimize(res.report.findings_count);
  }
}
BENCHMARK(BM_scan_wieferich_1e6)->Arg(1)->Arg(4);

static void BM_scan_near_wieferich_1e5(benchmark::State& state) {
  ScanConfig cfg;
  cfg.kind = ScanKind::near_wieferich;
  cfg.lo = 2;
  cfg.hi = 100'000;
  cfg.near_threshold = 100;
  for (auto _ : state) {
    const ScanResult res = scan(cfg);
    benchmark::DoNotOptimize(res.findings.size());
  }
}
BENCHMARK(BM_scan_near_wieferich_1e5);

BENCHMARK_MAIN();
