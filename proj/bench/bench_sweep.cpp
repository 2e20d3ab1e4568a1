// Serial vs OpenMP phase-map sweep. Arg: grid side length.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <numbers>

#include "qcf/sweep.hpp"

namespace {

qcf::SweepConfig grid(int n) {
  qcf::SweepConfig cfg;
  cfg.theta = {0.0, 2 * std::numbers::pi, n};
  cfg.phi = {0.0, 2 * std::numbers::pi, n};
  cfg.q = {1.0, 0.7};
  cfg.samples = 50;
  cfg.seed = 3;
  return cfg;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto cfg = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qcf::sweep_serial(cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto cfg = grid(static_cast<int>(state.range(0)));
  state.counters["threads"] = omp_get_max_threads();
  for (auto _ : state) benchmark::DoNotOptimize(qcf::sweep_parallel(cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.size()));
}

void BM_Classify(benchmark::State& state) {
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcf::degradability_classify({theta, 0.7, 1.0}));
    theta += 1e-3;
  }
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Classify);

BENCHMARK_MAIN();
