// Serial reference sweep against the OpenMP sweep on the 100 x 100 force
// plane, plus the per-point building blocks.
#include <benchmark/benchmark.h>

#include <omp.h>

#include "qdicc/sweep.hpp"

namespace {

qdicc::SweepSpec plane(int steps) {
  qdicc::SweepSpec spec;
  spec.fixed.sys = qdicc::SystemParams::from_kappa(1.0, 2.5, -1.5);
  spec.fixed.mu_u = 3.0;
  spec.F_E = {0.02, 2.0, steps};
  spec.F_N = {0.02, 2.0, steps};
  return spec;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto spec = plane(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qdicc::sweep_serial(spec));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto spec = plane(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(qdicc::sweep_parallel(spec, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.size()));
  state.counters["threads"] = threads;
}

void BM_SteadyState(benchmark::State& state) {
  const auto spec = plane(2);
  const auto baths = qdicc::resolve_baths(spec.fixed, 1.0, 1.0).baths;
  const qdicc::RateConstants rc(spec.fixed.sys, baths);
  for (auto _ : state) benchmark::DoNotOptimize(qdicc::steady_state(rc));
}

void BM_Point(benchmark::State& state) {
  const auto spec = plane(2);
  for (auto _ : state) benchmark::DoNotOptimize(qdicc::solve_point(spec.fixed, 1.0, 1.0));
}

void parallel_args(benchmark::internal::Benchmark* b) {
  const int max_threads = omp_get_max_threads();
  for (int t = 1; t <= max_threads; t *= 2) b->Args({100, t});
  if ((max_threads & (max_threads - 1)) != 0) b->Args({100, max_threads});
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SteadyState);
BENCHMARK(BM_Point);

BENCHMARK_MAIN();
