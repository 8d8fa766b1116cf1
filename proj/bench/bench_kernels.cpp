// Serial reference vs OpenMP kernels. Thread count follows LAMDET_THREADS or
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "lamdet/engine.hpp"
#include "lamdet/kernels.hpp"

using namespace lamdet;

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::enumerate_asms(n));
}

void BM_EnumerateOmp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::enumerate_asms(n));
}

void BM_Condense(benchmark::State& state, Backend backend) {
  const int n = static_cast<int>(state.range(0));
  const Pyramid base = init_pyramid(n, InitMode::Generic);
  for (auto _ : state) benchmark::DoNotOptimize(condense(base, default_variant(), backend));
}

void BM_ClosedForm(benchmark::State& state, Backend backend) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form(n, n, default_variant(), backend));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateOmp)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Condense, serial, Backend::Serial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Condense, omp, Backend::Parallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ClosedForm, serial, Backend::Serial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ClosedForm, omp, Backend::Parallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
