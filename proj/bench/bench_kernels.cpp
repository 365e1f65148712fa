// Parallel kernels against the serial references on realistic operands.

#include <benchmark/benchmark.h>

#include "qser/qproducts.hpp"
#include "qser/rr_series.hpp"
#include "qser/series.hpp"

namespace {

qser::Series operand(std::size_t prec) {
  qser::SeriesRegistry registry;
  return registry.build(qser::NamedSeries::R, prec);
}

void BM_MulParallel(benchmark::State& state) {
  const auto a = operand(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qser::mul(a, a));
}

void BM_MulSerial(benchmark::State& state) {
  const auto a = operand(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qser::serial::mul(a, a));
}

void BM_InverseNewton(benchmark::State& state) {
  const auto a = operand(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qser::inverse(a));
}

void BM_InverseSerial(benchmark::State& state) {
  const auto a = operand(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qser::serial::inverse(a));
}

void BM_EulerPentagonal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qser::euler_f(1, n));
}

void BM_EulerProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qser::euler_f_product(1, n));
}

}  // namespace

BENCHMARK(BM_MulParallel)->Arg(500)->Arg(2000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulSerial)->Arg(500)->Arg(2000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InverseNewton)->Arg(500)->Arg(2000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InverseSerial)->Arg(500)->Arg(2000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EulerPentagonal)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EulerProduct)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
