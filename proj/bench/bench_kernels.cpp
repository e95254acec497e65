#include <benchmark/benchmark.h>

#include "irbar/checks.hpp"
#include "irbar/rng.hpp"

namespace {

irbar::IMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  irbar::IMatrix a(n);
  for (std::size_t i = 0; i < n * n; ++i) {
    irbar::CounterRng rng(seed, i);
    a(i / n, i % n) = irbar::sample_class(rng);
  }
  return a;
}

void BM_MatmulSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(irbar::matmul_serial(a, b));
}

void BM_MatmulParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(irbar::matmul(a, b));
}

void BM_ProbeSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(irbar::probe_associativity(42, n, irbar::Exec::Serial));
}

void BM_ProbeParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(irbar::probe_associativity(42, n, irbar::Exec::Parallel));
}

}  // namespace

BENCHMARK(BM_MatmulSerial)->Arg(16)->Arg(64);
BENCHMARK(BM_MatmulParallel)->Arg(16)->Arg(64);
BENCHMARK(BM_ProbeSerial)->Arg(10000);
BENCHMARK(BM_ProbeParallel)->Arg(10000);

BENCHMARK_MAIN();
