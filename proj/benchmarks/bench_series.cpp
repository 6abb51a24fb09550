#include <qseries/catalan.hpp>
#include <qseries/convergence.hpp>
#include <qseries/solver.hpp>

#include <benchmark/benchmark.h>

namespace {

using qseries::ExactRational;

void BM_CatalanRecurrenceUncached(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qseries::catalan_recurrence_uncached(n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CatalanRecurrenceUncached)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_CatalanClosed(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qseries::catalan_closed(n));
  }
}
BENCHMARK(BM_CatalanClosed)->RangeMultiplier(2)->Range(64, 1024);

void BM_Lemma1Series(benchmark::State& state) {
  const qseries::QuadraticParams params{ExactRational(3, 2), ExactRational(-5, 3)};
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qseries::lemma1_series(params, order));
  }
}
BENCHMARK(BM_Lemma1Series)->RangeMultiplier(2)->Range(16, 128);

void BM_FixedPointExact(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qseries::fixed_point_solve(ExactRational(3, 2), ExactRational(-5, 3), order));
  }
}
BENCHMARK(BM_FixedPointExact)->RangeMultiplier(2)->Range(16, 128);

void BM_FixedPointFloat(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qseries::fixed_point_solve(1.5, -5.0 / 3.0, order));
  }
}
BENCHMARK(BM_FixedPointFloat)->RangeMultiplier(2)->Range(16, 128);

void BM_HadamardEstimate(benchmark::State& state) {
  const qseries::QuadraticParams params{ExactRational(1), ExactRational(-1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qseries::hadamard_estimate(params, 1000));
  }
}
BENCHMARK(BM_HadamardEstimate);

}  // namespace

BENCHMARK_MAIN();
