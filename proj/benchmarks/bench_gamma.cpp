#include <benchmark/benchmark.h>

#include "randflight/gamma.hpp"
#include "randflight/gamma_recurrence.hpp"
#include "randflight/symbolic.hpp"

namespace {

void BM_GammaTableBuild(benchmark::State& state) {
  const auto max_n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    rflight::GammaTable table(3, max_n);
    benchmark::DoNotOptimize(table.raw(max_n, 1));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GammaTableBuild)->RangeMultiplier(2)->Range(16, 256)->Complexity()->Unit(benchmark::kMillisecond);

void BM_UnifiedRecurrence(benchmark::State& state) {
  const auto max_n = static_cast<unsigned>(state.range(0));
  auto ratio = [](unsigned k) { return rflight::theta_ratio(3, k); };
  for (auto _ : state) {
    auto coeffs = rflight::gamma_coefficients_unified<rflight::Rational>(max_n, ratio);
    benchmark::DoNotOptimize(coeffs);
  }
}
BENCHMARK(BM_UnifiedRecurrence)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_VerifyClosedForms(benchmark::State& state) {
  for (auto _ : state) {
    auto report = rflight::verify_closed_forms(200, {3, 4, 5, 6, 7, 8, 9, 10});
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyClosedForms)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_SymbolicGamma(benchmark::State& state) {
  const auto max_n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto g = rflight::symbolic::gamma_coefficients(max_n);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_SymbolicGamma)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
