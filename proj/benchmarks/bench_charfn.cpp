#include <benchmark/benchmark.h>

#include "randflight/charfn.hpp"
#include "randflight/gamma.hpp"
#include "randflight/moments.hpp"

namespace {

void BM_CharFn(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  const auto p = rflight::validate_params(3, 1.0, 1.0);
  rflight::gamma_table(3, 200);  // warm the shared table
  for (auto _ : state) {
    benchmark::DoNotOptimize(rflight::char_fn({p, {0.7, 0.2, 0.1}, t}));
  }
}
BENCHMARK(BM_CharFn)->Arg(1)->Arg(5)->Arg(10);

void BM_MomentClosedForm(benchmark::State& state) {
  const auto p = rflight::validate_params(3, 2.0, 1.0);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rflight::mu_2marginal(p, t));
    t = t > 5.0 ? 0.0 : t + 0.01;
  }
}
BENCHMARK(BM_MomentClosedForm);

void BM_MomentSeries(benchmark::State& state) {
  const auto p = rflight::validate_params(3, 2.0, 1.0);
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rflight::mu_2marginal_series(p, t));
}
BENCHMARK(BM_MomentSeries)->Arg(1)->Arg(5)->Arg(20);

}  // namespace
