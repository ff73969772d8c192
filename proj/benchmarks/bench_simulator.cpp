#include <benchmark/benchmark.h>

#include "randflight/rng.hpp"
#include "randflight/simulator.hpp"

namespace {

void BM_SampleTrajectory(benchmark::State& state) {
  const auto p = rflight::validate_params(static_cast<long>(state.range(0)), 1.0, 1.0);
  std::uint64_t i = 0;
  for (auto _ : state) {
    auto rng = rflight::Xoshiro256pp::for_stream(1, i++);
    benchmark::DoNotOptimize(rflight::sample_trajectory(p, 2.0, rng));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SampleTrajectory)->Arg(3)->Arg(10);

void BM_EstimateMoment(benchmark::State& state) {
  const rflight::SimConfig config{rflight::validate_params(3, 2.0, 1.0), 1.0, 200000, 7,
                                  static_cast<unsigned>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rflight::estimate_moment(config, rflight::MultiIndex{2, 2, 0}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.samples));
}
BENCHMARK(BM_EstimateMoment)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
