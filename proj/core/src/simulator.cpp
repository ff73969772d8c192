#include "randflight/simulator.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "randflight/error.hpp"
#include "randflight/rng.hpp"

namespace rflight {

namespace {
constexpr std::uint64_t kBlockSize = 8192;
}

void SimConfig::validate() const {
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorKind::InvalidArgument, "horizon t must be > 0");
  if (samples == 0) throw Error(ErrorKind::InvalidArgument, "samples must be >= 1");
  if (workers == 0) throw Error(ErrorKind::InvalidArgument, "workers must be >= 1");
}

double monomial_value(std::span<const double> x, const MultiIndex& index) {
  double value = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (unsigned p = 0; p < index[j]; ++p) value *= x[j];
  }
  return value;
}

void RunningStats::push(double value) noexcept {
  ++count;
  const double delta = value - mean;
  mean += delta / static_cast<double>(count);
  m2 += delta * (value - mean);
}

void RunningStats::merge(const RunningStats& other) noexcept {
  if (other.count == 0) return;
  if (count == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count);
  const double nb = static_cast<double>(other.count);
  const double n = na + nb;
  const double delta = other.mean - mean;
  mean += delta * nb / n;
  m2 += other.m2 + delta * delta * na * nb / n;
  count += other.count;
}

RunningStats simulate_statistic(const SimConfig& config,
                                const std::function<double(const Trajectory&)>& statistic) {
  config.validate();
  const std::uint64_t blocks = (config.samples + kBlockSize - 1) / kBlockSize;
  std::vector<RunningStats> partial(blocks);

  auto run_block = [&](std::uint64_t b) {
    const std::uint64_t begin = b * kBlockSize;
    const std::uint64_t end = std::min(config.samples, begin + kBlockSize);
    RunningStats stats;
    for (std::uint64_t i = begin; i < end; ++i) {
      auto rng = Xoshiro256pp::for_stream(config.seed, i);
      stats.push(statistic(sample_trajectory(config.params, config.t, rng)));
    }
    partial[b] = stats;
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(config.workers, blocks));
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < blocks; b += workers) run_block(b);
      });
    }
  }

  RunningStats total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

MomentEstimate estimate_moment(const SimConfig& config, const MultiIndex& index) {
  index.check_dimension(config.params);
  if (config.samples < 2) throw Error(ErrorKind::InvalidArgument, "moment estimation needs samples >= 2");
  const auto stats = simulate_statistic(
      config, [&index](const Trajectory& tr) { return monomial_value(tr.position, index); });
  MomentEstimate est;
  est.mean = stats.mean;
  est.std_error = std::sqrt(stats.variance() / static_cast<double>(stats.count));
  est.samples = stats.count;
  est.target = index;
  return est;
}

double singular_mass_estimate(const SimConfig& config) {
  const auto stats =
      simulate_statistic(config, [](const Trajectory& tr) { return tr.switches == 0 ? 1.0 : 0.0; });
  return stats.mean;
}

unsigned default_workers(unsigned fallback) {
  const char* env = std::getenv("RF_THREADS");
  if (!env || !*env) return fallback;
  unsigned value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    throw Error(ErrorKind::InvalidArgument, std::string("RF_THREADS must be a positive integer, got '") + env + "'");
  }
  return value;
}

}  // namespace rflight
