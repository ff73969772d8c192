#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "randflight/params.hpp"

namespace rflight {

struct SimConfig {
  FlightParams params;
  double t = 1.0;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  unsigned workers = 1;

  /// Throws InvalidArgument for t <= 0, samples == 0 or workers == 0.
  void validate() const;
};

struct MomentEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;
  MultiIndex target;
};

struct Trajectory {
  std::vector<double> position;
  unsigned switches = 0;
};

/// Direction drawn uniformly on the unit sphere S^{m-1} as a normalised
/// standard Gaussian vector.
template <class Rng>
void uniform_direction(std::span<double> out, Rng& rng) {
  std::normal_distribution<double> normal;
  for (;;) {
    double norm2 = 0.0;
    for (double& v : out) {
      v = normal(rng);
      norm2 += v * v;
    }
    if (norm2 > 0.0) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (double& v : out) v *= inv;
      return;
    }
  }
}

/// One trajectory on [0, t]: exponential(lambda) holding times, a fresh uniform
/// direction at time 0 and at every switch, straight legs at speed c.
template <class Rng>
Trajectory sample_trajectory(const FlightParams& params, double t, Rng& rng) {
  const unsigned m = params.m();
  Trajectory out{std::vector<double>(m, 0.0), 0};
  std::vector<double> direction(m);
  std::exponential_distribution<double> holding(params.lambda());

  double remaining = t;
  uniform_direction(std::span<double>(direction), rng);
  for (double leg = holding(rng); leg < remaining; leg = holding(rng)) {
    for (unsigned i = 0; i < m; ++i) out.position[i] += params.c() * leg * direction[i];
    remaining -= leg;
    ++out.switches;
    uniform_direction(std::span<double>(direction), rng);
  }
  for (unsigned i = 0; i < m; ++i) out.position[i] += params.c() * remaining * direction[i];
  return out;
}

template <class Rng>
std::vector<double> sample_position(const FlightParams& params, double t, Rng& rng) {
  return sample_trajectory(params, t, rng).position;
}

/// prod_j x_j^{q_j}
double monomial_value(std::span<const double> x, const MultiIndex& index);

/// Running mean and M2 (Welford), mergeable in a fixed order.
struct RunningStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double value) noexcept;
  void merge(const RunningStats& other) noexcept;
  double variance() const noexcept { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }
};

/// Mean of statistic(trajectory) over config.samples independent trajectories.
///
/// Sample i always uses the RNG stream keyed by (seed, i), and per-block
/// statistics are reduced in block order, so the result is bit-identical for
/// any worker count.
RunningStats simulate_statistic(const SimConfig& config,
                                const std::function<double(const Trajectory&)>& statistic);

/// Monte Carlo estimate of E prod_j X_j(t)^{q_j}. Any non-negative multi-index of
/// length m is accepted; UnsupportedIndex otherwise. Needs samples >= 2.
MomentEstimate estimate_moment(const SimConfig& config, const MultiIndex& index);

/// Fraction of trajectories with no direction switch before t (expected e^{-lambda t}).
double singular_mass_estimate(const SimConfig& config);

/// Worker count from the RF_THREADS environment variable, or `fallback`.
unsigned default_workers(unsigned fallback = 1);

}  // namespace rflight
