#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>

#include "randflight/error.hpp"
#include "randflight/moments.hpp"
#include "randflight/rng.hpp"
#include "randflight/simulator.hpp"

using namespace rflight;

namespace {

double norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

SimConfig config(unsigned m, double c, double lambda, double t, std::uint64_t samples, std::uint64_t seed,
                 unsigned workers = 1) {
  return SimConfig{validate_params(m, c, lambda), t, samples, seed, workers};
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("rng streams") {
  auto a = Xoshiro256pp::for_stream(1, 0);
  auto b = Xoshiro256pp::for_stream(1, 0);
  auto c = Xoshiro256pp::for_stream(1, 1);
  auto d = Xoshiro256pp::for_stream(2, 0);
  const auto first = a();
  CHECK(first == b());
  CHECK(first != c());
  CHECK(first != d());
}

TEST_CASE("support of the position") {
  for (unsigned m : {3u, 4u, 8u}) {
    const auto p = validate_params(m, 1.7, 2.0);
    const double t = 1.3;
    for (std::uint64_t i = 0; i < 20000; ++i) {
      auto rng = Xoshiro256pp::for_stream(99, i);
      const auto tr = sample_trajectory(p, t, rng);
      REQUIRE(tr.position.size() == m);
      const double r = norm(tr.position);
      REQUIRE(r <= p.c() * t * (1 + 1e-12));
      if (tr.switches == 0) REQUIRE(std::abs(r - p.c() * t) <= 1e-12 * p.c() * t);
    }
  }
}

TEST_CASE("a single leg when no switch can occur") {
  const auto p = validate_params(3, 2.0, 1e-12);
  auto rng = Xoshiro256pp::for_stream(5, 0);
  const auto tr = sample_trajectory(p, 1.5, rng);
  CHECK(tr.switches == 0);
  CHECK(norm(tr.position) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("uniform directions are unit vectors with mean zero") {
  auto rng = Xoshiro256pp::for_stream(3, 0);
  std::vector<double> d(5);
  std::vector<double> sum(5, 0.0);
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    uniform_direction(std::span<double>(d), rng);
    CHECK(std::abs(norm(d) - 1.0) < 1e-14);
    for (int j = 0; j < 5; ++j) sum[j] += d[j];
  }
  // each coordinate has variance 1/m
  for (double s : sum) CHECK(std::abs(s / n) < 4.0 * std::sqrt(0.2 / n));
}

TEST_CASE("RunningStats") {
  RunningStats all, left, right;
  for (int i = 0; i < 100; ++i) {
    const double v = std::sin(i) * 3 + i * 0.01;
    all.push(v);
    (i < 37 ? left : right).push(v);
  }
  left.merge(right);
  CHECK(left.count == all.count);
  CHECK(left.mean == doctest::Approx(all.mean).epsilon(1e-14));
  CHECK(left.variance() == doctest::Approx(all.variance()).epsilon(1e-12));

  RunningStats empty;
  empty.merge(all);
  CHECK(empty.mean == all.mean);
}

TEST_CASE("moment estimates agree with the closed forms") {
  SUBCASE("1-marginal") {
    const auto cfg = config(3, 1.0, 1.0, 2.0, 200000, 11);
    const auto est = estimate_moment(cfg, MultiIndex{2, 0, 0});
    CHECK(est.samples == 200000);
    CHECK(est.std_error > 0.0);
    CHECK(std::abs(est.mean - mu_1marginal(cfg.params, cfg.t)) <= 4 * est.std_error);
  }
  SUBCASE("2-marginal") {
    const auto cfg = config(3, 2.0, 1.0, 1.0, 200000, 12);
    const auto est = estimate_moment(cfg, MultiIndex{2, 2, 0});
    CHECK(std::abs(est.mean - mu_2marginal(cfg.params, cfg.t)) <= 4 * est.std_error);
  }
  SUBCASE("odd index vanishes") {
    const auto cfg = config(3, 1.0, 1.0, 1.0, 200000, 13);
    const auto est = estimate_moment(cfg, MultiIndex{1, 1, 1});
    CHECK(std::abs(est.mean) <= 4 * est.std_error);
  }
  SUBCASE("isotropy") {
    const auto cfg = config(4, 1.0, 2.0, 1.5, 100000, 14);
    const auto e1 = estimate_moment(cfg, MultiIndex{2, 0, 0, 0});
    const auto e3 = estimate_moment(cfg, MultiIndex{0, 0, 2, 0});
    CHECK(std::abs(e1.mean - e3.mean) <= 4 * std::hypot(e1.std_error, e3.std_error));
  }
}

TEST_CASE("determinism and worker invariance") {
  const auto one = estimate_moment(config(3, 2.0, 1.0, 1.0, 50000, 7, 1), MultiIndex{2, 2, 0});
  const auto again = estimate_moment(config(3, 2.0, 1.0, 1.0, 50000, 7, 1), MultiIndex{2, 2, 0});
  const auto four = estimate_moment(config(3, 2.0, 1.0, 1.0, 50000, 7, 4), MultiIndex{2, 2, 0});
  CHECK(same_bits(one.mean, again.mean));
  CHECK(same_bits(one.std_error, again.std_error));
  CHECK(same_bits(one.mean, four.mean));
  CHECK(same_bits(one.std_error, four.std_error));

  const auto other_seed = estimate_moment(config(3, 2.0, 1.0, 1.0, 50000, 8, 1), MultiIndex{2, 2, 0});
  CHECK_FALSE(same_bits(one.mean, other_seed.mean));
}

TEST_CASE("singular mass") {
  const std::uint64_t n = 200000;
  const double p = std::exp(-1.0);
  const double frac = singular_mass_estimate(config(3, 1.0, 1.0, 1.0, n, 21));
  CHECK(std::abs(frac - p) <= 4 * std::sqrt(p * (1 - p) / n));

  CHECK(singular_mass_estimate(config(3, 1.0, 20.0, 1.0, n, 22)) < 1e-4);
  CHECK(singular_mass_estimate(config(3, 1.0, 1.0, 1e-9, 10000, 23)) == 1.0);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(config(3, 1.0, 1.0, 0.0, 10, 1).validate(), Error);
  CHECK_THROWS_AS(config(3, 1.0, 1.0, 1.0, 0, 1).validate(), Error);
  CHECK_THROWS_AS(config(3, 1.0, 1.0, 1.0, 10, 1, 0).validate(), Error);
  CHECK_THROWS_AS(estimate_moment(config(3, 1.0, 1.0, 1.0, 1, 1), MultiIndex{2, 0, 0}), Error);
  try {
    estimate_moment(config(3, 1.0, 1.0, 1.0, 10, 1), MultiIndex{2, 0});
    FAIL("expected UnsupportedIndex");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedIndex);
  }
}

TEST_CASE("RF_THREADS") {
  ::unsetenv("RF_THREADS");
  CHECK(default_workers(3) == 3);
  ::setenv("RF_THREADS", "6", 1);
  CHECK(default_workers(3) == 6);
  ::setenv("RF_THREADS", "zero", 1);
  CHECK_THROWS_AS(default_workers(3), Error);
  ::setenv("RF_THREADS", "0", 1);
  CHECK_THROWS_AS(default_workers(3), Error);
  ::unsetenv("RF_THREADS");
}
