#include <doctest.h>

#include <chrono>
#include <cmath>
#include <variant>

#include "randflight/error.hpp"
#include "randflight/gamma.hpp"

using namespace rflight;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

// Test-only oracle: gamma from the generating function
//   Gamma(s) = Theta(s) / (1 - lambda Theta(s)) = sum_{j>=0} lambda^j Theta(s)^{j+1},
// expanded as truncated power series in s. Shares no code with the recurrence.
GammaCoefficients<Rational> gamma_by_series_inversion(unsigned m, unsigned max_n) {
  using Series = std::vector<std::vector<Rational>>;  // [s-degree][k]
  const unsigned width = max_n / 2 + 1;
  Series theta(max_n + 1, std::vector<Rational>(width, Rational(0)));
  for (unsigned n = 1; n <= max_n; n += 2) {
    const unsigned k = (n - 1) / 2;
    Rational v = pochhammer(q(1, 2), k) / pochhammer(q(m, 2), k);
    theta[n][k] = (k % 2 == 0) ? v : Rational(-v);
  }
  auto multiply = [&](const Series& a, const Series& b) {
    Series out(max_n + 1, std::vector<Rational>(width, Rational(0)));
    for (unsigned n1 = 0; n1 <= max_n; ++n1)
      for (unsigned k1 = 0; k1 < width; ++k1) {
        if (sgn(a[n1][k1]) == 0) continue;
        for (unsigned n2 = 0; n1 + n2 <= max_n; ++n2)
          for (unsigned k2 = 0; k1 + k2 < width; ++k2)
            if (sgn(b[n2][k2]) != 0) out[n1 + n2][k1 + k2] += a[n1][k1] * b[n2][k2];
      }
    return out;
  };
  Series total = theta;
  Series power = theta;
  for (unsigned j = 1; j < max_n; ++j) {
    power = multiply(power, theta);
    for (unsigned n = 0; n <= max_n; ++n)
      for (unsigned k = 0; k < width; ++k) total[n][k] += power[n][k];
  }
  GammaCoefficients<Rational> out(max_n + 1);
  for (unsigned n = 1; n <= max_n; ++n) {
    out[n].assign(total[n].begin(), total[n].begin() + (n - 1) / 2 + 1);
  }
  return out;
}

}  // namespace

TEST_CASE("theta") {
  const auto p3 = validate_params(3, 1.0, 1.0);
  auto t1 = theta(1, p3);
  REQUIRE(std::holds_alternative<ThetaCoefficient>(t1));
  CHECK(std::get<ThetaCoefficient>(t1).value == RationalMonomial(q(1), 0, 0));

  CHECK(std::holds_alternative<ThetaZero>(theta(2, p3)));
  CHECK(std::holds_alternative<ThetaZero>(theta(10, p3)));

  auto t3 = std::get<ThetaCoefficient>(theta(3, p3));
  CHECK(t3.k == 1);
  CHECK(t3.value == RationalMonomial(q(-1, 3), 2, 0));

  // theta_5 = (1/2)_2/(m/2)_2 c^4 = 3/(m(m+2)) c^4
  for (long m = 3; m <= 10; ++m) {
    auto t5 = std::get<ThetaCoefficient>(theta(5, validate_params(m, 1.0, 1.0)));
    CHECK(t5.value == RationalMonomial(q(3, m * (m + 2)), 4, 0));
  }
  CHECK_THROWS_AS(theta(0, p3), Error);
}

TEST_CASE("gamma table entries n <= 8 for numeric m") {
  for (long m = 3; m <= 10; ++m) {
    CAPTURE(m);
    const auto p = validate_params(m, 1.0, 1.0);
    const long m2 = m * m;
    CHECK(gamma(0, p).is_zero());
    CHECK(gamma(1, p) == GammaPolynomial(1, {{0, RationalMonomial(q(1), 0, 0)}}));
    CHECK(gamma(2, p) == GammaPolynomial(2, {{0, RationalMonomial(q(1), 0, 1)}}));
    CHECK(gamma(3, p) == GammaPolynomial(3, {{0, RationalMonomial(q(1), 0, 2)}, {1, RationalMonomial(q(-1, m), 2, 0)}}));
    CHECK(gamma(4, p) == GammaPolynomial(4, {{0, RationalMonomial(q(1), 0, 3)}, {1, RationalMonomial(q(-2, m), 2, 1)}}));
    CHECK(gamma(5, p) == GammaPolynomial(5, {{0, RationalMonomial(q(1), 0, 4)},
                                             {1, RationalMonomial(q(-3, m), 2, 2)},
                                             {2, RationalMonomial(q(3, m * (m + 2)), 4, 0)}}));
    CHECK(gamma(6, p) == GammaPolynomial(6, {{0, RationalMonomial(q(1), 0, 5)},
                                             {1, RationalMonomial(q(-4, m), 2, 3)},
                                             {2, RationalMonomial(q(7 * m + 2, m2 * (m + 2)), 4, 1)}}));
    CHECK(gamma(7, p) == GammaPolynomial(7, {{0, RationalMonomial(q(1), 0, 6)},
                                             {1, RationalMonomial(q(-5, m), 2, 4)},
                                             {2, RationalMonomial(q(12 * m + 6, m2 * (m + 2)), 4, 2)},
                                             {3, RationalMonomial(q(-15, m * (m + 2) * (m + 4)), 6, 0)}}));
    CHECK(gamma(8, p) == GammaPolynomial(8, {{0, RationalMonomial(q(1), 0, 7)},
                                             {1, RationalMonomial(q(-6, m), 2, 5)},
                                             {2, RationalMonomial(q(18 * m + 12, m2 * (m + 2)), 4, 3)},
                                             {3, RationalMonomial(q(-(36 * m + 24), m2 * (m + 2) * (m + 4)), 6, 1)}}));
  }
}

TEST_CASE("gamma structural invariants") {
  for (unsigned m : {3u, 4u, 7u}) {
    const auto table = gamma_table(m, 120);
    for (unsigned n = 1; n <= 120; ++n) {
      const auto poly = table->polynomial(n);
      REQUIRE(poly.degree().has_value());
      CHECK(*poly.degree() == (n - 1) / 2);
      CHECK(poly.coeff(0) == RationalMonomial(q(1), 0, n - 1));
      for (const auto& [k, mono] : poly.coeffs()) {
        CHECK(mono.c_power() == 2 * k);
        CHECK(mono.lambda_power() == n - 1 - 2 * k);
      }
    }
  }
}

TEST_CASE("split and unified recurrences agree exactly up to n = 60") {
  for (unsigned m : {3u, 5u, 8u}) {
    auto ratio = [m](unsigned k) { return theta_ratio(m, k); };
    const auto split = gamma_coefficients_split<Rational>(60, ratio);
    const auto unified = gamma_coefficients_unified<Rational>(60, ratio);
    CHECK(split == unified);
  }
}

TEST_CASE("recurrence agrees with generating-function inversion") {
  for (unsigned m : {3u, 6u}) {
    const auto oracle = gamma_by_series_inversion(m, 25);
    const auto table = gamma_table(m, 25);
    for (unsigned n = 1; n <= 25; ++n) {
      CAPTURE(n);
      CHECK(table->coefficients()[n] == oracle[n]);
    }
  }
}

TEST_CASE("closed-form coefficient examples") {
  for (unsigned m = 3; m <= 10; ++m) {
    CHECK(coeff_a2_closed(3, m) == RationalMonomial(q(-1, m), 2, 0));
    CHECK(coeff_a2_closed(8, m) == RationalMonomial(q(-6, m), 2, 5));
    CHECK(coeff_a4_closed(5, m) == RationalMonomial(q(3, m * (m + 2)), 4, 0));
    CHECK(coeff_a4_closed(6, m) == RationalMonomial(q(7 * m + 2, m * m * (m + 2)), 4, 1));
    CHECK(coeff_a4_closed(7, m) == RationalMonomial(q(12 * m + 6, m * m * (m + 2)), 4, 2));
  }
  CHECK(coeff_a2_closed(4, validate_params(3, 1.0, 1.0)) == RationalMonomial(q(-2, 3), 2, 1));

  CHECK_THROWS_AS(coeff_a2_closed(2, 3u), Error);
  CHECK_THROWS_AS(coeff_a4_closed(4, 3u), Error);
  try {
    coeff_a4_closed(4, 3u);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexTooSmall);
  }
}

TEST_CASE("verify_closed_forms") {
  SUBCASE("n <= 8 against the table") {
    const auto r = verify_closed_forms(8, {3});
    CHECK(r.passed());
    CHECK(r.rows.size() == 6 + 4);
  }
  SUBCASE("max_n = 4 checks only the |alpha|^2 coefficient") {
    const auto r = verify_closed_forms(4, {3});
    CHECK(r.passed());
    REQUIRE(r.rows.size() == 2);
    for (const auto& row : r.rows) CHECK(row.k == 1);
  }
  SUBCASE("n <= 200, m = 3..10") {
    const auto start = std::chrono::steady_clock::now();
    const auto r = verify_closed_forms(200, {3, 4, 5, 6, 7, 8, 9, 10});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(r.passed());
    CHECK(r.rows.size() == 8 * (198 + 196));
    CHECK(secs < 30.0);
  }
  SUBCASE("argument errors") {
    CHECK_THROWS_AS(verify_closed_forms(2, {3}), Error);
    CHECK_THROWS_AS(verify_closed_forms(10, {2}), Error);
  }
}

TEST_CASE("higher coefficients are exposed without a closed form") {
  // K_{|alpha|^6}(gamma_7) = -15/(m(m+2)(m+4)) c^6, read straight from the recurrence.
  const auto poly = gamma(7, validate_params(5, 1.0, 1.0));
  CHECK(poly.coeff(3) == RationalMonomial(q(-15, 5 * 7 * 9), 6, 0));
  CHECK(poly.coeff(4).is_zero());
}

TEST_CASE("numeric evaluation of gamma") {
  const auto p = validate_params(3, 2.0, 0.5);
  const auto g5 = gamma(5, p);
  const double a = 0.7;
  const double ca2 = (2.0 * a) * (2.0 * a);
  const double expected = std::pow(0.5, 4) - 0.25 * ca2 + 3.0 / 15.0 * ca2 * ca2;
  CHECK(g5.evaluate(p.c(), p.lambda(), a) == doctest::Approx(expected).epsilon(1e-14));
}
