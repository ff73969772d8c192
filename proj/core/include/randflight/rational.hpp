#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rflight {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Rising factorial a(a+1)...(a+n-1); 1 for n = 0.
Rational pochhammer(const Rational& a, unsigned n);

/// coeff * c^c_power * lambda^lambda_power, with c and lambda left symbolic.
class RationalMonomial {
 public:
  RationalMonomial() = default;
  RationalMonomial(Rational coeff, unsigned c_power, unsigned lambda_power);

  const Rational& coeff() const noexcept { return coeff_; }
  unsigned c_power() const noexcept { return c_power_; }
  unsigned lambda_power() const noexcept { return lambda_power_; }

  bool is_zero() const { return sgn(coeff_) == 0; }
  bool like(const RationalMonomial& other) const noexcept {
    return c_power_ == other.c_power_ && lambda_power_ == other.lambda_power_;
  }

  /// Sum of like terms; throws InvalidArgument when the powers differ.
  RationalMonomial& operator+=(const RationalMonomial& other);
  RationalMonomial& operator*=(const RationalMonomial& other);
  RationalMonomial operator-() const;

  double evaluate(double c, double lambda) const;

  /// e.g. "-3/5*c^2*lambda^4".
  std::string to_string() const;

  friend RationalMonomial operator+(RationalMonomial a, const RationalMonomial& b) { return a += b; }
  friend RationalMonomial operator*(RationalMonomial a, const RationalMonomial& b) { return a *= b; }
  friend bool operator==(const RationalMonomial& a, const RationalMonomial& b) {
    return a.like(b) && a.coeff_ == b.coeff_;
  }

 private:
  Rational coeff_{0};
  unsigned c_power_ = 0;
  unsigned lambda_power_ = 0;
};

}  // namespace rflight
