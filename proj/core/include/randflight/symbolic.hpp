#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "randflight/gamma_recurrence.hpp"
#include "randflight/rational.hpp"

namespace rflight::symbolic {

/// Polynomial in the dimension m with exact rational coefficients,
/// coefficients stored lowest degree first, trailing zeros trimmed.
class PolynomialM {
 public:
  PolynomialM() = default;
  PolynomialM(const Rational& constant);  // NOLINT: implicit lift of constants
  PolynomialM(int constant) : PolynomialM(Rational(constant)) {}  // NOLINT
  static PolynomialM from_coeffs(std::vector<Rational> coeffs);
  /// The polynomial "m".
  static PolynomialM m();

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  Rational evaluate(const Rational& m) const;

  PolynomialM& operator+=(const PolynomialM& other);
  PolynomialM& operator*=(const PolynomialM& other);
  PolynomialM operator-() const;

  friend PolynomialM operator+(PolynomialM a, const PolynomialM& b) { return a += b; }
  friend PolynomialM operator-(PolynomialM a, const PolynomialM& b) { return a += -b; }
  friend PolynomialM operator*(PolynomialM a, const PolynomialM& b) { return a *= b; }
  friend bool operator==(const PolynomialM& a, const PolynomialM& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a / b; b must be non-zero.
std::pair<PolynomialM, PolynomialM> divide(const PolynomialM& a, const PolynomialM& b);

/// Monic greatest common divisor (0 only when both arguments are 0).
PolynomialM gcd(PolynomialM a, PolynomialM b);

/// Ratio of two PolynomialM values, kept in lowest terms with a monic denominator.
class RationalFunctionM {
 public:
  RationalFunctionM() : RationalFunctionM(PolynomialM(0)) {}
  RationalFunctionM(int constant) : RationalFunctionM(PolynomialM(constant)) {}  // NOLINT
  RationalFunctionM(PolynomialM num, PolynomialM den = PolynomialM(1));  // NOLINT

  const PolynomialM& numerator() const noexcept { return num_; }
  const PolynomialM& denominator() const noexcept { return den_; }

  Rational evaluate(const Rational& m) const;

  RationalFunctionM& operator+=(const RationalFunctionM& other);
  RationalFunctionM& operator*=(const RationalFunctionM& other);
  RationalFunctionM& operator/=(const RationalFunctionM& other);
  RationalFunctionM operator-() const;

  friend RationalFunctionM operator+(RationalFunctionM a, const RationalFunctionM& b) { return a += b; }
  friend RationalFunctionM operator-(RationalFunctionM a, const RationalFunctionM& b) { return a += -b; }
  friend RationalFunctionM operator*(RationalFunctionM a, const RationalFunctionM& b) { return a *= b; }
  friend RationalFunctionM operator/(RationalFunctionM a, const RationalFunctionM& b) { return a /= b; }
  friend bool operator==(const RationalFunctionM& a, const RationalFunctionM& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const;

 private:
  void reduce();

  PolynomialM num_;
  PolynomialM den_;
};

/// (1/2)_k / (m/2)_k as a rational function of m.
RationalFunctionM theta_ratio(unsigned k);

/// gamma_0..gamma_max_n with the dimension kept symbolic.
GammaCoefficients<RationalFunctionM> gamma_coefficients(unsigned max_n);

}  // namespace rflight::symbolic
