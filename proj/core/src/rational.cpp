#include "randflight/rational.hpp"

#include <cmath>
#include <utility>

#include "randflight/error.hpp"

namespace rflight {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::NonPositiveSpeed: return "NonPositiveSpeed";
    case ErrorKind::NonPositiveIntensity: return "NonPositiveIntensity";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IndexTooSmall: return "IndexTooSmall";
    case ErrorKind::UnsupportedIndex: return "UnsupportedIndex";
    case ErrorKind::TruncationNotConverged: return "TruncationNotConverged";
    case ErrorKind::PrecisionLoss: return "PrecisionLoss";
  }
  return "Unknown";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pochhammer(const Rational& a, unsigned n) {
  Rational acc{1};
  for (unsigned i = 0; i < n; ++i) acc *= a + i;
  return acc;
}

RationalMonomial::RationalMonomial(Rational coeff, unsigned c_power, unsigned lambda_power)
    : coeff_(std::move(coeff)), c_power_(c_power), lambda_power_(lambda_power) {
  coeff_.canonicalize();
}

RationalMonomial& RationalMonomial::operator+=(const RationalMonomial& other) {
  if (!like(other)) {
    throw Error(ErrorKind::InvalidArgument,
                "cannot add unlike monomials " + to_string() + " and " + other.to_string());
  }
  coeff_ += other.coeff_;
  return *this;
}

RationalMonomial& RationalMonomial::operator*=(const RationalMonomial& other) {
  coeff_ *= other.coeff_;
  c_power_ += other.c_power_;
  lambda_power_ += other.lambda_power_;
  return *this;
}

RationalMonomial RationalMonomial::operator-() const {
  return RationalMonomial(-coeff_, c_power_, lambda_power_);
}

double RationalMonomial::evaluate(double c, double lambda) const {
  return coeff_.get_d() * std::pow(c, c_power_) * std::pow(lambda, lambda_power_);
}

std::string RationalMonomial::to_string() const {
  std::string s = coeff_.get_str();
  if (c_power_ > 0) s += "*c^" + std::to_string(c_power_);
  if (lambda_power_ > 0) s += "*lambda^" + std::to_string(lambda_power_);
  return s;
}

}  // namespace rflight
