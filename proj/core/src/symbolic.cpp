#include "randflight/symbolic.hpp"

#include "randflight/error.hpp"

namespace rflight::symbolic {

PolynomialM::PolynomialM(const Rational& constant) : coeffs_{constant} { trim(); }

PolynomialM PolynomialM::from_coeffs(std::vector<Rational> coeffs) {
  PolynomialM p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

PolynomialM PolynomialM::m() { return from_coeffs({Rational(0), Rational(1)}); }

void PolynomialM::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational PolynomialM::evaluate(const Rational& m) const {
  Rational acc{0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + *it;
  return acc;
}

PolynomialM& PolynomialM::operator+=(const PolynomialM& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

PolynomialM& PolynomialM::operator*=(const PolynomialM& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

PolynomialM PolynomialM::operator-() const {
  PolynomialM p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::string PolynomialM::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[i].get_str() + ")";
    if (i >= 1) s += "*m";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

std::pair<PolynomialM, PolynomialM> divide(const PolynomialM& a, const PolynomialM& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const auto& d = b.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {PolynomialM(), a};
  std::vector<Rational> quot(rem.size() - d.size() + 1, Rational(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (sgn(rem[i]) == 0) continue;
    Rational f = rem[i] / d.back();
    f.canonicalize();
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * d[j];
  }
  return {PolynomialM::from_coeffs(std::move(quot)), PolynomialM::from_coeffs(std::move(rem))};
}

PolynomialM gcd(PolynomialM a, PolynomialM b) {
  while (!b.is_zero()) {
    PolynomialM r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational lead = a.coeffs().back();
  return divide(a, PolynomialM(lead)).first;
}

RationalFunctionM::RationalFunctionM(PolynomialM num, PolynomialM den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational function with zero denominator");
  reduce();
}

void RationalFunctionM::reduce() {
  if (num_.is_zero()) {
    den_ = PolynomialM(1);
    return;
  }
  const PolynomialM g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divide(num_, g).first;
    den_ = divide(den_, g).first;
  }
  const PolynomialM lead(den_.coeffs().back());
  if (lead != PolynomialM(1)) {
    num_ = divide(num_, lead).first;
    den_ = divide(den_, lead).first;
  }
}

Rational RationalFunctionM::evaluate(const Rational& m) const {
  const Rational d = den_.evaluate(m);
  if (sgn(d) == 0) throw Error(ErrorKind::InvalidArgument, "denominator vanishes at m=" + m.get_str());
  Rational q = num_.evaluate(m) / d;
  q.canonicalize();
  return q;
}

RationalFunctionM& RationalFunctionM::operator+=(const RationalFunctionM& other) {
  if (other.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  reduce();
  return *this;
}

RationalFunctionM& RationalFunctionM::operator*=(const RationalFunctionM& other) {
  num_ *= other.num_;
  if (num_.is_zero()) {
    den_ = PolynomialM(1);
  } else {
    den_ *= other.den_;
  }
  reduce();
  return *this;
}

RationalFunctionM& RationalFunctionM::operator/=(const RationalFunctionM& other) {
  if (other.num_.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero rational function");
  num_ *= other.den_;
  den_ *= other.num_;
  reduce();
  return *this;
}

RationalFunctionM RationalFunctionM::operator-() const { return RationalFunctionM(-num_, den_); }

std::string RationalFunctionM::to_string() const {
  return "[" + num_.to_string() + "] / [" + den_.to_string() + "]";
}

RationalFunctionM theta_ratio(unsigned k) {
  // (1/2)_k / (m/2)_k = prod_{j<k} (2j+1) / (m + 2j)
  PolynomialM num(1);
  PolynomialM den(1);
  for (unsigned j = 0; j < k; ++j) {
    num *= PolynomialM(Rational(2 * j + 1));
    den *= PolynomialM::m() + PolynomialM(Rational(2 * j));
  }
  return RationalFunctionM(num, den);
}

GammaCoefficients<RationalFunctionM> gamma_coefficients(unsigned max_n) {
  return gamma_coefficients_split<RationalFunctionM>(max_n, [](unsigned k) { return theta_ratio(k); });
}

}  // namespace rflight::symbolic
