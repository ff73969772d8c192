#include "randflight/gamma.hpp"

#include <cmath>
#include <future>
#include <mutex>
#include <unordered_map>

#include "randflight/error.hpp"

namespace rflight {

namespace {

void require_dimension(unsigned m) {
  if (m < 3) throw Error(ErrorKind::DimensionTooSmall, "dimension m=" + std::to_string(m) + " must be >= 3");
}

const Rational kZero{0};

}  // namespace

Rational theta_ratio(unsigned m, unsigned k) {
  return pochhammer(make_rational(1, 2), k) / pochhammer(make_rational(m, 2), k);
}

ThetaTerm theta(unsigned n, const FlightParams& params) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "theta_n is defined for n >= 1");
  if (n % 2 == 0) return ThetaZero{n};
  const unsigned k = (n - 1) / 2;
  Rational value = theta_ratio(params.m(), k);
  if (k % 2 == 1) value = -value;
  return ThetaCoefficient{n, k, RationalMonomial(value, 2 * k, 0)};
}

std::optional<unsigned> GammaPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

RationalMonomial GammaPolynomial::coeff(unsigned k) const {
  if (auto it = coeffs_.find(k); it != coeffs_.end()) return it->second;
  const unsigned lambda_power = n_ >= 1 + 2 * k ? n_ - 1 - 2 * k : 0;
  return RationalMonomial(Rational(0), 2 * k, lambda_power);
}

double GammaPolynomial::evaluate(double c, double lambda, double alpha_norm) const {
  double sum = 0.0;
  for (const auto& [k, mono] : coeffs_) sum += mono.evaluate(c, lambda) * std::pow(alpha_norm, 2.0 * k);
  return sum;
}

GammaTable::GammaTable(unsigned m, unsigned max_n) : m_(m) {
  require_dimension(m);
  coeffs_ = gamma_coefficients_split<Rational>(max_n, [m](unsigned i) { return theta_ratio(m, i); });
  extended_.reserve(coeffs_.size());
  for (const auto& row : coeffs_) {
    std::vector<long double> d;
    d.reserve(row.size());
    for (const auto& q : row) {
      // hi + lo carries ~106 bits, enough to round correctly into long double.
      const double hi = q.get_d();
      const Rational rest = q - Rational(hi);
      d.push_back(static_cast<long double>(hi) + static_cast<long double>(rest.get_d()));
    }
    extended_.push_back(std::move(d));
  }
}

const Rational& GammaTable::raw(unsigned n, unsigned k) const {
  const auto& row = coeffs_.at(n);
  return k < row.size() ? row[k] : kZero;
}

double GammaTable::raw_double(unsigned n, unsigned k) const {
  return static_cast<double>(raw_extended(n, k));
}

long double GammaTable::raw_extended(unsigned n, unsigned k) const {
  const auto& row = extended_.at(n);
  return k < row.size() ? row[k] : 0.0L;
}

GammaPolynomial GammaTable::polynomial(unsigned n) const {
  std::map<unsigned, RationalMonomial> out;
  const auto& row = coeffs_.at(n);
  for (unsigned k = 0; k < row.size(); ++k) {
    if (sgn(row[k]) != 0) out.emplace(k, RationalMonomial(row[k], 2 * k, n - 1 - 2 * k));
  }
  return GammaPolynomial(n, std::move(out));
}

std::shared_ptr<const GammaTable> gamma_table(unsigned m, unsigned max_n) {
  static std::mutex mutex;
  static std::unordered_map<unsigned, std::shared_ptr<const GammaTable>> cache;
  require_dimension(m);
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot || slot->max_n() < max_n) {
    // Grow geometrically so repeated small extensions stay cheap.
    const unsigned target = slot ? std::max(max_n, 2 * slot->max_n()) : std::max(max_n, 64u);
    slot = std::make_shared<const GammaTable>(m, target);
  }
  return slot;
}

GammaPolynomial gamma(unsigned n, const FlightParams& params) {
  return gamma_table(params.m(), n)->polynomial(n);
}

RationalMonomial coeff_a2_closed(unsigned n, unsigned m) {
  if (n < 3) throw Error(ErrorKind::IndexTooSmall, "K_{|a|^2} closed form needs n >= 3, got " + std::to_string(n));
  require_dimension(m);
  return RationalMonomial(make_rational(-static_cast<long>(n - 2), m), 2, n - 3);
}

RationalMonomial coeff_a2_closed(unsigned n, const FlightParams& params) {
  return coeff_a2_closed(n, params.m());
}

RationalMonomial coeff_a4_closed(unsigned n, unsigned m) {
  if (n < 5) throw Error(ErrorKind::IndexTooSmall, "K_{|a|^4} closed form needs n >= 5, got " + std::to_string(n));
  require_dimension(m);
  const Rational mm(m);
  const Rational bracket = make_rational(n + 1, 2) * mm + Rational(static_cast<long>(n) - 5);
  Rational value = Rational(n - 4) / (mm * mm * (mm + 2)) * bracket;
  value.canonicalize();
  return RationalMonomial(value, 4, n - 5);
}

RationalMonomial coeff_a4_closed(unsigned n, const FlightParams& params) {
  return coeff_a4_closed(n, params.m());
}

namespace {

std::vector<VerificationRow> verify_dimension(unsigned m, unsigned max_n) {
  const GammaTable table(m, max_n);
  std::vector<VerificationRow> rows;
  for (unsigned n = 3; n <= max_n; ++n) {
    const auto poly = table.polynomial(n);
    for (unsigned k : {1u, 2u}) {
      if (k == 2 && n < 5) continue;
      auto closed = k == 1 ? coeff_a2_closed(n, m) : coeff_a4_closed(n, m);
      auto rec = poly.coeff(k);
      const bool match = rec == closed;
      rows.push_back({m, n, k, std::move(rec), std::move(closed), match});
    }
  }
  return rows;
}

}  // namespace

VerificationReport verify_closed_forms(unsigned max_n, const std::vector<unsigned>& dims) {
  if (max_n < 3) throw Error(ErrorKind::InvalidArgument, "max_n must be >= 3, got " + std::to_string(max_n));
  for (unsigned m : dims) require_dimension(m);

  std::vector<std::future<std::vector<VerificationRow>>> tasks;
  tasks.reserve(dims.size());
  for (unsigned m : dims) tasks.push_back(std::async(std::launch::async, verify_dimension, m, max_n));

  VerificationReport report;
  for (auto& task : tasks) {
    for (auto& row : task.get()) {
      if (!row.match && !report.first_mismatch) report.first_mismatch = row;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace rflight
