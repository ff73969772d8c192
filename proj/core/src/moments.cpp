#include "randflight/moments.hpp"

#include <cmath>
#include <memory>

#include "randflight/charfn.hpp"
#include "randflight/error.hpp"
#include "randflight/gamma.hpp"
#include "randflight/summation.hpp"

namespace rflight {

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorKind::InvalidArgument, "t must be finite and >= 0");
}

// e^{-x} + x - 1
double exp_remainder2(double x) {
  if (x < 0.5) {
    // sum_{k>=2} (-x)^k / k!
    CompensatedSum<double> sum;
    double term = x * x / 2.0;
    for (unsigned k = 2; k < 40 && term != 0.0; ++k) {
      sum += (k % 2 == 0) ? term : -term;
      term *= x / (k + 1);
    }
    return sum.value();
  }
  return std::expm1(-x) + x;
}

// Coefficient of x^k/k! in e^{x} * braces of the 2-marginal formula:
// (m/2)(k-3)(k+2) + (k-3)(k-4), zero for k < 4.
long double braces_series_coeff(unsigned m, unsigned k) {
  if (k < 4) return 0.0L;
  const long double kk = k;
  return 0.5L * m * (kk - 3) * (kk + 2) + (kk - 3) * (kk - 4);
}

double braces_2marginal(unsigned m, double x) {
  if (x < 1.0) {
    long double sum = 0.0L;
    long double power = 1.0L;  // x^k / k!
    for (unsigned k = 1; k < 48; ++k) {
      power *= static_cast<long double>(x) / k;
      sum += power * braces_series_coeff(m, k);
    }
    return static_cast<double>(std::exp(-static_cast<long double>(x)) * sum);
  }
  const double e = std::exp(-x);
  const double x2 = x * x;
  return m * (e * (x2 + 3.0 * x + 3.0) + x2 / 2.0 - 3.0) + (x2 + 12.0) * (1.0 - e) - 6.0 * x * (1.0 + e);
}

// (-i)^{order}: -1 for the second-order pattern, +1 for the fourth-order one.
double pattern_sign(DerivativePattern pattern) { return pattern == DerivativePattern::Second ? -1.0 : 1.0; }

// (-i)^q d^q H / d alpha^q at 0 = e^{-lt} sum_k t^k/k! sum_j A_j K_j(gamma_{k+1}),
// with K_j(gamma_{k+1}) = raw * c^{2j} lambda^{k-2j}.
double moment_from_series(const FlightParams& p, double t, const SeriesControl& ctrl, DerivativePattern pattern,
                          const char* what) {
  require_time(t);
  const unsigned j_active = pattern == DerivativePattern::Second ? 1 : 2;
  const unsigned first_k = 2 * j_active;  // gamma_{k+1} has degree floor(k/2)
  const double x = p.lambda() * t;

  SeriesTruncation truncation(ctrl, first_k, x);
  std::shared_ptr<const GammaTable> table;
  CompensatedSum<double> sum;
  for (unsigned k = 0; k < truncation.limit(); ++k) {
    if (!table || table->max_n() < k + 1) table = gamma_table(p.m(), k + 1);
    double term = 0.0;
    for (unsigned j = 0; j < table->terms(k + 1); ++j) {
      const int constant = mixed_derivative_constant(j, pattern);
      if (constant == 0) continue;
      const double scale = std::pow(p.c() / p.lambda(), 2.0 * j);
      term += constant * table->raw_double(k + 1, j) * scale * poisson_weight(x, k);
    }
    term *= pattern_sign(pattern);
    sum += term;
    if (truncation.observe(k, std::abs(term))) break;
  }
  truncation.finish(what);
  return sum.value();
}

}  // namespace

double mu_1marginal(const FlightParams& p, double t) {
  require_time(t);
  const double ratio = p.c() / p.lambda();
  return 2.0 / p.m() * ratio * ratio * exp_remainder2(p.lambda() * t);
}

double mu_2marginal(const FlightParams& p, double t) {
  require_time(t);
  const double m = p.m();
  const double ratio2 = (p.c() / p.lambda()) * (p.c() / p.lambda());
  return 8.0 * ratio2 * ratio2 / (m * m * (m + 2.0)) * braces_2marginal(p.m(), p.lambda() * t);
}

double mu_1marginal_series(const FlightParams& p, double t, const SeriesControl& ctrl) {
  return moment_from_series(p, t, ctrl, DerivativePattern::Second, "mu_1marginal_series");
}

double mu_2marginal_series(const FlightParams& p, double t, const SeriesControl& ctrl) {
  return moment_from_series(p, t, ctrl, DerivativePattern::MixedFourth, "mu_2marginal_series");
}

MarginalShape classify(const MultiIndex& index, const FlightParams& params) {
  index.check_dimension(params);
  const std::size_t twos = index.count(2);
  const std::size_t zeros = index.count(0);
  if (twos + zeros == index.size()) {
    if (twos == 1) return MarginalShape::One;
    if (twos == 2) return MarginalShape::Two;
  }
  throw Error(ErrorKind::UnsupportedIndex,
              "multi-index " + index.to_string() + " is not a 1- or 2-marginal second moment");
}

double moment(const MomentQuery& q) {
  return classify(q.index, q.params) == MarginalShape::One ? mu_1marginal(q.params, q.t)
                                                           : mu_2marginal(q.params, q.t);
}

double moment_series(const MomentQuery& q, const SeriesControl& ctrl) {
  return classify(q.index, q.params) == MarginalShape::One ? mu_1marginal_series(q.params, q.t, ctrl)
                                                           : mu_2marginal_series(q.params, q.t, ctrl);
}

double kac_limit_value(double rho, unsigned m, double t) {
  if (!(rho > 0.0)) throw Error(ErrorKind::InvalidArgument, "rho must be > 0");
  if (m < 3) throw Error(ErrorKind::DimensionTooSmall, "dimension m=" + std::to_string(m) + " must be >= 3");
  require_time(t);
  const double v = 2.0 * rho * t / m;
  return v * v;
}

void KacScaling::validate() const {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw Error(ErrorKind::InvalidArgument, "rho must be > 0");
  if (lambdas.empty()) throw Error(ErrorKind::InvalidArgument, "lambda sequence is empty");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0.0)) throw Error(ErrorKind::NonPositiveIntensity, "lambda sequence must be positive");
    if (i > 0 && !(lambdas[i] > lambdas[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "lambda sequence must be strictly increasing");
    }
  }
}

std::vector<KacRow> kac_sequence(const KacScaling& scaling, unsigned m, double t) {
  scaling.validate();
  const double limit = kac_limit_value(scaling.rho, m, t);
  std::vector<KacRow> rows;
  rows.reserve(scaling.lambdas.size());
  for (double lambda : scaling.lambdas) {
    const double c = std::sqrt(scaling.rho * lambda);
    const double value = mu_2marginal(validate_params(m, c, lambda), t);
    rows.push_back({lambda, c, value, limit, std::abs(value - limit)});
  }
  return rows;
}

double lemma_a1_rhs(double x) {
  const long double lx = x;
  return static_cast<double>((lx * lx - 6) * std::exp(lx) + 2 * lx * lx + 6 * lx + 6);
}

double lemma_a2_rhs(double x) {
  const long double lx = x;
  const long double e = std::exp(lx);
  return static_cast<double>((lx * lx + 12) * std::expm1(lx) - 6 * lx * (e + 1));
}

double lemma_lhs_partial(Lemma which, double x, unsigned terms) {
  // Extended precision keeps the |x| ~ 10 partial sums within an ulp of double.
  const long double lx = x;
  long double power = 1.0L;  // x^k / k!
  CompensatedSum<long double> sum;
  for (unsigned k = 1; k <= terms; ++k) {
    power *= lx / k;
    if (k < 4) continue;
    const long double kk = k;
    sum += power * (which == Lemma::A1 ? (kk - 3) * (kk + 2) : (kk - 3) * (kk - 4));
  }
  return static_cast<double>(sum.value());
}

}  // namespace rflight
