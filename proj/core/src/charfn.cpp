#include "randflight/charfn.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "randflight/error.hpp"
#include "randflight/gamma.hpp"
#include "randflight/summation.hpp"

namespace rflight {

int mixed_derivative_constant(unsigned k, DerivativePattern pattern) noexcept {
  switch (pattern) {
    case DerivativePattern::Second: return k == 1 ? 2 : 0;
    case DerivativePattern::MixedFourth: return k == 2 ? 8 : 0;
  }
  return 0;
}

double char_fn(const CharFnQuery& query) {
  const auto& p = query.params;
  if (query.alpha.size() != p.m()) {
    throw Error(ErrorKind::InvalidArgument, "alpha has length " + std::to_string(query.alpha.size()) +
                                                ", expected m=" + std::to_string(p.m()));
  }
  if (!(query.t >= 0.0) || !std::isfinite(query.t)) {
    throw Error(ErrorKind::InvalidArgument, "t must be finite and >= 0");
  }
  query.ctrl.validate();
  if (query.t == 0.0) return 1.0;

  long double norm2 = 0.0L;
  for (double a : query.alpha) norm2 += static_cast<long double>(a) * a;
  const long double norm = std::sqrt(norm2);

  // Work in extended precision; cancellation grows like e^{c ||alpha|| t}.
  const long double x = static_cast<long double>(p.lambda()) * query.t;
  const long double y = static_cast<long double>(p.c()) * norm * query.t;
  const long double log_x = std::log(x);
  const long double log_y = y > 0.0L ? std::log(y) : 0.0L;

  SeriesTruncation truncation(query.ctrl, 0, static_cast<double>(x + y));
  std::shared_ptr<const GammaTable> table;
  CompensatedSum<long double> sum;
  long double rounding = 0.0L;  // running bound on accumulated rounding error
  constexpr long double eps = std::numeric_limits<long double>::epsilon();

  for (unsigned n = 0; n < truncation.limit(); ++n) {
    if (!table || table->max_n() < n + 1) table = gamma_table(p.m(), n + 1);
    // t^n/n! e^{-lambda t} sum_k K_k lambda^{n-2k} (c ||alpha||)^{2k}
    const unsigned terms = y > 0.0L ? table->terms(n + 1) : 1;
    const long double log_fact = std::lgamma(static_cast<long double>(n) + 1.0L);
    long double term = 0.0L;
    long double term_abs = 0.0L;
    for (unsigned k = 0; k < terms; ++k) {
      const long double coeff = table->raw_extended(n + 1, k);
      if (coeff == 0.0L) continue;
      const long double exponent = std::log(std::abs(coeff)) + 2.0L * k * log_y +
                                   (static_cast<long double>(n) - 2.0L * k) * log_x - log_fact - x;
      const long double magnitude = std::exp(exponent);
      term += coeff > 0.0L ? magnitude : -magnitude;
      term_abs += magnitude;
      rounding += magnitude * eps * (std::abs(exponent) + terms + 4.0L);
    }
    sum += term;
    if (truncation.observe(n, static_cast<double>(term_abs))) break;
  }
  truncation.finish("char_fn");

  if (rounding > query.precision_budget) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "char_fn: estimated rounding error " << static_cast<double>(rounding) << " exceeds budget "
        << query.precision_budget << " (c*|alpha|*t = " << static_cast<double>(y) << " is too large)";
    throw Error(ErrorKind::PrecisionLoss, msg.str());
  }
  return static_cast<double>(sum.value());
}

}  // namespace rflight
