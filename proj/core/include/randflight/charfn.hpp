#pragma once

#include <vector>

#include "randflight/params.hpp"

namespace rflight {

/// Derivative operators applied to ||alpha||^{2k} at alpha = 0.
enum class DerivativePattern {
  Second,       // d^2 / d alpha_1^2
  MixedFourth,  // d^4 / d alpha_1^2 d alpha_2^2
};

/// Value of the derivative pattern applied to (alpha_1^2 + ... + alpha_m^2)^k at 0:
/// 2 for (Second, k=1), 8 for (MixedFourth, k=2), 0 otherwise.
int mixed_derivative_constant(unsigned k, DerivativePattern pattern) noexcept;

struct CharFnQuery {
  FlightParams params;
  std::vector<double> alpha;
  double t = 0.0;
  SeriesControl ctrl = SeriesControl::adaptive(1e-17);
  /// Largest tolerated estimate of accumulated rounding error; beyond it the
  /// evaluation throws PrecisionLoss instead of returning a cancelled sum.
  double precision_budget = 1e-10;
};

/// Characteristic function H(alpha, t) = e^{-lambda t} sum_n gamma_{n+1}(||alpha||) t^n / n!.
///
/// Throws InvalidArgument (alpha length != m, t < 0), TruncationNotConverged,
/// or PrecisionLoss when cancellation between terms would exceed the budget.
double char_fn(const CharFnQuery& query);

}  // namespace rflight
