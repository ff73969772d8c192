#pragma once

#include <vector>

#include "randflight/params.hpp"

namespace rflight {

/// Second moment E X_1(t)^2 (and of any single coordinate):
/// (2/m)(c^2/lambda^2)(e^{-lambda t} + lambda t - 1). Returns 0 at t = 0.
double mu_1marginal(const FlightParams& params, double t);

/// Mixed moment E X_1(t)^2 X_2(t)^2 (and of any coordinate pair):
///
///   8 c^4 / (m^2 (m+2) lambda^4) * { m [e^{-lt}(l^2t^2 + 3lt + 3) + l^2t^2/2 - 3]
///                                   + (l^2t^2 + 12)(1 - e^{-lt}) - 6lt(1 + e^{-lt}) }
///
/// For lambda t < 1 the braces cancel to O((lambda t)^4); that range is summed
/// as e^{-x} times its positive power series instead of evaluated term by term.
double mu_2marginal(const FlightParams& params, double t);

/// -d^2/d alpha_1^2 H(alpha, t) at alpha = 0, summed term by term from the
/// recurrence-built gamma polynomials. Independent of the closed form.
double mu_1marginal_series(const FlightParams& params, double t, const SeriesControl& ctrl = {});

/// d^4/d alpha_1^2 d alpha_2^2 H(alpha, t) at alpha = 0, summed the same way.
double mu_2marginal_series(const FlightParams& params, double t, const SeriesControl& ctrl = {});

/// Which of the supported moment shapes a multi-index has.
enum class MarginalShape {
  One,  // one entry 2, rest 0
  Two,  // two entries 2, rest 0
};

/// Throws UnsupportedIndex for any other shape or a length mismatch with m.
MarginalShape classify(const MultiIndex& index, const FlightParams& params);

struct MomentQuery {
  FlightParams params;
  MultiIndex index;
  double t = 0.0;
};

/// Closed-form value; depends only on the shape, not on which coordinates carry the 2s.
double moment(const MomentQuery& query);
/// Series-oracle value for the same query.
double moment_series(const MomentQuery& query, const SeriesControl& ctrl = {});

/// (2 rho t / m)^2: product of two coordinate variances of Brownian motion with
/// per-coordinate diffusion coefficient 2 rho / m.
double kac_limit_value(double rho, unsigned m, double t);

/// A sequence of (c, lambda) with c = sqrt(rho * lambda), so c^2/lambda = rho.
struct KacScaling {
  double rho;
  std::vector<double> lambdas;  // strictly increasing, positive

  void validate() const;
};

struct KacRow {
  double lambda;
  double c;
  double value;
  double limit;
  double abs_err;
};

std::vector<KacRow> kac_sequence(const KacScaling& scaling, unsigned m, double t);

enum class Lemma { A1, A2 };

/// (x^2 - 6) e^x + 2x^2 + 6x + 6
double lemma_a1_rhs(double x);
/// (x^2 + 12)(e^x - 1) - 6x(e^x + 1)
double lemma_a2_rhs(double x);
/// sum_{k=4}^{terms} x^k/k! (k-3)(k+2)   [A1]   or   (k-3)(k-4)   [A2]
double lemma_lhs_partial(Lemma which, double x, unsigned terms);

}  // namespace rflight
