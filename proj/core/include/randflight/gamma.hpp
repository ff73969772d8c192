#pragma once

#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "randflight/gamma_recurrence.hpp"
#include "randflight/params.hpp"
#include "randflight/rational.hpp"

namespace rflight {

/// Odd-index source coefficient theta_{2k+1} = (-1)^k (1/2)_k/(m/2)_k c^{2k},
/// multiplying ||alpha||^{2k}.
struct ThetaCoefficient {
  unsigned n;
  unsigned k;
  RationalMonomial value;
};

/// Marker for the identically-zero theta_n at even n.
struct ThetaZero {
  unsigned n;
};

using ThetaTerm = std::variant<ThetaZero, ThetaCoefficient>;

/// Throws InvalidArgument for n == 0.
ThetaTerm theta(unsigned n, const FlightParams& params);

/// gamma_n as a polynomial in ||alpha||^2. Coefficient k carries
/// c^{2k} lambda^{n-1-2k}; gamma_0 is the zero polynomial.
class GammaPolynomial {
 public:
  GammaPolynomial(unsigned n, std::map<unsigned, RationalMonomial> coeffs)
      : n_(n), coeffs_(std::move(coeffs)) {}

  unsigned n() const noexcept { return n_; }
  const std::map<unsigned, RationalMonomial>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Highest k with a non-zero coefficient; nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  /// K_{||alpha||^{2k}}(gamma_n); a zero monomial with the matching powers if absent.
  RationalMonomial coeff(unsigned k) const;

  double evaluate(double c, double lambda, double alpha_norm) const;

  friend bool operator==(const GammaPolynomial&, const GammaPolynomial&) = default;

 private:
  unsigned n_;
  std::map<unsigned, RationalMonomial> coeffs_;
};

/// Exact gamma_0..gamma_{max_n} for one dimension, built bottom-up once.
/// Immutable after construction.
class GammaTable {
 public:
  GammaTable(unsigned m, unsigned max_n);

  unsigned m() const noexcept { return m_; }
  unsigned max_n() const noexcept { return static_cast<unsigned>(coeffs_.size()) - 1; }

  /// Pure-number coefficient of ||alpha||^{2k} in gamma_n (0 outside the degree range).
  const Rational& raw(unsigned n, unsigned k) const;
  /// raw(n, k) converted to floating point once at construction.
  double raw_double(unsigned n, unsigned k) const;
  long double raw_extended(unsigned n, unsigned k) const;
  unsigned terms(unsigned n) const { return static_cast<unsigned>(coeffs_.at(n).size()); }

  GammaPolynomial polynomial(unsigned n) const;
  const GammaCoefficients<Rational>& coefficients() const noexcept { return coeffs_; }

 private:
  unsigned m_;
  GammaCoefficients<Rational> coeffs_;
  std::vector<std::vector<long double>> extended_;
};

/// Shared, memoised table for dimension m covering at least max_n. Safe to
/// call concurrently; returned tables are never mutated.
std::shared_ptr<const GammaTable> gamma_table(unsigned m, unsigned max_n);

/// (1/2)_k / (m/2)_k exactly.
Rational theta_ratio(unsigned m, unsigned k);

GammaPolynomial gamma(unsigned n, const FlightParams& params);

/// -((n-2)/m) c^2 lambda^{n-3}; IndexTooSmall for n < 3.
RationalMonomial coeff_a2_closed(unsigned n, const FlightParams& params);
RationalMonomial coeff_a2_closed(unsigned n, unsigned m);

/// c^4 lambda^{n-5} (n-4) / (m^2 (m+2)) * [((n+1)/2) m + (n-5)]; IndexTooSmall for n < 5.
RationalMonomial coeff_a4_closed(unsigned n, const FlightParams& params);
RationalMonomial coeff_a4_closed(unsigned n, unsigned m);

struct VerificationRow {
  unsigned m;
  unsigned n;
  unsigned k;  // 1 or 2
  RationalMonomial recurrence;
  RationalMonomial closed_form;
  bool match;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  std::optional<VerificationRow> first_mismatch;

  bool passed() const noexcept { return !first_mismatch.has_value(); }
};

/// Compares recurrence-extracted K_{||alpha||^2}(gamma_n) (3 <= n <= max_n) and
/// K_{||alpha||^4}(gamma_n) (5 <= n <= max_n) with the closed forms, exactly,
/// for each dimension. Dimensions are processed concurrently; row order follows
/// `dims`. Throws InvalidArgument for max_n < 3 and DimensionTooSmall for m < 3.
VerificationReport verify_closed_forms(unsigned max_n, const std::vector<unsigned>& dims);

}  // namespace rflight
