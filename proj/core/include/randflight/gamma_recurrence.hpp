#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace rflight {

/// Coefficient arrays of the gamma_n polynomials, indexed [n][k].
///
/// Entry [n][k] is the pure-number part of the coefficient of ||alpha||^{2k}
/// in gamma_n; the full coefficient is entry * c^{2k} * lambda^{n-1-2k}. Since
/// the powers of c and lambda are fixed by (n, k), the recurrence can run over
/// any field of numbers: exact rationals for a fixed dimension, or rational
/// functions of m for a symbolic dimension.
template <class Coeff>
using GammaCoefficients = std::vector<std::vector<Coeff>>;

namespace detail {

// (-1)^i (1/2)_i / (m/2)_i
template <class Coeff, class ThetaRatio>
std::vector<Coeff> signed_theta(unsigned count, ThetaRatio& ratio) {
  std::vector<Coeff> out;
  out.reserve(count);
  for (unsigned i = 0; i < count; ++i) {
    Coeff r = ratio(i);
    if (i % 2 == 1) r = -r;
    out.push_back(std::move(r));
  }
  return out;
}

template <class Coeff>
void accumulate_product(std::vector<Coeff>& target, const std::vector<Coeff>& gamma,
                        const Coeff& theta, unsigned shift) {
  for (std::size_t j = 0; j < gamma.size(); ++j) target[j + shift] += gamma[j] * theta;
}

}  // namespace detail

/// gamma_1..gamma_max_n from the split even/odd recurrences
///   gamma_{2p}   = lambda * sum_{i<p} gamma_{2p-2i-1} theta_{2i+1}
///   gamma_{2p+1} = theta_{2p+1} + lambda * sum_{i<p} gamma_{2p-2i} theta_{2i+1}
/// `ratio(i)` must return (1/2)_i / (m/2)_i in the coefficient field.
template <class Coeff, class ThetaRatio>
GammaCoefficients<Coeff> gamma_coefficients_split(unsigned max_n, ThetaRatio&& ratio) {
  GammaCoefficients<Coeff> gamma(max_n + 1);
  if (max_n == 0) return gamma;
  const auto theta = detail::signed_theta<Coeff>(max_n / 2 + 1, ratio);
  gamma[1] = {Coeff(1)};
  for (unsigned n = 2; n <= max_n; ++n) {
    const unsigned p = n / 2;
    std::vector<Coeff> poly((n - 1) / 2 + 1, Coeff(0));
    if (n % 2 == 0) {
      for (unsigned i = 0; i < p; ++i) detail::accumulate_product(poly, gamma[n - 2 * i - 1], theta[i], i);
    } else {
      for (unsigned i = 0; i < p; ++i) detail::accumulate_product(poly, gamma[n - 2 * i - 1], theta[i], i);
      poly[p] += theta[p];
    }
    gamma[n] = std::move(poly);
  }
  return gamma;
}

/// Same polynomials from the unified recurrence
///   gamma_n = theta_n + lambda * sum_{j=1}^{n-1} gamma_{n-j} theta_j,
/// iterating every j and multiplying through the even-index zeros.
template <class Coeff, class ThetaRatio>
GammaCoefficients<Coeff> gamma_coefficients_unified(unsigned max_n, ThetaRatio&& ratio) {
  GammaCoefficients<Coeff> gamma(max_n + 1);
  if (max_n == 0) return gamma;
  const auto odd = detail::signed_theta<Coeff>(max_n / 2 + 1, ratio);
  // theta_j: nullopt marks the structural zero at even j.
  auto theta = [&](unsigned j) -> std::optional<Coeff> {
    if (j % 2 == 0) return std::nullopt;
    return odd[(j - 1) / 2];
  };
  gamma[1] = {Coeff(1)};
  for (unsigned n = 2; n <= max_n; ++n) {
    std::vector<Coeff> poly((n - 1) / 2 + 1, Coeff(0));
    if (auto own = theta(n)) poly[(n - 1) / 2] += *own;
    for (unsigned j = 1; j < n; ++j) {
      const auto th = theta(j);
      const unsigned shift = j / 2;
      const Coeff factor = th ? *th : Coeff(0);
      const auto& lower = gamma[n - j];
      for (std::size_t k = 0; k < lower.size() && k + shift < poly.size(); ++k) {
        poly[k + shift] += lower[k] * factor;
      }
    }
    gamma[n] = std::move(poly);
  }
  return gamma;
}

}  // namespace rflight
