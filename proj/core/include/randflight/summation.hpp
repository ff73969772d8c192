#pragma once

#include <cmath>
#include <string>

#include "randflight/params.hpp"

namespace rflight {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays exact
/// when an addend is larger in magnitude than the running sum, which is what
/// happens in alternating series.
template <typename Real>
class CompensatedSum {
 public:
  CompensatedSum& operator+=(Real value) noexcept {
    const Real t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    abs_sum_ += std::abs(value);
    return *this;
  }

  Real value() const noexcept { return sum_ + compensation_; }
  /// Sum of |addend|; bounds the magnitude that can cancel.
  Real abs_sum() const noexcept { return abs_sum_; }

 private:
  Real sum_{0};
  Real compensation_{0};
  Real abs_sum_{0};
};

/// e^{-x} x^k / k!, computed in the log domain so that neither x^k nor k!
/// overflows. x >= 0; returns 1 for x == 0, k == 0.
double poisson_weight(double x, unsigned k) noexcept;

/// Drives a SeriesControl: feed it term magnitudes in order and ask whether to
/// stop. Terms before `first_index` (structural zeros) and before `peak_index`
/// (still growing) never count toward convergence.
class SeriesTruncation {
 public:
  SeriesTruncation(const SeriesControl& ctrl, unsigned first_index, double peak_index);

  /// Records the magnitude of term `index`; returns true when summation should stop.
  bool observe(unsigned index, double magnitude);

  /// Number of terms to attempt.
  unsigned limit() const noexcept { return ctrl_.max_terms; }

  /// Throws TruncationNotConverged if the series was not seen to converge.
  void finish(const std::string& what) const;

 private:
  SeriesControl ctrl_;
  unsigned first_index_;
  double peak_index_;
  unsigned small_run_ = 0;
  bool converged_ = false;
};

}  // namespace rflight
