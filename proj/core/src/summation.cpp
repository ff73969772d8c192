#include "randflight/summation.hpp"

#include "randflight/error.hpp"

namespace rflight {

double poisson_weight(double x, unsigned k) noexcept {
  if (x == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(static_cast<double>(k) * std::log(x) - x - std::lgamma(static_cast<double>(k) + 1.0));
}

namespace {
constexpr unsigned kConsecutiveSmall = 3;
}

SeriesTruncation::SeriesTruncation(const SeriesControl& ctrl, unsigned first_index, double peak_index)
    : ctrl_(ctrl), first_index_(first_index), peak_index_(peak_index) {
  ctrl_.validate();
}

bool SeriesTruncation::observe(unsigned index, double magnitude) {
  if (index < first_index_ || static_cast<double>(index) < peak_index_) {
    small_run_ = 0;
    return false;
  }
  small_run_ = magnitude < ctrl_.abs_tol ? small_run_ + 1 : 0;
  converged_ = small_run_ >= kConsecutiveSmall;
  return ctrl_.policy == SeriesPolicy::AdaptiveUntilTol && converged_;
}

void SeriesTruncation::finish(const std::string& what) const {
  if (!converged_) {
    throw Error(ErrorKind::TruncationNotConverged,
                what + ": series not below abs_tol=" + std::to_string(ctrl_.abs_tol) + " after " +
                    std::to_string(ctrl_.max_terms) + " terms");
  }
}

}  // namespace rflight
