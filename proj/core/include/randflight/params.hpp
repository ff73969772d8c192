#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rflight {

/// Parameters of the symmetric random flight in R^m: dimension, speed and
/// switching intensity. Only constructible through validate_params.
class FlightParams {
 public:
  unsigned m() const noexcept { return m_; }
  double c() const noexcept { return c_; }
  double lambda() const noexcept { return lambda_; }

  friend FlightParams validate_params(long m, double c, double lambda);
  friend bool operator==(const FlightParams&, const FlightParams&) = default;

 private:
  FlightParams(unsigned m, double c, double lambda) : m_(m), c_(c), lambda_(lambda) {}

  unsigned m_;
  double c_;
  double lambda_;
};

/// Rejects m < 3 (DimensionTooSmall), c <= 0 or non-finite (NonPositiveSpeed)
/// and lambda <= 0 or non-finite (NonPositiveIntensity).
FlightParams validate_params(long m, double c, double lambda);

/// Moment multi-index q = (q_1, ..., q_m).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> entries) : entries_(std::move(entries)) {}
  MultiIndex(std::initializer_list<unsigned> entries) : entries_(entries) {}

  std::size_t size() const noexcept { return entries_.size(); }
  unsigned operator[](std::size_t i) const { return entries_.at(i); }
  std::span<const unsigned> entries() const noexcept { return entries_; }

  unsigned order() const noexcept;
  std::size_t count(unsigned value) const noexcept;

  /// Throws UnsupportedIndex when size() != params.m().
  void check_dimension(const FlightParams& params) const;

  /// "2,2,0"
  std::string to_string() const;

  /// Inverse of to_string; throws InvalidArgument on malformed input.
  static MultiIndex parse(const std::string& text);

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> entries_;
};

enum class SeriesPolicy { FixedOrder, AdaptiveUntilTol };

/// Truncation policy for series evaluation.
///
/// FixedOrder sums exactly max_terms terms and then requires the last three
/// term magnitudes to be below abs_tol. AdaptiveUntilTol stops as soon as three
/// consecutive terms (past the series' start and peak) fall below abs_tol and
/// fails if max_terms is reached first.
struct SeriesControl {
  unsigned max_terms = 400;
  double abs_tol = 1e-17;
  SeriesPolicy policy = SeriesPolicy::AdaptiveUntilTol;

  static SeriesControl fixed(unsigned terms, double tol = 1e-17) {
    return {terms, tol, SeriesPolicy::FixedOrder};
  }
  static SeriesControl adaptive(double tol, unsigned max_terms = 400) {
    return {max_terms, tol, SeriesPolicy::AdaptiveUntilTol};
  }

  /// Throws InvalidArgument for max_terms == 0 or negative/NaN abs_tol.
  void validate() const;
};

}  // namespace rflight
