#include "randflight/params.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "randflight/error.hpp"

namespace rflight {

FlightParams validate_params(long m, double c, double lambda) {
  if (m < 3) {
    throw Error(ErrorKind::DimensionTooSmall, "dimension m=" + std::to_string(m) + " must be >= 3");
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorKind::NonPositiveSpeed, "speed c=" + std::to_string(c) + " must be > 0");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorKind::NonPositiveIntensity,
                "intensity lambda=" + std::to_string(lambda) + " must be > 0");
  }
  return FlightParams(static_cast<unsigned>(m), c, lambda);
}

unsigned MultiIndex::order() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0u);
}

std::size_t MultiIndex::count(unsigned value) const noexcept {
  return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), value));
}

void MultiIndex::check_dimension(const FlightParams& params) const {
  if (entries_.size() != params.m()) {
    throw Error(ErrorKind::UnsupportedIndex, "multi-index " + to_string() + " has length " +
                                                 std::to_string(entries_.size()) + ", expected m=" +
                                                 std::to_string(params.m()));
  }
}

std::string MultiIndex::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

MultiIndex MultiIndex::parse(const std::string& text) {
  std::vector<unsigned> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const char* first = text.data() + pos;
    const char* last = text.data() + next;
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw Error(ErrorKind::InvalidArgument, "malformed multi-index '" + text + "'");
    }
    entries.push_back(value);
    pos = next + 1;
  }
  return MultiIndex(std::move(entries));
}

void SeriesControl::validate() const {
  if (max_terms == 0) throw Error(ErrorKind::InvalidArgument, "max_terms must be positive");
  if (!(abs_tol >= 0.0)) throw Error(ErrorKind::InvalidArgument, "abs_tol must be non-negative");
}

}  // namespace rflight
