#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rflight {

enum class ErrorKind {
  DimensionTooSmall,
  NonPositiveSpeed,
  NonPositiveIntensity,
  InvalidArgument,
  IndexTooSmall,
  UnsupportedIndex,
  TruncationNotConverged,
  PrecisionLoss,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-readable kind alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rflight
