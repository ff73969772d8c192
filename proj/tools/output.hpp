#pragma once

#include <fstream>
#include <iosfwd>
#include <istream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace rflight::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Shortest-safe decimal: 17 significant digits, '.' separator, no locale.
std::string fmt_real(double value);

/// "start:stop:step", stop included when it lies within half a step of a grid point.
std::vector<double> parse_grid(const std::string& text);

std::vector<double> parse_real_list(const std::string& text);
std::vector<unsigned> parse_unsigned_list(const std::string& text);

/// Rows written as RFC 4180 CSV with a header.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);
  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& out_;
};

/// stdout, or the file named by --out.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path);
  std::ostream& stream() { return file_ ? *file_ : *stdout_; }

 private:
  std::ostream* stdout_;
  std::unique_ptr<std::ofstream> file_;
};

/// Flat JSON object whose keys mirror flag names; arrays are joined with ','.
/// Keys are routed to the subcommand selected on the command line.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* root) : root_(root) {}

  std::string to_config(const CLI::App* app, bool default_also, bool write_description,
                        std::string prefix) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;

 private:
  const CLI::App* root_;
};

}  // namespace rflight::cli
