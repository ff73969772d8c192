#include "output.hpp"

#include <charconv>
#include <cmath>
#include <iostream>
#include <system_error>

#include <json.hpp>

#include "randflight/error.hpp"

namespace rflight::cli {

namespace {

double parse_real(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw Error(ErrorKind::InvalidArgument, "not a number: '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string quote_csv(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string fmt_real(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::vector<double> parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw Error(ErrorKind::InvalidArgument, "grid must be start:stop:step, got '" + text + "'");
  const double start = parse_real(parts[0]);
  const double stop = parse_real(parts[1]);
  const double step = parse_real(parts[2]);
  if (!std::isfinite(start) || !std::isfinite(stop) || !(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorKind::InvalidArgument, "grid needs finite bounds and step > 0");
  }
  if (stop < start) throw Error(ErrorKind::InvalidArgument, "grid stop is below start");
  const double span = (stop - start) / step;
  if (span > 1e7) throw Error(ErrorKind::InvalidArgument, "grid has more than 1e7 points");
  const auto count = static_cast<long>(std::floor(span + 0.5));
  std::vector<double> grid;
  grid.reserve(count + 1);
  for (long i = 0; i <= count; ++i) grid.push_back(start + static_cast<double>(i) * step);
  if (std::abs(grid.back() - stop) <= 1e-9 * step) grid.back() = stop;
  return grid;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_real(part));
  return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& part : split(text, ',')) {
    unsigned value = 0;
    const char* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (part.empty() || ec != std::errc{} || ptr != end) {
      throw Error(ErrorKind::InvalidArgument, "not a non-negative integer: '" + part + "'");
    }
    out.push_back(value);
  }
  return out;
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out) {
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << quote_csv(cells[i]);
  }
  out_ << "\r\n";
}

OutputTarget::OutputTarget(const std::string& path) : stdout_(&std::cout) {
  if (path.empty() || path == "-") return;
  file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*file_) throw Error(ErrorKind::InvalidArgument, "cannot open --out file '" + path + "'");
}

std::string JsonConfig::to_config(const CLI::App* app, bool default_also, bool, std::string) const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const CLI::Option* opt : app->get_options()) {
    if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
    const std::string& name = opt->get_lnames().front();
    if (opt->count() > 0) {
      j[name] = opt->as<std::string>();
    } else if (default_also && !opt->get_default_str().empty()) {
      j[name] = opt->get_default_str();
    }
  }
  return j.dump(2) + "\n";
}

std::vector<CLI::ConfigItem> JsonConfig::from_config(std::istream& input) const {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(input);
  } catch (const nlohmann::json::exception& e) {
    throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw CLI::ConversionError("config file must hold a flat JSON object");

  auto scalar = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return fmt_real(v.get<double>());
    if (v.is_number()) return v.dump();
    throw CLI::ConversionError("config values must be scalars or flat arrays");
  };

  std::vector<std::string> parents;
  if (const auto selected = root_->get_subcommands(); selected.size() == 1) parents.push_back(selected[0]->get_name());

  std::vector<CLI::ConfigItem> items;
  for (const auto& [key, value] : j.items()) {
    CLI::ConfigItem item;
    item.parents = parents;
    item.name = key;
    if (value.is_array()) {
      std::string joined;
      for (const auto& v : value) joined += (joined.empty() ? "" : ",") + scalar(v);
      item.inputs.push_back(joined);
    } else {
      item.inputs.push_back(scalar(value));
    }
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace rflight::cli
