#include "secrecy/serialize.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <utility>
#include <vector>

#include <fmt/format.h>

namespace secrecy {
namespace {

void flatten(const Json& value, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& cells) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      flatten(child, prefix.empty() ? key : prefix + "." + key, cells);
    }
  } else if (value.is_array()) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      flatten(value[i], prefix + "." + std::to_string(i), cells);
    }
  } else if (value.is_number()) {
    cells.emplace_back(prefix, format_number(value.get<double>()));
  } else if (value.is_boolean()) {
    cells.emplace_back(prefix, value.get<bool>() ? "true" : "false");
  } else if (value.is_null()) {
    cells.emplace_back(prefix, "null");
  } else {
    cells.emplace_back(prefix, value.get<std::string>());
  }
}

template <typename Points>
std::string two_columns(const Points& pts, const char* header, char sep) {
  std::ostringstream os;
  if (header != nullptr) os << header << '\n';
  for (const auto& p : pts) os << format_number(p.r1) << sep << format_number(p.r2) << '\n';
  return os.str();
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  const double r = std::strtod(fmt::format("{:.{}g}", x, kOutputDigits).c_str(), nullptr);
  return fmt::format("{}", r == 0.0 ? 0.0 : r);
}

Json rounded(double x) {
  if (!std::isfinite(x)) return nullptr;
  const double r = std::strtod(fmt::format("{:.{}g}", x, kOutputDigits).c_str(), nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json to_json(const RateRegion& region) {
  Json vertices = Json::array();
  for (const auto& v : region.vertices()) vertices.push_back({rounded(v.r1), rounded(v.r2)});
  return Json{{"vertices", std::move(vertices)}};
}

Json to_json(const Envelope& envelope) {
  Json samples = Json::array();
  for (const auto& s : envelope.samples) samples.push_back({rounded(s.r1), rounded(s.r2)});
  return Json{{"samples", std::move(samples)}};
}

std::string to_csv(const RateRegion& region) { return two_columns(region.vertices(), "r1,r2", ','); }

std::string to_csv(const Envelope& envelope) {
  return two_columns(envelope.samples, "r1,r2max", ',');
}

std::string to_plot_data(const RateRegion& region) {
  return two_columns(region.vertices(), nullptr, ' ');
}

std::string to_plot_data(const Envelope& envelope) {
  return two_columns(envelope.samples, nullptr, ' ');
}

std::string flat_csv(const Json& outputs) {
  std::vector<std::pair<std::string, std::string>> cells;
  flatten(outputs, "", cells);
  std::ostringstream os;
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i].first;
  os << '\n';
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i].second;
  os << '\n';
  return os.str();
}

}  // namespace secrecy
