#pragma once

#include <string>

#include "json.hpp"
#include "secrecy/regions.hpp"

namespace secrecy {

using Json = nlohmann::ordered_json;

/// Significant digits used for every number the CLI prints.
inline constexpr int kOutputDigits = 12;

/// x rounded to kOutputDigits significant digits. Non-finite values map to
/// JSON null.
Json rounded(double x);

/// {"vertices": [[r1, r2], ...]}
Json to_json(const RateRegion& region);

/// {"samples": [[r1, r2max], ...]}
Json to_json(const Envelope& envelope);

/// Two columns with a header row ("r1,r2" or "r1,r2max").
std::string to_csv(const RateRegion& region);
std::string to_csv(const Envelope& envelope);

/// Whitespace-separated two-column samples for external plotting tools.
std::string to_plot_data(const RateRegion& region);
std::string to_plot_data(const Envelope& envelope);

/// Flattens every leaf of a JSON value into a single CSV header row and a
/// single data row; nested keys are joined with '.'.
std::string flat_csv(const Json& outputs);

/// Number rendering shared by JSON and CSV output.
std::string format_number(double x);

}  // namespace secrecy
