#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "secrecy/serialize.hpp"

namespace secrecy::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kValidationError = 2, kNumericalError = 3 };

/// Entry point behind the secrecy-cli binary. `args` excludes the program
/// name. Results go to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class Format { json, csv };

struct SweepAxis {
  double min = 0.0;
  double max = 0.0;
  int count = 2;
  bool log_scale = false;

  std::vector<double> points() const;
};

struct SweepConfig {
  std::string model;  // "wiretap" or "relay"
  std::vector<std::pair<std::string, double>> fixed;
  std::vector<std::pair<std::string, SweepAxis>> swept;  // declared order, outermost first
  std::vector<std::string> outputs;
  Format format = Format::json;
  int grid = 512;
  int alpha_grid = 257;
  int samples = 512;
  double tol = 1e-9;
};

/// Parses and validates a sweep document. Unknown keys, unknown parameter
/// names, overlapping fixed/swept names, count < 2, min >= max and log
/// scale with min <= 0 throw DomainError.
SweepConfig parse_sweep_config(const Json& doc);

/// Names accepted in SweepConfig::outputs for a model.
std::vector<std::string> sweep_quantities(const std::string& model);

struct SweepTable {
  std::vector<std::string> columns;  // swept parameter names, then outputs
  std::vector<std::vector<double>> rows;
};

/// Evaluates every point of the Cartesian product of the swept axes.
/// Throws DomainError for an unknown quantity name.
SweepTable run_sweep(const SweepConfig& config);

}  // namespace secrecy::cli
