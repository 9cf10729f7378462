#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tra/systems.hpp"

namespace tra::cli {

/// Bad or inconsistent user input; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct RunConfig {
  System system = EFieldSystem{};
  std::optional<double> lambda;  // empty: lambda_star
  int basis_size = 50;
  int levels = 5;
  std::string out;  // empty or "-": standard output
  Format format = Format::csv;
  double tolerance = 1e-10;

  double resolved_lambda() const;
};

/// Option keys shared by every verb, spelled as on the command line without
/// the leading dashes: system, omega, q, zeta, bfield, c, ell, mu-az, lambda,
/// basis-size, levels, out, format, tolerance.
const std::vector<std::string>& config_keys();

using RawConfig = std::map<std::string, std::string>;

/// Reads key=value lines. Blank lines and lines starting with '#' are skipped;
/// underscores in keys are accepted in place of dashes.
RawConfig read_config_file(const std::string& path);

/// Converts raw values to a validated configuration. Parameters that do not
/// belong to the chosen system are rejected. Throws ConfigError for malformed
/// or out-of-range values and NonConfiningError for a non-confining potential.
RunConfig build_config(const RawConfig& raw);

}  // namespace tra::cli
