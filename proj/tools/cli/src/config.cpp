#include "tra_cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

#include "tra/errors.hpp"

namespace tra::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError("--" + key + ": expected a finite number, got '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  int v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("--" + key + ": expected an integer, got '" + text + "'");
  }
  return v;
}

const std::set<std::string> kEfieldOnly{"zeta"};
const std::set<std::string> kBfieldOnly{"bfield", "c", "mu-az"};

}  // namespace

double RunConfig::resolved_lambda() const { return lambda ? *lambda : lambda_star(system); }

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{"system", "omega",  "q",          "zeta",
                                             "bfield", "c",      "ell",        "mu-az",
                                             "lambda", "basis-size", "levels", "out",
                                             "format", "tolerance"};
  return keys;
}

RawConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  RawConfig raw;
  std::string line;
  int number = 0;
  const auto& keys = config_keys();
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(number) + ": expected key=value");
    }
    std::string key = trim(t.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError(path + ":" + std::to_string(number) + ": unknown key '" + key + "'");
    }
    raw[key] = trim(t.substr(eq + 1));
  }
  return raw;
}

RunConfig build_config(const RawConfig& raw) {
  auto get = [&](const std::string& key) -> const std::string* {
    const auto it = raw.find(key);
    return it == raw.end() ? nullptr : &it->second;
  };

  const std::string system = get("system") ? *get("system") : "efield";
  if (system != "efield" && system != "bfield") {
    throw ConfigError("--system: expected 'efield' or 'bfield', got '" + system + "'");
  }
  const bool bfield = system == "bfield";
  for (const auto& [key, value] : raw) {
    if (bfield && kEfieldOnly.count(key)) {
      throw ConfigError("--" + key + " applies to --system efield only");
    }
    if (!bfield && kBfieldOnly.count(key)) {
      throw ConfigError("--" + key + " applies to --system bfield only");
    }
  }

  auto real_or = [&](const std::string& key, double fallback) {
    const std::string* v = get(key);
    return v ? parse_real(key, *v) : fallback;
  };
  auto int_or = [&](const std::string& key, int fallback) {
    const std::string* v = get(key);
    return v ? parse_int(key, *v) : fallback;
  };

  RunConfig cfg;
  if (bfield) {
    BFieldSystem b;
    b.omega = real_or("omega", b.omega);
    b.charge = real_or("q", b.charge);
    b.field = real_or("bfield", b.field);
    b.light_speed = real_or("c", b.light_speed);
    b.ell = int_or("ell", b.ell);
    b.azimuthal = int_or("mu-az", b.azimuthal);
    cfg.system = b;
  } else {
    EFieldSystem e;
    e.omega = real_or("omega", e.omega);
    e.charge = real_or("q", e.charge);
    e.field = real_or("zeta", e.field);
    e.ell = int_or("ell", e.ell);
    cfg.system = e;
  }
  try {
    validate(cfg.system);
  } catch (const NonConfiningError&) {
    throw;
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }

  if (const std::string* v = get("lambda"); v && *v != "auto") {
    const double l = parse_real("lambda", *v);
    if (!(l > 0.0)) throw ConfigError("--lambda: must be positive or 'auto'");
    cfg.lambda = l;
  }
  cfg.basis_size = int_or("basis-size", cfg.basis_size);
  if (cfg.basis_size < 1) throw ConfigError("--basis-size: must be at least 1");
  cfg.levels = int_or("levels", cfg.levels);
  if (cfg.levels < 1) throw ConfigError("--levels: must be at least 1");
  if (cfg.levels > cfg.basis_size) {
    throw ConfigError("--levels (" + std::to_string(cfg.levels) + ") cannot exceed --basis-size (" +
                      std::to_string(cfg.basis_size) + ")");
  }
  if (const std::string* v = get("out")) cfg.out = *v;
  if (const std::string* v = get("format")) {
    if (*v == "csv") {
      cfg.format = Format::csv;
    } else if (*v == "json") {
      cfg.format = Format::json;
    } else {
      throw ConfigError("--format: expected 'csv' or 'json', got '" + *v + "'");
    }
  }
  cfg.tolerance = real_or("tolerance", cfg.tolerance);
  if (!(cfg.tolerance > 0.0)) throw ConfigError("--tolerance: must be positive");
  return cfg;
}

}  // namespace tra::cli
