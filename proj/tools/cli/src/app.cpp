#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "tra/errors.hpp"
#include "tra/verify.hpp"
#include "tra_cli/commands.hpp"

#ifndef TRA_VERSION
#define TRA_VERSION "unknown"
#endif

namespace tra::cli {
namespace {

const std::map<std::string, std::string>& flag_help() {
  static const std::map<std::string, std::string> help{
      {"system", "efield or bfield (default efield)"},
      {"omega", "oscillator parameter; the bare potential is omega^4 r^2 / 2 (default 1)"},
      {"q", "charge (default 1)"},
      {"zeta", "electric-field strength, efield only (default 0)"},
      {"bfield", "magnetic-field strength B, bfield only (default 0)"},
      {"c", "speed of light, bfield only (default 1)"},
      {"ell", "orbital quantum number (default 0)"},
      {"mu-az", "azimuthal quantum number, |mu_az| <= ell, bfield only (default 0)"},
      {"lambda", "basis scale: a positive number or 'auto' for the diagonalizing scale (default auto)"},
      {"basis-size", "matrix dimension N (default 50)"},
      {"levels", "number of levels k (default 5)"},
      {"out", "output file; '-' or absent writes to standard output"},
      {"format", "csv or json (default csv)"},
      {"tolerance", "pass bound for |E_matrix - E_analytic| when xi = 0 (default 1e-10)"},
  };
  return help;
}

void emit(const CommandResult& result, const RunConfig& cfg, std::ostream& out, std::ostream& err,
          bool table_to_stdout) {
  const std::string text = cfg.format == Format::json ? to_json(result.table) : to_csv(result.table);
  if (!cfg.out.empty() && cfg.out != "-") {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw ConfigError("--out: cannot write '" + cfg.out + "'");
    file << text;
  } else if (table_to_stdout) {
    out << text;
  }
  for (const std::string& m : result.messages) err << "tra: " << m << '\n';
}

void print_checks(const Table& table, std::ostream& out) {
  for (const auto& row : table.rows) {
    out << std::get<std::string>(row[2]) << "  [" << std::get<std::string>(row[0]) << "] "
        << std::get<std::string>(row[1]) << "  measured=" << format_number(std::get<double>(row[3]));
    const double threshold = std::get<double>(row[4]);
    if (std::isfinite(threshold)) out << " threshold=" << format_number(threshold);
    const std::string& note = std::get<std::string>(row[5]);
    if (!note.empty()) out << "  (" << note << ")";
    out << '\n';
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laguerre-basis spectra of the spherical oscillator in electric and magnetic fields", "tra"};
  app.set_version_flag("--version", std::string("tra ") + TRA_VERSION);
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key=value file with the options below; flags win on conflict");
  std::map<std::string, std::string> storage;
  std::map<std::string, CLI::Option*> options;
  for (const std::string& key : config_keys()) {
    options[key] = app.add_option("--" + key, storage[key], flag_help().at(key));
  }

  auto* spectrum = app.add_subcommand("spectrum", "matrix levels next to the closed forms")->fallthrough();

  auto* sweep = app.add_subcommand("sweep", "levels over a grid of one parameter")->fallthrough();
  SweepSpec sweep_spec;
  sweep->add_option("--param", sweep_spec.param, "parameter to sweep")
      ->required()
      ->check(CLI::IsMember({"B", "zeta", "omega", "ell", "mu_az"}));
  sweep->add_option("--values", sweep_spec.values, "comma-separated grid")->required()->delimiter(',');

  auto* wave = app.add_subcommand("wavefunction", "partial sums of the basis expansion")->fallthrough();
  WavefunctionSpec wave_spec;
  double energy = 0.0;
  auto* energy_opt = wave->add_option("--energy", energy, "energy E (default: exact ground level)");
  wave->add_option("--r-min", wave_spec.r_min, "first radius (default 0.05)");
  wave->add_option("--r-max", wave_spec.r_max, "last radius (default 5)");
  wave->add_option("--r-points", wave_spec.r_points, "number of radii (default 100)");
  wave->add_option("--terms", wave_spec.terms, "comma-separated expansion depths (default 1,5,10,20,40)")
      ->delimiter(',');
  double weight = 1.0;
  auto* weight_opt = wave->add_option("--weight", weight, "overall factor sqrt(rho); unweighted when absent");
  std::string expansion = "minimal";
  wave->add_option("--expansion", expansion, "minimal (backward, default) or forward recursion")
      ->check(CLI::IsMember({"minimal", "forward"}));

  auto* verify = app.add_subcommand("verify", "run the invariant suites")->fallthrough();
  std::string suite = "all";
  verify->add_option("--suite", suite, "suite to run (default all)")
      ->check(CLI::IsMember(verification_suites()));
  bool inject_fault = false;
  verify->add_flag("--inject-fault", inject_fault, "perturb computed values")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    RawConfig raw = config_path.empty() ? RawConfig{} : read_config_file(config_path);
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) raw[key] = storage[key];
    }
    const RunConfig cfg = build_config(raw);

    if (*spectrum) {
      const CommandResult r = cmd_spectrum(cfg);
      emit(r, cfg, out, err, true);
      return r.exit_code;
    }
    if (*sweep) {
      const CommandResult r = cmd_sweep(cfg, sweep_spec);
      emit(r, cfg, out, err, true);
      return r.exit_code;
    }
    if (*wave) {
      if (energy_opt->count() > 0) wave_spec.energy = energy;
      if (weight_opt->count() > 0) wave_spec.weight = weight;
      wave_spec.method = expansion == "forward" ? ExpansionMethod::forward : ExpansionMethod::minimal;
      const CommandResult r = cmd_wavefunction(cfg, wave_spec);
      emit(r, cfg, out, err, true);
      return r.exit_code;
    }
    const CommandResult r = cmd_verify(suite, inject_fault);
    print_checks(r.table, out);
    emit(r, cfg, out, err, false);
    return r.exit_code;
  } catch (const ConfigError& e) {
    err << "tra: configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const NonConfiningError& e) {
    err << "tra: non-confining parameters: " << e.what() << '\n';
    return kNonConfining;
  } catch (const DegenerateCouplingError& e) {
    err << "tra: " << e.what() << "; use --terms 1 or a detuned --lambda\n";
    return kDegenerate;
  } catch (const DomainError& e) {
    err << "tra: invalid input: " << e.what() << '\n';
    return kConfigError;
  } catch (const ConvergenceError& e) {
    err << "tra: numerical failure: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace tra::cli
