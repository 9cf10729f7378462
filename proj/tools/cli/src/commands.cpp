#include "tra_cli/commands.hpp"

#include <cmath>
#include <future>

#include "tra/errors.hpp"
#include "tra/spectrum.hpp"
#include "tra/verify.hpp"

#ifndef TRA_VERSION
#define TRA_VERSION "unknown"
#endif

namespace tra::cli {
namespace {

void add_system_metadata(Table& t, const std::string& command, const RunConfig& cfg) {
  t.metadata.emplace_back("generated_by", std::string("tra ") + TRA_VERSION);
  t.metadata.emplace_back("command", command);
  t.metadata.emplace_back("system", describe(cfg.system));
  if (const auto* e = std::get_if<EFieldSystem>(&cfg.system)) {
    t.metadata.emplace_back("omega", e->omega);
    t.metadata.emplace_back("q", e->charge);
    t.metadata.emplace_back("zeta", e->field);
    t.metadata.emplace_back("ell", static_cast<long long>(e->ell));
  } else {
    const auto& b = std::get<BFieldSystem>(cfg.system);
    t.metadata.emplace_back("omega", b.omega);
    t.metadata.emplace_back("q", b.charge);
    t.metadata.emplace_back("bfield", b.field);
    t.metadata.emplace_back("c", b.light_speed);
    t.metadata.emplace_back("ell", static_cast<long long>(b.ell));
    t.metadata.emplace_back("mu_az", static_cast<long long>(b.azimuthal));
  }
}

void add_scale_metadata(Table& t, const RunConfig& cfg) {
  const double lambda = cfg.resolved_lambda();
  t.metadata.emplace_back("lambda", lambda);
  t.metadata.emplace_back("lambda_mode", std::string(cfg.lambda ? "explicit" : "auto"));
  t.metadata.emplace_back("lambda_star", lambda_star(cfg.system));
  t.metadata.emplace_back("xi", coupling(cfg.system, lambda).xi);
}

// Applies one sweep value to a copy of the system.
System with_param(System sys, const std::string& param, double value) {
  auto as_int = [&](const char* name) {
    if (value != std::nearbyint(value)) {
      throw ConfigError(std::string("--values: ") + name + " values must be integers");
    }
    return static_cast<int>(value);
  };
  if (param == "omega") {
    std::visit([&](auto& s) { s.omega = value; }, sys);
  } else if (param == "ell") {
    std::visit([&](auto& s) { s.ell = as_int("ell"); }, sys);
  } else if (param == "zeta") {
    auto* e = std::get_if<EFieldSystem>(&sys);
    if (!e) throw ConfigError("--param zeta needs --system efield");
    e->field = value;
  } else if (param == "B") {
    auto* b = std::get_if<BFieldSystem>(&sys);
    if (!b) throw ConfigError("--param B needs --system bfield");
    b->field = value;
  } else if (param == "mu_az") {
    auto* b = std::get_if<BFieldSystem>(&sys);
    if (!b) throw ConfigError("--param mu_az needs --system bfield");
    b->azimuthal = as_int("mu_az");
  } else {
    throw ConfigError("--param: unknown sweep parameter '" + param + "'");
  }
  try {
    validate(sys);
  } catch (const NonConfiningError&) {
    throw;
  } catch (const DomainError& e) {
    throw ConfigError(std::string("sweep point ") + param + " = " + format_number(value) + ": " + e.what());
  }
  return sys;
}

struct SweepPoint {
  std::vector<double> matrix;
  std::vector<double> analytic;
  std::vector<double> delta;
};

SweepPoint sweep_point(const System& sys, std::optional<double> fixed_lambda, int basis_size, int levels) {
  const double lambda = fixed_lambda ? *fixed_lambda : lambda_star(sys);
  SweepPoint p;
  p.matrix = solve(sys, lambda, basis_size, levels).energies;
  std::vector<double> reference(levels);
  if (const auto* b = std::get_if<BFieldSystem>(&sys)) {
    BFieldSystem zero = *b;
    zero.azimuthal = 0;
    reference = solve(zero, lambda, basis_size, levels).energies;
  } else {
    for (int n = 0; n < levels; ++n) reference[n] = fixed_scale_spectrum(sys, n);
  }
  for (int n = 0; n < levels; ++n) {
    p.analytic.push_back(analytic_spectrum(sys, n));
    p.delta.push_back(p.matrix[n] - reference[n]);
  }
  return p;
}

}  // namespace

CommandResult cmd_spectrum(const RunConfig& cfg) {
  CommandResult r;
  Table& t = r.table;
  add_system_metadata(t, "spectrum", cfg);
  add_scale_metadata(t, cfg);
  const double lambda = cfg.resolved_lambda();
  const bool diagonal = coupling(cfg.system, lambda).is_degenerate();
  t.metadata.emplace_back("basis_size", static_cast<long long>(cfg.basis_size));
  t.metadata.emplace_back("levels", static_cast<long long>(cfg.levels));
  t.metadata.emplace_back("tolerance", cfg.tolerance);
  t.metadata.emplace_back("tolerance_applies", std::string(diagonal ? "yes (xi = 0, diagonal matrix)"
                                                                    : "no (detuned basis, differences reported)"));
  t.columns = {"n", "E_matrix", "E_analytic", "abs_diff", "E_omega2"};

  const Spectrum s = solve(cfg.system, lambda, cfg.basis_size, cfg.levels);
  double worst = 0.0;
  for (int n = 0; n < cfg.levels; ++n) {
    const double exact = analytic_spectrum(cfg.system, n);
    const double diff = std::fabs(s.energies[n] - exact);
    worst = std::max(worst, diff);
    t.rows.push_back({static_cast<long long>(n), s.energies[n], exact, diff,
                      fixed_scale_spectrum(cfg.system, n)});
  }
  if (diagonal && worst > cfg.tolerance) {
    r.exit_code = kCheckFailed;
    r.messages.push_back("max |E_matrix - E_analytic| = " + format_number(worst) +
                         " exceeds tolerance " + format_number(cfg.tolerance));
  }
  return r;
}

CommandResult cmd_sweep(const RunConfig& cfg, const SweepSpec& sweep) {
  if (sweep.values.empty()) throw ConfigError("--values: at least one value is required");
  std::vector<System> points;
  for (double v : sweep.values) points.push_back(with_param(cfg.system, sweep.param, v));

  std::vector<std::future<SweepPoint>> jobs;
  for (const System& p : points) {
    jobs.push_back(std::async(std::launch::async, sweep_point, p, cfg.lambda, cfg.basis_size, cfg.levels));
  }
  std::vector<SweepPoint> results;
  for (auto& j : jobs) results.push_back(j.get());

  CommandResult r;
  Table& t = r.table;
  add_system_metadata(t, "sweep", cfg);
  t.metadata.emplace_back("lambda_mode", std::string(cfg.lambda ? "explicit" : "auto (lambda_star per point)"));
  if (cfg.lambda) t.metadata.emplace_back("lambda", *cfg.lambda);
  t.metadata.emplace_back("sweep_param", sweep.param);
  t.metadata.emplace_back("basis_size", static_cast<long long>(cfg.basis_size));
  t.metadata.emplace_back("levels", static_cast<long long>(cfg.levels));
  const bool bfield = std::holds_alternative<BFieldSystem>(cfg.system);
  t.metadata.emplace_back("delta", std::string(bfield ? "E_matrix - E_matrix(mu_az = 0)"
                                                      : "E_matrix - omega^2 (2n + nu + 1)"));
  t.columns = {sweep.param, "n", "E_matrix", "E_analytic", "delta"};
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int n = 0; n < cfg.levels; ++n) {
      t.rows.push_back({sweep.values[i], static_cast<long long>(n), results[i].matrix[n],
                        results[i].analytic[n], results[i].delta[n]});
    }
  }
  return r;
}

CommandResult cmd_wavefunction(const RunConfig& cfg, const WavefunctionSpec& spec) {
  if (spec.terms.empty()) throw ConfigError("--terms: at least one depth is required");
  int depth = 0;
  for (int k : spec.terms) {
    if (k < 1) throw ConfigError("--terms: depths must be at least 1");
    depth = std::max(depth, k);
  }
  if (!(spec.r_min > 0.0) || !(spec.r_max > spec.r_min)) {
    throw ConfigError("--r-min/--r-max: need 0 < r-min < r-max");
  }
  if (spec.r_points < 2) throw ConfigError("--r-points: need at least 2 points");

  const double lambda = cfg.resolved_lambda();
  const double energy = spec.energy ? *spec.energy : analytic_spectrum(cfg.system, 0);
  const std::vector<double> coeffs = expansion_coefficients(cfg.system, lambda, energy, depth, spec.method);

  CommandResult r;
  Table& t = r.table;
  add_system_metadata(t, "wavefunction", cfg);
  add_scale_metadata(t, cfg);
  t.metadata.emplace_back("energy", energy);
  t.metadata.emplace_back("expansion", std::string(spec.method == ExpansionMethod::minimal ? "minimal" : "forward"));
  if (spec.weight) {
    t.metadata.emplace_back("weight", *spec.weight);
  } else {
    t.metadata.emplace_back("weight", std::string("unweighted"));
  }
  try {
    const MPParams mp = match_meixner_pollaczek(cfg.system, lambda);
    t.metadata.emplace_back("mu_mp", mp.mu);
    t.metadata.emplace_back("theta", mp.theta);
    t.metadata.emplace_back("cosh_theta", mp.cosh_theta);
    if (mp.fixed_cosh_theta) {
      t.metadata.emplace_back("cosh_theta_fixed", *mp.fixed_cosh_theta);
    } else {
      t.metadata.emplace_back("cosh_theta_fixed", std::string("undefined (no field term)"));
    }
    t.metadata.emplace_back("mp_spectral_offset", mp.spectral_offset);
  } catch (const DegenerateCouplingError&) {
    t.metadata.emplace_back("mp_match", std::string("none: xi = 0, the matrix is diagonal"));
  } catch (const DomainError& e) {
    t.metadata.emplace_back("mp_match", std::string("none: ") + e.what());
  }

  t.columns = {"r"};
  for (int k : spec.terms) t.columns.push_back("psi_" + std::to_string(k));
  const double step = (spec.r_max - spec.r_min) / (spec.r_points - 1);
  for (int i = 0; i < spec.r_points; ++i) {
    const double rr = i + 1 == spec.r_points ? spec.r_max : spec.r_min + i * step;
    const std::vector<double> sums = wavefunction_partial_sums(cfg.system, lambda, coeffs, rr, spec.weight);
    std::vector<Cell> row{rr};
    for (int k : spec.terms) row.emplace_back(sums[k - 1]);
    t.rows.push_back(std::move(row));
  }
  return r;
}

CommandResult cmd_verify(const std::string& suite, bool inject_fault) {
  VerifyOptions options;
  options.inject_fault = inject_fault;
  const std::vector<CheckResult> checks = run_verification(suite, options);

  CommandResult r;
  Table& t = r.table;
  t.metadata.emplace_back("generated_by", std::string("tra ") + TRA_VERSION);
  t.metadata.emplace_back("command", std::string("verify"));
  t.metadata.emplace_back("suite", suite);
  if (inject_fault) t.metadata.emplace_back("fault_injection", std::string("on"));
  t.columns = {"suite", "check", "status", "measured", "threshold", "note"};
  int failed = 0;
  for (const CheckResult& c : checks) {
    const std::string status = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
    if (!c.informational && !c.passed) ++failed;
    t.rows.push_back({c.suite, c.name, status, c.measured, c.threshold, c.note});
  }
  if (failed > 0) {
    r.exit_code = kCheckFailed;
    r.messages.push_back(std::to_string(failed) + " check(s) failed");
  }
  return r;
}

}  // namespace tra::cli
