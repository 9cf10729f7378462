#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tra/recursion.hpp"
#include "tra_cli/config.hpp"
#include "tra_cli/table.hpp"

namespace tra::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
  kNonConfining = 3,
  kDegenerate = 4,
};

struct CommandResult {
  Table table;
  int exit_code = kOk;
  std::vector<std::string> messages;  // human-readable notes for stderr
};

/// Matrix levels next to the exact and fixed-scale closed forms. Fails (1)
/// only when xi = 0 and some |E_matrix - E_analytic| exceeds the tolerance.
CommandResult cmd_spectrum(const RunConfig& cfg);

struct SweepSpec {
  std::string param;  // B, zeta, omega, ell or mu_az
  std::vector<double> values;
};

/// Long-format table (value, n, E_matrix, E_analytic, delta); delta is the
/// shift from mu_az = 0 (magnetic field) or from the field-free level
/// omega^2 (2n + nu + 1) (electric field). Points run concurrently; rows keep
/// the order of the values.
CommandResult cmd_sweep(const RunConfig& cfg, const SweepSpec& sweep);

struct WavefunctionSpec {
  std::optional<double> energy;  // default: exact ground level
  double r_min = 0.05;
  double r_max = 5.0;
  int r_points = 100;
  std::vector<int> terms{1, 5, 10, 20, 40};
  std::optional<double> weight;
  ExpansionMethod method = ExpansionMethod::minimal;
};

/// Partial sums of the basis expansion on a radial grid, one column per
/// requested depth. Throws DegenerateCouplingError when xi = 0 and a depth
/// above 1 is requested.
CommandResult cmd_wavefunction(const RunConfig& cfg, const WavefunctionSpec& spec);

/// Runs the verification suites; one table row per check.
CommandResult cmd_verify(const std::string& suite, bool inject_fault);

/// Full command line: parsing, dispatch, output and exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tra::cli
