#include "tra/spectrum.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "tra/assembly.hpp"
#include "tra/errors.hpp"

namespace tra {

Spectrum solve(const System& sys, double lambda, int basis_size, int levels) {
  if (levels < 1) throw DomainError("solve: levels must be positive");
  Spectrum s = eigenvalues(hamiltonian_matrix(sys, lambda, basis_size),
                           static_cast<std::size_t>(levels));
  s.system = describe(sys);
  s.lambda = lambda;
  return s;
}

double analytic_spectrum_efield(const EFieldSystem& sys, int n) {
  if (n < 0) throw DomainError("analytic_spectrum: n must be non-negative");
  const double ls = lambda_star(System{sys});
  return ls * ls * (2.0 * n + sys.ell + 1.5);
}

double analytic_spectrum_bfield(const BFieldSystem& sys, int n) {
  if (n < 0) throw DomainError("analytic_spectrum: n must be non-negative");
  if (std::abs(sys.azimuthal) > sys.ell) {
    throw DomainError("analytic_spectrum_bfield: |mu_az| exceeds ell");
  }
  const double ls = lambda_star(System{sys});
  return ls * ls * (2.0 * n + sys.ell + 1.5) - paramagnetic_shift(sys);
}

double analytic_spectrum(const System& sys, int n) {
  if (const auto* e = std::get_if<EFieldSystem>(&sys)) return analytic_spectrum_efield(*e, n);
  return analytic_spectrum_bfield(std::get<BFieldSystem>(sys), n);
}

double fixed_scale_spectrum(const System& sys, int n) {
  validate(sys);
  if (n < 0) throw DomainError("fixed_scale_spectrum: n must be non-negative");
  const double omega = std::visit([](const auto& s) { return s.omega; }, sys);
  return omega * omega * (2.0 * n + ell_of(sys) + 1.5) - paramagnetic_shift(sys);
}

double larmor_frequency(double elementary_charge, double field, double light_speed) {
  if (!(light_speed > 0.0)) throw DomainError("larmor_frequency: c must be positive");
  return elementary_charge * field / (2.0 * light_speed);
}

double larmor_level(double omega, double elementary_charge, double field, double light_speed,
                    int ell, int azimuthal, int n) {
  const BFieldSystem sys{omega, -elementary_charge, field, light_speed, ell, azimuthal};
  const double ls = lambda_star(System{sys});
  return ls * ls * (2.0 * n + ell + 1.5) +
         azimuthal * larmor_frequency(elementary_charge, field, light_speed);
}

std::vector<ConvergenceRow> convergence_study(const System& sys, double lambda, int levels,
                                              std::vector<int> basis_sizes) {
  std::sort(basis_sizes.begin(), basis_sizes.end());
  std::vector<ConvergenceRow> rows;
  rows.reserve(basis_sizes.size());
  for (int n : basis_sizes) {
    if (n < levels) {
      throw DomainError("convergence_study: basis size " + std::to_string(n) +
                        " smaller than level count " + std::to_string(levels));
    }
    rows.push_back({n, solve(sys, lambda, n, levels).energies});
  }
  return rows;
}

}  // namespace tra
