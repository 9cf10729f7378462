#pragma once

#include <vector>

#include "tra/eigensolve.hpp"
#include "tra/systems.hpp"

namespace tra {

/// k lowest eigenvalues of hamiltonian_matrix(sys, lambda, basis_size).
Spectrum solve(const System& sys, double lambda, int basis_size, int levels);

/// lambda*^2 (2n + nu + 1): the exact level of the oscillator with the field
/// folded into its frequency. Equals omega^2 (2n + nu + 1) when q zeta = 0.
double analytic_spectrum_efield(const EFieldSystem& sys, int n);

/// lambda*^2 (2n + nu + 1) - q B mu_az / (2c). Throws DomainError if |mu_az| > ell.
double analytic_spectrum_bfield(const BFieldSystem& sys, int n);

double analytic_spectrum(const System& sys, int n);

/// The level with the oscillator scale held at lambda^2 = omega^2, i.e. with
/// the field-induced change of frequency ignored:
///   omega^2 (2n + nu + 1)                    (electric field)
///   omega^2 (2n + nu + 1) - q B mu_az / (2c) (magnetic field)
/// Reported next to the exact level so the difference stays visible.
double fixed_scale_spectrum(const System& sys, int n);

/// Larmor angular frequency e B / (2 m c) with m = 1.
double larmor_frequency(double elementary_charge, double field, double light_speed);

/// Level written in Larmor form for charge q = -e:
///   lambda*^2 (2n + nu + 1) + mu_az * omega_L   (hbar = 1)
double larmor_level(double omega, double elementary_charge, double field, double light_speed,
                    int ell, int azimuthal, int n);

struct ConvergenceRow {
  int basis_size = 0;
  std::vector<double> energies;  // E_0 .. E_{k-1}
};

/// Lowest k eigenvalues for each basis size, rows sorted by basis size.
/// Requires every basis size >= k.
std::vector<ConvergenceRow> convergence_study(const System& sys, double lambda, int levels,
                                              std::vector<int> basis_sizes);

}  // namespace tra
