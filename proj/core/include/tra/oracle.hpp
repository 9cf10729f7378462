#pragma once

#include <functional>

#include "tra/eigensolve.hpp"

namespace tra {

/// Uniform grid r_i = i h, i = 1..M, h = r_max / (M + 1), with Dirichlet
/// conditions u(0) = u(r_max) = 0.
struct RadialGrid {
  double r_max = 0.0;
  int points = 0;  // M, interior points

  double spacing() const { return r_max / (points + 1); }
};

struct FdSpectrum {
  Spectrum spectrum;
  /// |u_0| at the last interior point relative to max |u_0| for the ground state.
  double boundary_amplitude = 0.0;
  /// Set when boundary_amplitude > 1e-8, i.e. r_max is too small.
  bool boundary_warning = false;
};

using RadialPotential = std::function<double(double)>;

/// Lowest k eigenvalues of the 3-point central-difference discretisation of
///   -1/2 u'' + [ell (ell + 1) / (2 r^2) + V(r)] u = E u
/// on the grid. Truncation error is O(h^2). Requires 1 <= k <= M.
FdSpectrum fd_spectrum(const RadialPotential& potential, int ell, const RadialGrid& grid, int k);

/// Omega (2n + ell + 3/2) for V = 1/2 Omega^2 r^2, with Omega = sqrt(omega_squared) > 0.
double quadratic_spectrum(double omega_squared, int ell, int n);

/// Eight times the classical turning point of level k-1 of 1/2 Omega^2 r^2.
double default_r_max(double omega_squared, int ell, int k);

}  // namespace tra
