#include "tra/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tra/errors.hpp"

namespace tra {

FdSpectrum fd_spectrum(const RadialPotential& potential, int ell, const RadialGrid& grid, int k) {
  if (ell < 0) throw DomainError("fd_spectrum: ell must be non-negative");
  if (!(grid.r_max > 0.0)) throw DomainError("fd_spectrum: r_max must be positive");
  if (grid.points < 2) throw DomainError("fd_spectrum: need at least two interior points");
  if (k < 1 || k > grid.points) throw DomainError("fd_spectrum: level count out of range");

  const int m = grid.points;
  const double h = grid.spacing();
  const double kinetic = 1.0 / (h * h);
  const double centrifugal = 0.5 * ell * (ell + 1.0);
  std::vector<double> diag(m), sub(m - 1, -0.5 * kinetic);
  for (int i = 0; i < m; ++i) {
    const double r = (i + 1) * h;
    diag[i] = kinetic + centrifugal / (r * r) + potential(r);
  }
  const SymTridiagonal t(std::move(diag), std::move(sub));

  FdSpectrum out;
  out.spectrum = eigenvalues(t, static_cast<std::size_t>(k));
  const std::vector<double> ground = eigenvector(t, out.spectrum.energies.front());
  double peak = 0.0;
  for (double v : ground) peak = std::max(peak, std::fabs(v));
  out.boundary_amplitude = std::fabs(ground.back()) / peak;
  out.boundary_warning = out.boundary_amplitude > 1e-8;
  return out;
}

double quadratic_spectrum(double omega_squared, int ell, int n) {
  if (!(omega_squared > 0.0)) throw DomainError("quadratic_spectrum: Omega^2 must be positive");
  if (ell < 0 || n < 0) throw DomainError("quadratic_spectrum: ell and n must be non-negative");
  return std::sqrt(omega_squared) * (2.0 * n + ell + 1.5);
}

double default_r_max(double omega_squared, int ell, int k) {
  const double energy = quadratic_spectrum(omega_squared, ell, std::max(k, 1) - 1);
  return 8.0 * std::sqrt(2.0 * energy / omega_squared);
}

}  // namespace tra
