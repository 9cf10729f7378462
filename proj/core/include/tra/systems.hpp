#pragma once

#include <string>
#include <variant>

namespace tra {

// Units: hbar = m = 1. The bare oscillator potential is (1/2) omega^4 r^2, so
// omega^2 plays the role of the oscillator angular frequency.

/// Spherical oscillator in an electric field, radial potential
///   V(r) = (1/2 omega^4 + q zeta) r^2.
struct EFieldSystem {
  double omega = 1.0;
  double charge = 1.0;  // q
  double field = 0.0;   // zeta >= 0
  int ell = 0;
};

/// Spherical oscillator in a uniform magnetic field along z, orbital state
/// with L_z eigenvalue `azimuthal`. The diamagnetic term is taken in the
/// isotropic form q^2 B^2 r^2 / (4 c^2):
///   V(r) = (1/2 omega^4 + q^2 B^2 / (4 c^2)) r^2 - q B mu_az / (2 c).
struct BFieldSystem {
  double omega = 1.0;
  double charge = 1.0;       // q
  double field = 0.0;        // B >= 0
  double light_speed = 1.0;  // c > 0
  int ell = 0;
  int azimuthal = 0;  // mu_az, |mu_az| <= ell
};

using System = std::variant<EFieldSystem, BFieldSystem>;

/// Throws DomainError for out-of-range parameters and NonConfiningError when
/// the r^2 coefficient is not positive.
void validate(const EFieldSystem& sys);
void validate(const BFieldSystem& sys);
void validate(const System& sys);

int ell_of(const System& sys);
std::string describe(const System& sys);

/// Coefficient kappa of r^2 in the radial potential.
double quadratic_coefficient(const System& sys);

/// Dimensionless coupling and linear-in-y potential coefficient at basis scale lambda:
///   xi  = kappa / (2 lambda^4) - 1/4
///   eta = kappa / lambda^2 = 2 lambda^2 (xi + 1/4)
struct Coupling {
  double xi = 0.0;
  double eta = 0.0;
  double lambda = 1.0;

  /// |xi| at or below this is treated as an exact zero; lambda_star is
  /// computed in floating point and lands within a few ulps of xi = 0.
  static constexpr double kZeroTolerance = 1e-14;
  bool is_degenerate() const { return xi == 0.0; }
};

/// xi = omega^4/(4 lambda^4) + q zeta/(2 lambda^4) - 1/4.
double xi_efield(const EFieldSystem& sys, double lambda);
/// xi_1 = omega^4/(4 lambda^4) + q^2 B^2/(8 lambda^4 c^2) - 1/4.
double xi_bfield(const BFieldSystem& sys, double lambda);

/// Coupling at lambda, with |xi| <= Coupling::kZeroTolerance snapped to 0.
Coupling coupling(const System& sys, double lambda);

/// Basis scale that makes xi vanish: (2 kappa)^{1/4}.
/// E-field: (omega^4 + 2 q zeta)^{1/4}; B-field: (omega^4 + q^2 B^2 / (2 c^2))^{1/4}.
double lambda_star(const System& sys);

/// q B mu_az / (2 c); enters the Hamiltonian diagonal with a minus sign.
double paramagnetic_shift(const BFieldSystem& sys);
/// Zero for the electric-field system.
double paramagnetic_shift(const System& sys);

}  // namespace tra
