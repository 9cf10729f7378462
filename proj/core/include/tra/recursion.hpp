#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tra/systems.hpp"

namespace tra {

/// Coefficients of a symmetric three-term recursion
///   x P_n = a_n P_n + b_{n-1} P_{n-1} + b_n P_{n+1},   P_{-1} = 0, P_0 = 1,
/// in a spectral variable x = energy_scale * E. Generic families use
/// energy_scale = 1 so that x is the argument itself.
struct RecursionCoeffs {
  std::function<double(int)> diagonal;  // a_n
  std::function<double(int)> coupling;  // b_n, must be positive
  double energy_scale = 1.0;
  std::string description;

  double spectral_variable(double energy) const { return energy_scale * energy; }
};

/// P_0 .. P_N evaluated at one energy.
struct PolySequence {
  std::vector<double> values;
  double energy = 0.0;    // argument passed by the caller
  double spectral = 0.0;  // x = energy_scale * energy
};

/// Forward recursion from P_0 = 1 up to P_{n_max}. Throws DomainError if some
/// b_n <= 0 is met (the recursion cannot advance).
PolySequence run_three_term(const RecursionCoeffs& coeffs, double energy, int n_max);

/// Minimal (decaying) solution of the same recursion for indices 0..n_max,
/// normalised to P_0 = 1, by Miller's backward algorithm. The starting index
/// is pushed out until the returned values stop changing.
///
/// At an eigenvalue of the infinite problem this is the same sequence as the
/// forward one in exact arithmetic, but it stays accurate where the forward
/// recursion picks up the growing solution.
PolySequence minimal_solution(const RecursionCoeffs& coeffs, double energy, int n_max);

/// max_{n < N} |x P_n - a_n P_n - b_{n-1} P_{n-1} - b_n P_{n+1}| / max(1, max |P|).
double recursion_residual(const RecursionCoeffs& coeffs, const PolySequence& seq);

/// Energy recursion of the electric-field oscillator at basis scale lambda:
///   (1/xi)[(1/2 + xi)(2n + nu + 1) - E/(2 lambda^2)] P_n
///       = sqrt(n (n + nu)) P_{n-1} + sqrt((n + 1)(n + nu + 1)) P_{n+1}
/// mapped onto the generic form with x = -E / (2 lambda^2 xi),
/// a_n = -(1/2 + xi)(2n + nu + 1) / xi and b_n = sqrt((n + 1)(n + nu + 1)).
/// Throws DegenerateCouplingError when xi = 0.
RecursionCoeffs efield_coeffs(const EFieldSystem& sys, double lambda);

/// Magnetic-field counterpart; the paramagnetic term q B mu_az / (4 lambda^2 c)
/// is folded into a_n, so the spectral map stays x = -E / (2 lambda^2 xi_1).
RecursionCoeffs bfield_coeffs(const BFieldSystem& sys, double lambda);

RecursionCoeffs energy_coeffs(const System& sys, double lambda);

/// Orthonormal hyperbolic Meixner-Pollaczek recursion in x = 2 i y sinh(theta):
///   a_n = -2 (n + mu) cosh(theta),  b_n = sqrt((n + 1)(n + 2 mu)).
RecursionCoeffs meixner_pollaczek_coeffs(double mu, double theta);

enum class MPRecurrenceForm {
  standard,  // upper coupling sqrt((n + 1)(n + 2 mu))
  printed,   // upper coupling sqrt((n + 1)(n + nu + 1)) with nu supplied separately
};

/// Residual of the hyperbolic Meixner-Pollaczek recurrence at degree n,
/// evaluated on the closed-form values f_{n-1}, f_n, f_{n+1}. The printed form
/// only coincides with the standard one when nu + 1 = 2 mu.
std::complex<double> mp_recurrence_residual(int n, double mu, std::complex<double> y, double theta,
                                            MPRecurrenceForm form, double nu);

struct MPParams {
  double mu = 0.0;          // (ell + 3/2) / 2
  double theta = 0.0;       // arccosh((1/2 + xi)/xi)
  double cosh_theta = 1.0;  // (1/2 + xi)/xi at the lambda in use
  /// Closed expression quoted without reference to lambda: omega^4/(2 q zeta)
  /// for the electric field, 4 omega^4 c^2/(q^2 B^2) for the magnetic field.
  /// Empty when the field term vanishes.
  std::optional<double> fixed_cosh_theta;
  /// Constant part of a_n beyond -2 (n + mu) cosh(theta): the paramagnetic
  /// term q B mu_az / (4 lambda^2 c xi_1) for the magnetic field, else 0.
  double spectral_offset = 0.0;
};

/// Matches the energy recursion to the hyperbolic Meixner-Pollaczek family.
/// Throws DegenerateCouplingError for xi = 0 and DomainError when
/// (1/2 + xi)/xi < 1 (no real hyperbolic angle).
MPParams match_meixner_pollaczek(const EFieldSystem& sys, double lambda);
MPParams match_meixner_pollaczek(const BFieldSystem& sys, double lambda);
MPParams match_meixner_pollaczek(const System& sys, double lambda);

/// Meixner-Pollaczek argument y for spectral variable x:
///   x - spectral_offset = 2 i y sinh(theta).
std::complex<double> meixner_pollaczek_argument(const MPParams& mp, double spectral);

enum class ExpansionMethod {
  minimal,  // Miller backward recursion (default)
  forward,  // literal forward recursion from P_0 = 1
};

struct WavefunctionOptions {
  ExpansionMethod method = ExpansionMethod::minimal;
  /// Overall factor sqrt(rho(E)). Unweighted (factor 1) when empty.
  std::optional<double> weight;
};

/// Expansion coefficients P_0 .. P_{n_terms-1}(E) of the state in the basis at
/// scale lambda. n_terms = 1 is allowed for xi = 0 and yields {1}; larger
/// counts with xi = 0 throw DegenerateCouplingError.
std::vector<double> expansion_coefficients(const System& sys, double lambda, double energy,
                                           int n_terms,
                                           ExpansionMethod method = ExpansionMethod::minimal);

/// Partial sums S_K = weight * sum_{n<K} P_n phi_n(r), K = 1 .. coeffs.size().
std::vector<double> wavefunction_partial_sums(const System& sys, double lambda,
                                              const std::vector<double>& coeffs, double r,
                                              std::optional<double> weight = std::nullopt);

/// psi(r) = weight * sum_{n < n_terms} P_n(E) phi_n(r).
double wavefunction_eval(const System& sys, double lambda, double energy, double r, int n_terms,
                         const WavefunctionOptions& options = {});

}  // namespace tra
