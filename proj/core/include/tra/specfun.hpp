#pragma once

// Special functions used by the Laguerre-basis solver.
//
// Conventions: L_n^nu(y) is the generalized Laguerre polynomial normalised so
// that L_n^nu(0) = binom(n + nu, n). Every function here is pure and
// thread-safe.

#include <complex>
#include <vector>

namespace tra {

/// L_n^nu(y) by the upward three-term recurrence
///   (n+1) L_{n+1} = (2n + nu + 1 - y) L_n - (n + nu) L_{n-1}.
/// Requires n >= 0, nu > -1 and y >= 0.
double laguerre(int n, double nu, double y);

/// L_0^nu(y), ..., L_n^nu(y) from a single recurrence sweep.
std::vector<double> laguerre_sequence(int n, double nu, double y);

/// L_n^nu(y) as binom(n+nu, n) * 1F1(-n; nu+1; y).
///
/// The terminating series alternates in sign and cancels badly once y is
/// comparable to n, so the terms are accumulated as pairs of quad numbers. Intended
/// as an independent check of laguerre(), not as the production path.
double laguerre_via_1f1(int n, double nu, double y);

/// y * dL_n^nu/dy = n L_n^nu(y) - (n + nu) L_{n-1}^nu(y), with L_{-1} = 0.
double laguerre_derivative_action(int n, double nu, double y);

/// Residual of [y d^2/dy^2 + (nu + 1 - y) d/dy + n] L_n^nu(y).
///
/// Both derivatives come from the lowering identity above (differentiated once
/// more for the second derivative), so a vanishing residual ties the
/// differential equation to the recurrence. Requires y > 0.
double verify_laguerre_ode(int n, double nu, double y);

/// ln Gamma(a) - ln Gamma(b) for a, b > 0, without forming either gamma.
double log_gamma_ratio(double a, double b);

/// Terminating Gauss series 2F1(-n, b; c; z) = sum_k (-n)_k (b)_k / ((c)_k k!) z^k,
/// accumulated in quad precision.
std::complex<double> hypergeometric_2f1_terminating(int n, std::complex<double> b,
                                                    double c, double z);

/// Orthonormal Meixner-Pollaczek polynomial in the hyperbolic parametrisation.
///
/// Returns f_n with f_0 = 1 satisfying
///   [2 i y sinh(theta) + 2 (n + mu) cosh(theta)] f_n
///       = sqrt(n (n + 2 mu - 1)) f_{n-1} + sqrt((n + 1)(n + 2 mu)) f_{n+1}.
/// Closed form: sqrt((2mu)_n / n!) e^{n theta} 2F1(-n, mu - i y; 2mu; 1 - e^{-2 theta}),
/// equivalently (Pfaff) sqrt((2mu)_n / n!) e^{-n theta} 2F1(-n, mu + i y; 2mu; 1 - e^{2 theta}).
/// Whichever of the two sums cancels less is evaluated. The result is real
/// whenever mu + i y is real. Requires mu > 0 and theta > 0.
std::complex<double> meixner_pollaczek(int n, double mu, std::complex<double> y, double theta);

/// Closed form exactly as it is usually printed for the hyperbolic case,
///   sqrt((2mu)_n / n!) e^{-n theta} 2F1(-n, mu + i y; 2mu; 1 - e^{-2 theta}).
/// This does NOT satisfy the recurrence above; it is kept so the test suite
/// can measure by how much.
std::complex<double> meixner_pollaczek_printed(int n, double mu, std::complex<double> y,
                                               double theta);

}  // namespace tra
