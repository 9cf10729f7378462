#pragma once

#include <vector>

namespace tra {

/// Parameters of the Laguerre basis
///   phi_n(r) = A_n y^alpha e^{-beta y} L_n^nu(y),   y = (lambda r)^2.
///
/// Only lambda and ell are free. The exponents are fixed by requiring the
/// oscillator wave operator to be tridiagonal and symmetric:
///   nu = ell + 1/2,  alpha = nu/2 + 1/4,  beta = 1/2.
/// With these values 2 alpha - 1/2 = nu and 2 beta = 1, so the radial measure
/// dr = dy / (2 lambda sqrt(y)) turns into the Laguerre weight y^nu e^{-y}.
class BasisParams {
 public:
  /// Throws DomainError unless lambda > 0 and ell >= 0.
  BasisParams(double lambda, int ell);

  double lambda() const { return lambda_; }
  int ell() const { return ell_; }
  double nu() const { return ell_ + 0.5; }
  double alpha() const { return 0.5 * nu() + 0.25; }
  static constexpr double beta() { return 0.5; }

 private:
  double lambda_;
  int ell_;
};

struct BasisFunctionSample {
  int n = 0;
  double r = 0.0;
  double value = 0.0;
};

/// y = (lambda r)^2. Throws DomainError for r < 0.
double map_coordinate(const BasisParams& params, double r);

/// A_n = sqrt(2 lambda Gamma(n+1) / Gamma(n+nu+1)), from a log-gamma difference.
double normalization(const BasisParams& params, int n);

/// phi_n(r) for r > 0. The envelope y^alpha e^{-y/2} is formed in log space.
double basis_eval(const BasisParams& params, int n, double r);

/// phi_0(r), ..., phi_{count-1}(r) sharing one Laguerre sweep.
std::vector<double> basis_values(const BasisParams& params, int count, double r);

/// basis_eval over a radial grid.
std::vector<BasisFunctionSample> sample_basis(const BasisParams& params, int n,
                                              const std::vector<double>& radii);

/// int_0^inf phi_n(r) phi_m(r) dr by Gauss-Laguerre quadrature (exact up to rounding).
double overlap(const BasisParams& params, int n, int m);

}  // namespace tra
