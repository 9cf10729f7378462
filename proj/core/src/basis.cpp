#include "tra/basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tra/errors.hpp"
#include "tra/quadrature.hpp"
#include "tra/specfun.hpp"

namespace tra {
namespace {

double log_normalization(const BasisParams& p, int n) {
  return 0.5 * (std::log(2.0 * p.lambda()) - log_gamma_ratio(n + p.nu() + 1.0, n + 1.0));
}

double assemble(double log_envelope, double poly) {
  if (poly == 0.0) return 0.0;
  return std::copysign(std::exp(log_envelope + std::log(std::fabs(poly))), poly);
}

}  // namespace

BasisParams::BasisParams(double lambda, int ell) : lambda_(lambda), ell_(ell) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("BasisParams: lambda must be positive and finite");
  }
  if (ell < 0) throw DomainError("BasisParams: ell must be non-negative, got " + std::to_string(ell));
}

double map_coordinate(const BasisParams& params, double r) {
  if (r < 0.0) throw DomainError("map_coordinate: r must be non-negative");
  const double lr = params.lambda() * r;
  return lr * lr;
}

double normalization(const BasisParams& params, int n) {
  if (n < 0) throw DomainError("normalization: n must be non-negative");
  return std::exp(log_normalization(params, n));
}

double basis_eval(const BasisParams& params, int n, double r) {
  if (n < 0) throw DomainError("basis_eval: n must be non-negative");
  if (!(r > 0.0)) throw DomainError("basis_eval: r must be positive");
  const double y = map_coordinate(params, r);
  const double log_env = log_normalization(params, n) + params.alpha() * std::log(y) -
                         BasisParams::beta() * y;
  return assemble(log_env, laguerre(n, params.nu(), y));
}

std::vector<double> basis_values(const BasisParams& params, int count, double r) {
  if (count < 1) throw DomainError("basis_values: count must be positive");
  if (!(r > 0.0)) throw DomainError("basis_values: r must be positive");
  const double y = map_coordinate(params, r);
  const std::vector<double> l = laguerre_sequence(count - 1, params.nu(), y);
  const double log_env = params.alpha() * std::log(y) - BasisParams::beta() * y;
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    out[n] = assemble(log_normalization(params, n) + log_env, l[n]);
  }
  return out;
}

std::vector<BasisFunctionSample> sample_basis(const BasisParams& params, int n,
                                              const std::vector<double>& radii) {
  std::vector<BasisFunctionSample> out;
  out.reserve(radii.size());
  for (double r : radii) out.push_back({n, r, basis_eval(params, n, r)});
  return out;
}

double overlap(const BasisParams& params, int n, int m) {
  if (n < 0 || m < 0) throw DomainError("overlap: indices must be non-negative");
  // Integrand A_n A_m / (2 lambda) y^nu e^{-y} L_n L_m has polynomial degree n + m.
  const QuadratureRule rule = gauss_laguerre(std::max(n, m) + 1, params.nu());
  const double nu = params.nu();
  const double integral = rule.integrate([&](double y) {
    return laguerre(n, nu, y) * laguerre(m, nu, y);
  });
  return normalization(params, n) * normalization(params, m) / (2.0 * params.lambda()) * integral;
}

}  // namespace tra
