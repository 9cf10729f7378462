#include "tra/quadrature.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "tra/eigensolve.hpp"
#include "tra/errors.hpp"
#include "tra/specfun.hpp"

namespace tra {
namespace {

// L_n and L_{n-1} at y, both multiplied by 2^{-scale}.
struct ScaledPair {
  double top;
  double below;
  int scale;
};

ScaledPair laguerre_top_pair(int n, double nu, double y) {
  double prev = 1.0;
  double curr = nu + 1.0 - y;
  int scale = 0;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + nu + 1.0 - y) * curr - (k + nu) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
    if (std::fabs(curr) > 0x1p500) {
      curr = std::ldexp(curr, -500);
      prev = std::ldexp(prev, -500);
      scale += 500;
    }
  }
  return {curr, prev, scale};
}

}  // namespace

QuadratureRule gauss_laguerre(int order, double nu) {
  if (order < 1) throw DomainError("gauss_laguerre: order must be at least 1");
  if (!(nu > -1.0)) throw DomainError("gauss_laguerre: nu must exceed -1");

  QuadratureRule rule;
  rule.order = order;
  rule.nu = nu;

  if (order == 1) {
    rule.nodes = {nu + 1.0};
    rule.weights = {std::exp(std::lgamma(nu + 1.0))};
    return rule;
  }

  std::vector<double> diag(order), sub(order - 1);
  for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + nu + 1.0;
  for (int k = 0; k + 1 < order; ++k) sub[k] = std::sqrt((k + 1.0) * (k + 1.0 + nu));
  const Spectrum guess = eigenvalues(SymTridiagonal(std::move(diag), std::move(sub)),
                                     static_cast<std::size_t>(order));

  const double n = order;
  const double log_norm = log_gamma_ratio(n + nu + 1.0, n + 1.0);
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double y = guess.energies[i];
    // Newton on L_N. Rounding in the recurrence leaves a few ulps of jitter,
    // so the iteration stops once the step no longer shrinks.
    bool settled = false;
    double last_step = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 30; ++iter) {
      const ScaledPair p = laguerre_top_pair(order, nu, y);
      // y L' = n L_n - (n + nu) L_{n-1}; Newton step is L / L'.
      const double y_deriv = n * p.top - (n + nu) * p.below;
      const double step = y * p.top / y_deriv;
      if (std::fabs(step) >= 0.5 * std::fabs(last_step) &&
          std::fabs(step) <= 1e-13 * y) {
        settled = true;
        break;
      }
      y -= step;
      last_step = step;
      if (std::fabs(step) <= 2.0 * std::numeric_limits<double>::epsilon() * y) {
        settled = true;
        break;
      }
    }
    if (!settled || !(y > 0.0)) {
      std::ostringstream msg;
      msg << "gauss_laguerre: node " << i << " of order " << order << " (nu=" << nu
          << ") did not converge; last iterate " << y;
      throw ConvergenceError(msg.str());
    }
    const ScaledPair p = laguerre_top_pair(order, nu, y);
    const double y_deriv = n * p.top - (n + nu) * p.below;  // scaled by 2^{-scale}
    // w = Gamma(n+nu+1)/n! * y / (y L')^2
    const double log_w = log_norm + std::log(y) - 2.0 * std::log(std::fabs(y_deriv)) -
                         2.0 * p.scale * std::log(2.0);
    rule.nodes[i] = y;
    rule.weights[i] = std::exp(log_w);
  }
  for (int i = 1; i < order; ++i) {
    if (!(rule.nodes[i] > rule.nodes[i - 1])) {
      throw ConvergenceError("gauss_laguerre: polished nodes are not strictly increasing");
    }
  }
  return rule;
}

}  // namespace tra
