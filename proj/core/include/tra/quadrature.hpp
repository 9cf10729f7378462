#pragma once

#include <vector>

namespace tra {

/// Gauss rule for integrals of the form  int_0^inf y^nu e^{-y} f(y) dy.
struct QuadratureRule {
  int order = 0;
  double nu = 0.0;
  std::vector<double> nodes;    // strictly increasing, positive
  std::vector<double> weights;  // positive, summing to Gamma(nu + 1)

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Generalized Gauss-Laguerre rule of the given order.
///
/// Nodes start as eigenvalues of the Jacobi matrix of the Laguerre recurrence
/// (Golub-Welsch) and are then polished by Newton steps on L_order^nu. Weights
/// use Gamma(N+nu+1) / (N! y_i [dL_N/dy(y_i)]^2), evaluated in log space.
/// Exact for polynomial f of degree <= 2*order - 1.
///
/// Throws DomainError for order < 1 or nu <= -1, ConvergenceError if a node
/// fails to settle.
QuadratureRule gauss_laguerre(int order, double nu);

}  // namespace tra
