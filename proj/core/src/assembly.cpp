#include "tra/assembly.hpp"

#include <cmath>
#include <string>

#include "tra/errors.hpp"
#include "tra/quadrature.hpp"
#include "tra/specfun.hpp"

namespace tra {

SymTridiagonal hamiltonian_matrix(const System& sys, double lambda, int basis_size) {
  if (basis_size < 1) throw DomainError("hamiltonian_matrix: basis size must be at least 1");
  const Coupling cp = coupling(sys, lambda);
  const double nu = ell_of(sys) + 0.5;
  const double scale = 2.0 * lambda * lambda;
  const double shift = paramagnetic_shift(sys);

  std::vector<double> diag(basis_size), sub(basis_size - 1);
  for (int n = 0; n < basis_size; ++n) {
    diag[n] = scale * (0.5 + cp.xi) * (2.0 * n + nu + 1.0) - shift;
  }
  for (int n = 0; n + 1 < basis_size; ++n) {
    sub[n] = cp.xi == 0.0 ? 0.0 : -scale * cp.xi * std::sqrt((n + 1.0) * (n + nu + 1.0));
  }
  return SymTridiagonal(std::move(diag), std::move(sub));
}

int min_quadrature_order(int m, int n) { return m + n + 4; }

double matrix_element_quadrature(const System& sys, double lambda, int m, int n, int order) {
  if (m < 0 || n < 0) throw DomainError("matrix_element_quadrature: indices must be non-negative");
  const int needed = min_quadrature_order(m, n);
  if (order == 0) order = needed;
  if (order < needed) {
    throw DomainError("matrix_element_quadrature: order " + std::to_string(order) +
                      " too small for (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) +
                      "); need at least " + std::to_string(needed));
  }
  const Coupling cp = coupling(sys, lambda);
  const BasisParams basis(lambda, ell_of(sys));
  const double nu = basis.nu();
  const double l2 = lambda * lambda;
  const double shift = paramagnetic_shift(sys);

  const QuadratureRule rule = gauss_laguerre(order, nu);
  const double integral = rule.integrate([&](double y) {
    const double bracket =
        0.5 * (2.0 * n + nu + 1.0) - 0.25 * y + (cp.eta * y - shift) / (2.0 * l2);
    return bracket * laguerre(n, nu, y) * laguerre(m, nu, y);
  });
  const double prefactor = normalization(basis, n) * normalization(basis, m) / (2.0 * lambda);
  return 2.0 * l2 * prefactor * integral;
}

}  // namespace tra
