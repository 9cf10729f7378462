#pragma once

#include "tra/basis.hpp"
#include "tra/sym_tridiagonal.hpp"
#include "tra/systems.hpp"

namespace tra {

/// Truncated N x N matrix of the Hamiltonian in the Laguerre basis at scale lambda:
///   H_nn      = 2 lambda^2 (1/2 + xi)(2n + nu + 1) - shift
///   H_n,n+1   = -2 lambda^2 xi sqrt((n + 1)(n + nu + 1))
/// where shift is the paramagnetic term (zero for the electric field). The
/// energy does not appear in the matrix; the spectrum is its eigenvalues.
/// At lambda = lambda_star(sys) the matrix is exactly diagonal.
SymTridiagonal hamiltonian_matrix(const System& sys, double lambda, int basis_size);

/// Smallest quadrature order accepted by matrix_element_quadrature for (m, n).
int min_quadrature_order(int m, int n);

/// <phi_m| H |phi_n> by Gauss-Laguerre quadrature of the reduced integrand
///   2 lambda^2 * A_n A_m / (2 lambda) int y^nu e^{-y}
///     [ (2n + nu + 1)/2 - y/4 + (eta y - shift) / (2 lambda^2) ] L_n L_m dy.
/// The bracket is what the kinetic and centrifugal terms leave after the
/// Laguerre differential equation has been applied with the tridiagonal
/// exponents. The potential enters only through eta, not through xi.
///
/// order = 0 selects min_quadrature_order(m, n); smaller explicit orders throw
/// DomainError.
double matrix_element_quadrature(const System& sys, double lambda, int m, int n, int order = 0);

}  // namespace tra
