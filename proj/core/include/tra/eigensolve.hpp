#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "tra/sym_tridiagonal.hpp"

namespace tra {

/// Lowest part of a discrete spectrum.
struct Spectrum {
  std::vector<double> energies;  // ascending
  std::size_t basis_size = 0;    // N, the matrix dimension
  std::string system;            // free-form descriptor, empty when unknown
  double lambda = std::numeric_limits<double>::quiet_NaN();

  std::size_t count() const { return energies.size(); }
};

/// Number of eigenvalues of t strictly below x (Sturm sequence / LDL^T inertia).
std::size_t sturm_count(const SymTridiagonal& t, double x);

/// The k smallest eigenvalues of t, ascending, by Sturm bisection.
///
/// Each value is bisected until its bracket is one or two ulps wide, well
/// inside the 1e-12 * norm() contract. A matrix whose sub-diagonal is exactly
/// zero is answered by sorting its diagonal. Requires 1 <= k <= t.size().
Spectrum eigenvalues(const SymTridiagonal& t, std::size_t k);

/// Unit eigenvector for a (converged) eigenvalue of t by inverse iteration.
/// Sign is fixed so that the largest-magnitude component is positive.
std::vector<double> eigenvector(const SymTridiagonal& t, double eigenvalue);

}  // namespace tra
