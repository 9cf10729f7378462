#pragma once

#include <stdexcept>
#include <string>

namespace tra {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Field parameters for which the radial potential is not confining.
class NonConfiningError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The coupling xi vanishes, so the energy recursion carries no information
// beyond the (already diagonal) matrix.
class DegenerateCouplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative procedure failed to reach its accuracy target.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tra
