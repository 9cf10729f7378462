#pragma once

#include <cstddef>
#include <vector>

namespace tra {

/// Real symmetric tridiagonal matrix stored as its diagonal and first
/// sub-diagonal. The super-diagonal is implied by symmetry.
class SymTridiagonal {
 public:
  SymTridiagonal() = default;
  /// Throws DomainError unless sub.size() + 1 == diag.size() and all entries are finite.
  SymTridiagonal(std::vector<double> diag, std::vector<double> sub);

  std::size_t size() const { return diag_.size(); }
  const std::vector<double>& diag() const { return diag_; }
  const std::vector<double>& sub() const { return sub_; }

  /// Maximum absolute row sum (the infinity norm).
  double norm() const;
  /// True when every sub-diagonal entry is exactly zero.
  bool is_diagonal() const;
  /// Leading n x n principal block.
  SymTridiagonal leading(std::size_t n) const;
  /// y = T x.
  std::vector<double> multiply(const std::vector<double>& x) const;

 private:
  std::vector<double> diag_;
  std::vector<double> sub_;
};

}  // namespace tra
