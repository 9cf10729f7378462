#include "tra/sym_tridiagonal.hpp"

#include <algorithm>
#include <cmath>

#include "tra/errors.hpp"

namespace tra {

SymTridiagonal::SymTridiagonal(std::vector<double> diag, std::vector<double> sub)
    : diag_(std::move(diag)), sub_(std::move(sub)) {
  if (diag_.empty()) throw DomainError("SymTridiagonal: matrix must have at least one row");
  if (sub_.size() + 1 != diag_.size()) {
    throw DomainError("SymTridiagonal: sub-diagonal length must be one less than the diagonal");
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(diag_.begin(), diag_.end(), finite) ||
      !std::all_of(sub_.begin(), sub_.end(), finite)) {
    throw DomainError("SymTridiagonal: entries must be finite");
  }
}

double SymTridiagonal::norm() const {
  double best = 0.0;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::fabs(diag_[i]);
    if (i > 0) row += std::fabs(sub_[i - 1]);
    if (i + 1 < n) row += std::fabs(sub_[i]);
    best = std::max(best, row);
  }
  return best;
}

bool SymTridiagonal::is_diagonal() const {
  return std::all_of(sub_.begin(), sub_.end(), [](double v) { return v == 0.0; });
}

SymTridiagonal SymTridiagonal::leading(std::size_t n) const {
  if (n == 0 || n > size()) throw DomainError("SymTridiagonal::leading: block size out of range");
  return SymTridiagonal(std::vector<double>(diag_.begin(), diag_.begin() + n),
                        std::vector<double>(sub_.begin(), sub_.begin() + (n - 1)));
}

std::vector<double> SymTridiagonal::multiply(const std::vector<double>& x) const {
  const std::size_t n = size();
  if (x.size() != n) throw DomainError("SymTridiagonal::multiply: dimension mismatch");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag_[i] * x[i];
    if (i > 0) acc += sub_[i - 1] * x[i - 1];
    if (i + 1 < n) acc += sub_[i] * x[i + 1];
    y[i] = acc;
  }
  return y;
}

}  // namespace tra
