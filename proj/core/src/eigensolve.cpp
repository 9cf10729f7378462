#include "tra/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tra/errors.hpp"

namespace tra {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Smallest pivot magnitude allowed in the Sturm recurrence.
double pivot_floor(const SymTridiagonal& t) {
  double largest = 1.0;
  for (double s : t.sub()) largest = std::max(largest, s * s);
  return std::numeric_limits<double>::min() * largest;
}

std::size_t count_below(const SymTridiagonal& t, double x, double pivmin) {
  const auto& d = t.diag();
  const auto& e = t.sub();
  std::size_t negatives = 0;
  double q = d[0] - x;
  if (std::fabs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++negatives;
  for (std::size_t i = 1; i < d.size(); ++i) {
    q = d[i] - x - (e[i - 1] * e[i - 1]) / q;
    if (std::fabs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++negatives;
  }
  return negatives;
}

// Gershgorin enclosure of the whole spectrum.
std::pair<double, double> gershgorin(const SymTridiagonal& t) {
  const auto& d = t.diag();
  const auto& e = t.sub();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::fabs(e[i - 1]);
    if (i < e.size()) radius += std::fabs(e[i]);
    lo = std::min(lo, d[i] - radius);
    hi = std::max(hi, d[i] + radius);
  }
  const double pad = 2.0 * kEps * std::max(std::fabs(lo), std::fabs(hi)) + 1e-300;
  return {lo - pad, hi + pad};
}

}  // namespace

std::size_t sturm_count(const SymTridiagonal& t, double x) {
  return count_below(t, x, pivot_floor(t));
}

Spectrum eigenvalues(const SymTridiagonal& t, std::size_t k) {
  const std::size_t n = t.size();
  if (k < 1 || k > n) {
    throw DomainError("eigenvalues: requested " + std::to_string(k) + " values from a " +
                      std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  Spectrum out;
  out.basis_size = n;
  out.energies.reserve(k);

  if (t.is_diagonal()) {
    std::vector<double> d = t.diag();
    std::sort(d.begin(), d.end());
    out.energies.assign(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
  }

  const double pivmin = pivot_floor(t);
  const auto [global_lo, global_hi] = gershgorin(t);
  double lower_start = global_lo;
  for (std::size_t j = 0; j < k; ++j) {
    // Eigenvalue j (0-based) is the smallest x with count_below(x) > j.
    double lo = lower_start;
    double hi = global_hi;
    for (int iter = 0; iter < 4096; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (hi - lo <= 2.0 * kEps * std::max(std::fabs(lo), std::fabs(hi)) + pivmin) break;
      if (count_below(t, mid, pivmin) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    const double value = 0.5 * (lo + hi);
    out.energies.push_back(value);
    lower_start = lo;
  }
  return out;
}

std::vector<double> eigenvector(const SymTridiagonal& t, double eigenvalue) {
  const std::size_t n = t.size();
  if (n == 1) return {1.0};
  const auto& d = t.diag();
  const auto& e = t.sub();
  const double tiny = kEps * std::max(t.norm(), std::numeric_limits<double>::min());

  // LU of (T - sigma I) with partial pivoting; U has up to two super-diagonals.
  std::vector<double> u0(n), u1(n, 0.0), u2(n, 0.0), mult(n, 0.0);
  std::vector<char> swapped(n, 0);
  {
    double a = d[0] - eigenvalue;
    double b = e[0];
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double c = e[i];                 // sub-diagonal below the pivot
      const double dn = d[i + 1] - eigenvalue;
      const double en = i + 1 < n - 1 ? e[i + 1] : 0.0;
      if (std::fabs(a) >= std::fabs(c)) {
        if (a == 0.0) a = tiny;
        mult[i] = c / a;
        u0[i] = a;
        u1[i] = b;
        u2[i] = 0.0;
        a = dn - mult[i] * b;
        b = en;
      } else {
        swapped[i] = 1;
        mult[i] = a / c;
        u0[i] = c;
        u1[i] = dn;
        u2[i] = en;
        a = b - mult[i] * dn;
        b = -mult[i] * en;
      }
    }
    u0[n - 1] = a == 0.0 ? tiny : a;
  }
  for (auto& p : u0) {
    if (std::fabs(p) < tiny) p = std::copysign(tiny, p == 0.0 ? 1.0 : p);
  }

  std::vector<double> x(n, 1.0);
  auto solve = [&](std::vector<double>& rhs) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(rhs[i], rhs[i + 1]);
      rhs[i + 1] -= mult[i] * rhs[i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double acc = rhs[ii];
      if (ii + 1 < n) acc -= u1[ii] * rhs[ii + 1];
      if (ii + 2 < n) acc -= u2[ii] * rhs[ii + 2];
      rhs[ii] = acc / u0[ii];
    }
  };
  auto normalize = [](std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    s = std::sqrt(s);
    for (double& c : v) c /= s;
  };
  for (int iter = 0; iter < 4; ++iter) {
    solve(x);
    normalize(x);
  }
  const auto biggest = std::max_element(x.begin(), x.end(),
                                        [](double a, double b) { return std::fabs(a) < std::fabs(b); });
  if (*biggest < 0.0) {
    for (double& c : x) c = -c;
  }
  return x;
}

}  // namespace tra
