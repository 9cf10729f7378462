#include "tra/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tra/errors.hpp"

namespace tra {
namespace {

void check_laguerre_args(int n, double nu) {
  if (n < 0) throw DomainError("laguerre: degree must be non-negative, got " + std::to_string(n));
  if (!(nu > -1.0)) throw DomainError("laguerre: nu must exceed -1, got " + std::to_string(nu));
}

// Stirling tail sum_{k>=1} B_{2k} / (2k (2k-1) x^{2k-1}); x >= 20 keeps the
// truncation error below 1e-22.
long double stirling_tail(long double x) {
  static constexpr long double kCoeff[] = {
      1.0L / 12.0L,        -1.0L / 360.0L,      1.0L / 1260.0L,      -1.0L / 1680.0L,
      1.0L / 1188.0L,      -691.0L / 360360.0L, 1.0L / 156.0L,       -3617.0L / 122400.0L,
  };
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  long double sum = 0.0L;
  long double power = inv;
  for (long double c : kCoeff) {
    sum += c * power;
    power *= inv2;
  }
  return sum;
}

// Running product kept as mantissa * 2^exponent so long shifts cannot overflow.
struct ScaledProduct {
  long double mantissa = 1.0L;
  long exponent = 0;

  void multiply(long double factor) {
    mantissa *= factor;
    int e = 0;
    mantissa = std::frexp(mantissa, &e);
    exponent += e;
  }
  long double log() const {
    return std::log(mantissa) + static_cast<long double>(exponent) * std::log(2.0L);
  }
};

// Unevaluated sum hi + lo of two quad numbers (about 226 significant bits),
// built from error-free transformations.
struct QuadPair {
  using quad = __float128;
  quad hi = 0;
  quad lo = 0;

  QuadPair() = default;
  explicit QuadPair(double v) : hi(v) {}
  QuadPair(quad h, quad l) : hi(h), lo(l) {}

  static QuadPair two_sum(quad a, quad b) {
    const quad s = a + b;
    const quad bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
  }
  static QuadPair fast_two_sum(quad a, quad b) {
    const quad s = a + b;
    return {s, b - (s - a)};
  }
  // Veltkamp split for a 113-bit significand.
  static void split(quad a, quad& high, quad& low) {
    const quad c = (static_cast<quad>(1ULL << 57) + 1) * a;
    high = c - (c - a);
    low = a - high;
  }
  static QuadPair two_prod(quad a, quad b) {
    const quad p = a * b;
    quad ah, al, bh, bl;
    split(a, ah, al);
    split(b, bh, bl);
    return {p, ((ah * bh - p) + ah * bl + al * bh) + al * bl};
  }

  friend QuadPair operator+(QuadPair a, QuadPair b) {
    QuadPair s = two_sum(a.hi, b.hi);
    const QuadPair t = two_sum(a.lo, b.lo);
    s = fast_two_sum(s.hi, s.lo + t.hi);
    return fast_two_sum(s.hi, s.lo + t.lo);
  }
  friend QuadPair operator-(QuadPair a) { return {-a.hi, -a.lo}; }
  friend QuadPair operator*(QuadPair a, QuadPair b) {
    QuadPair p = two_prod(a.hi, b.hi);
    return fast_two_sum(p.hi, p.lo + (a.hi * b.lo + a.lo * b.hi));
  }
  friend QuadPair operator/(QuadPair a, QuadPair b) {
    const quad q1 = a.hi / b.hi;
    const QuadPair r = a + -(b * QuadPair{q1, 0});
    const quad q2 = r.hi / b.hi;
    const QuadPair r2 = r + -(b * QuadPair{q2, 0});
    const quad q3 = r2.hi / b.hi;
    return QuadPair{q1, 0} + QuadPair{q2, 0} + QuadPair{q3, 0};
  }
};

struct SeriesSum {
  std::complex<double> sum;
  double largest_term = 0.0;
};

// Complex terms accumulated in quad precision; the largest term is kept so
// callers can judge the cancellation.
SeriesSum terminating_2f1(int n, std::complex<double> b, double c, double z) {
  using quad = __float128;
  const quad br = b.real();
  const quad bi = b.imag();
  quad tr = 1;
  quad ti = 0;
  quad sr = 1;
  quad si = 0;
  double largest = 1.0;
  for (int k = 0; k < n; ++k) {
    // term *= (k - n)(b + k) z / ((c + k)(k + 1))
    const quad scale = static_cast<quad>(k - n) * static_cast<quad>(z) /
                       ((static_cast<quad>(c) + k) * (k + 1));
    const quad fr = (br + k) * scale;
    const quad fi = bi * scale;
    const quad nr = tr * fr - ti * fi;
    ti = tr * fi + ti * fr;
    tr = nr;
    sr += tr;
    si += ti;
    largest = std::max(largest, std::hypot(static_cast<double>(tr), static_cast<double>(ti)));
  }
  return {{static_cast<double>(sr), static_cast<double>(si)}, largest};
}

// sqrt((2mu)_n / n!) via log-gamma differences.
double mp_prefactor(int n, double mu) {
  return std::exp(0.5 * (log_gamma_ratio(2.0 * mu + n, n + 1.0) - std::lgamma(2.0 * mu)));
}

void check_mp_args(int n, double mu, double theta) {
  if (n < 0) throw DomainError("meixner_pollaczek: degree must be non-negative");
  if (!(mu > 0.0)) throw DomainError("meixner_pollaczek: mu must be positive, got " + std::to_string(mu));
  if (!(theta > 0.0)) throw DomainError("meixner_pollaczek: theta must be positive");
}

}  // namespace

double laguerre(int n, double nu, double y) {
  check_laguerre_args(n, nu);
  if (y < 0.0) throw DomainError("laguerre: y must be non-negative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = nu + 1.0 - y;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + nu + 1.0 - y) * curr - (k + nu) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

std::vector<double> laguerre_sequence(int n, double nu, double y) {
  check_laguerre_args(n, nu);
  if (y < 0.0) throw DomainError("laguerre: y must be non-negative");
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  out[0] = 1.0;
  if (n >= 1) out[1] = nu + 1.0 - y;
  for (int k = 1; k < n; ++k) {
    out[k + 1] = ((2.0 * k + nu + 1.0 - y) * out[k] - (k + nu) * out[k - 1]) / (k + 1.0);
  }
  return out;
}

double laguerre_via_1f1(int n, double nu, double y) {
  check_laguerre_args(n, nu);
  using quad = __float128;
  // binom(n + nu, n) = Gamma(n+nu+1) / (Gamma(n+1) Gamma(nu+1)) as a Pochhammer product.
  quad prefactor = 1;
  for (int j = 1; j <= n; ++j) prefactor *= (static_cast<quad>(nu) + j) / j;

  quad term = 1;
  quad sum = 1;
  quad largest = 1;
  for (int k = 0; k < n; ++k) {
    term *= static_cast<quad>(k - n) * static_cast<quad>(y) /
            ((static_cast<quad>(nu) + 1 + k) * (k + 1));
    sum += term;
    largest = std::max(largest, term < 0 ? -term : term);
  }
  // Rounding in the terms is about n * 2^-112 of the largest one.
  const quad abs_sum = sum < 0 ? -sum : sum;
  if (largest * (n + 1) * static_cast<quad>(1e-33) <= static_cast<quad>(1e-17) * abs_sum) {
    return static_cast<double>(prefactor * sum);
  }

  // Heavy cancellation: Horner in pair arithmetic with the running value kept
  // as num / den, so the only division is the last one.
  const QuadPair yy{y};
  QuadPair num{1.0};
  QuadPair den{1.0};
  for (int k = n - 1; k >= 0; --k) {
    const QuadPair a = QuadPair{static_cast<double>(k - n)} * yy;
    const QuadPair b = (QuadPair{nu} + QuadPair{1.0 + k}) * QuadPair{k + 1.0};
    den = b * den;
    num = den + a * num;
  }
  return static_cast<double>((QuadPair{prefactor, 0} * (num / den)).hi);
}

double laguerre_derivative_action(int n, double nu, double y) {
  check_laguerre_args(n, nu);
  if (n == 0) return 0.0;
  const std::vector<double> l = laguerre_sequence(n, nu, y);
  return n * l[n] - (n + nu) * l[n - 1];
}

double verify_laguerre_ode(int n, double nu, double y) {
  check_laguerre_args(n, nu);
  if (!(y > 0.0)) throw DomainError("verify_laguerre_ode: y must be positive");
  const std::vector<double> l = laguerre_sequence(n, nu, y);
  // D_k = y L_k'. Differentiating y L_n' = n L_n - (n+nu) L_{n-1} once more gives
  // y^2 L_n'' = (n - 1) D_n - (n + nu) D_{n-1}.
  auto d = [&](int k) { return k == 0 ? 0.0 : k * l[k] - (k + nu) * l[k - 1]; };
  const double dn = d(n);
  const double y2_second = (n - 1.0) * dn - (n > 0 ? (n + nu) * d(n - 1) : 0.0);
  return y2_second / y + (nu + 1.0 - y) * dn / y + n * l[n];
}

double log_gamma_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("log_gamma_ratio: arguments must be positive");
  }
  if (a == b) return 0.0;
  long double x = a;
  long double z = b;
  const long double diff = x - z;

  // Integer offset: Gamma(x)/Gamma(z) is a finite product of (z + k).
  if (diff == std::nearbyint(diff) && std::fabs(diff) <= 100000.0L) {
    const long count = static_cast<long>(std::fabs(diff));
    const long double base = diff > 0 ? z : x;
    ScaledProduct p;
    for (long k = 0; k < count; ++k) p.multiply(base + static_cast<long double>(k));
    const long double lg = p.log();
    return static_cast<double>(diff > 0 ? lg : -lg);
  }

  // Shift both arguments above 20 with Gamma(t) = Gamma(t + 1) / t.
  ScaledProduct px;
  ScaledProduct pz;
  while (x < 20.0L) px.multiply(x++);
  while (z < 20.0L) pz.multiply(z++);
  const long double shift = pz.log() - px.log();

  long double core;
  if (x <= 2.0L * z && z <= 2.0L * x) {
    // (x-1/2) ln x - (z-1/2) ln z = (x-z) ln z + (x-1/2) log1p((x-z)/z), with x-z exact.
    const long double d = x - z;
    core = d * std::log(z) + (x - 0.5L) * std::log1p(d / z) - d + stirling_tail(x) -
           stirling_tail(z);
  } else {
    core = std::lgamma(x) - std::lgamma(z);
  }
  return static_cast<double>(core + shift);
}

std::complex<double> hypergeometric_2f1_terminating(int n, std::complex<double> b, double c,
                                                    double z) {
  if (n < 0) throw DomainError("hypergeometric_2f1_terminating: n must be non-negative");
  return terminating_2f1(n, b, c, z).sum;
}

std::complex<double> meixner_pollaczek(int n, double mu, std::complex<double> y, double theta) {
  check_mp_args(n, mu, theta);
  if (n == 0) return {1.0, 0.0};
  const std::complex<double> iy = std::complex<double>(0.0, 1.0) * y;
  // Argument in (0, 1), growing prefactor.
  const SeriesSum inner = terminating_2f1(n, mu - iy, 2.0 * mu, -std::expm1(-2.0 * theta));
  // Argument below 0, decaying prefactor.
  const SeriesSum outer = terminating_2f1(n, mu + iy, 2.0 * mu, -std::expm1(2.0 * theta));
  auto cancellation = [](const SeriesSum& s) {
    const double mag = std::abs(s.sum);
    return mag > 0.0 ? s.largest_term / mag : std::numeric_limits<double>::infinity();
  };
  const double pre = mp_prefactor(n, mu);
  if (cancellation(inner) <= cancellation(outer)) {
    return pre * std::exp(n * theta) * inner.sum;
  }
  return pre * std::exp(-n * theta) * outer.sum;
}

std::complex<double> meixner_pollaczek_printed(int n, double mu, std::complex<double> y,
                                               double theta) {
  check_mp_args(n, mu, theta);
  const std::complex<double> iy = std::complex<double>(0.0, 1.0) * y;
  const SeriesSum s = terminating_2f1(n, mu + iy, 2.0 * mu, -std::expm1(-2.0 * theta));
  return mp_prefactor(n, mu) * std::exp(-n * theta) * s.sum;
}

}  // namespace tra
