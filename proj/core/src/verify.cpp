#include "tra/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tra/assembly.hpp"
#include "tra/basis.hpp"
#include "tra/eigensolve.hpp"
#include "tra/errors.hpp"
#include "tra/oracle.hpp"
#include "tra/quadrature.hpp"
#include "tra/recursion.hpp"
#include "tra/specfun.hpp"
#include "tra/spectrum.hpp"

namespace tra {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kNus[] = {-0.5, 0.5, 1.5, 3.0};

class Recorder {
 public:
  Recorder(std::string suite, const VerifyOptions& options, std::vector<CheckResult>& out)
      : suite_(std::move(suite)), options_(options), out_(out) {}

  // Implementation-side value, perturbed under fault injection.
  double impl(double v) const { return options_.inject_fault ? v * (1.0 + 1e-6) + 1e-6 : v; }

  void check(const std::string& name, double measured, double threshold, std::string note = {}) {
    CheckResult r;
    r.suite = suite_;
    r.name = name;
    r.measured = measured;
    r.threshold = threshold;
    r.passed = std::isfinite(measured) && measured <= threshold;
    r.note = std::move(note);
    out_.push_back(std::move(r));
  }

  void info(const std::string& name, double measured, std::string note) {
    CheckResult r;
    r.suite = suite_;
    r.name = name;
    r.measured = measured;
    r.threshold = std::numeric_limits<double>::quiet_NaN();
    r.passed = true;
    r.informational = true;
    r.note = std::move(note);
    out_.push_back(std::move(r));
  }

 private:
  std::string suite_;
  const VerifyOptions& options_;
  std::vector<CheckResult>& out_;
};

double rel(double got, double want) { return std::fabs(got - want) / std::max(1.0, std::fabs(want)); }

double ulp(double x) {
  const double a = std::fabs(x);
  return std::nextafter(a, std::numeric_limits<double>::infinity()) - a;
}

// Fixed parameter sets used wherever the invariants call for "random" systems.
struct Sample {
  System sys;
  double lambda_factor;
};

std::vector<Sample> efield_samples() {
  return {{EFieldSystem{1.0, 1.0, 0.5, 0}, 0.62},
          {EFieldSystem{1.2, 0.8, 0.3, 2}, 1.37},
          {EFieldSystem{0.9, 1.5, 1.1, 1}, 1.91}};
}

std::vector<Sample> bfield_samples() {
  return {{BFieldSystem{1.0, 1.0, 0.6, 1.0, 1, 1}, 0.58},
          {BFieldSystem{1.1, -1.0, 1.3, 1.0, 2, -2}, 1.24},
          {BFieldSystem{0.8, 2.0, 0.4, 1.5, 3, 0}, 1.83}};
}

std::vector<Sample> all_samples() {
  std::vector<Sample> s = efield_samples();
  for (const Sample& b : bfield_samples()) s.push_back(b);
  return s;
}

RadialPotential potential_of(const System& sys) {
  const double kappa = quadratic_coefficient(sys);
  const double shift = paramagnetic_shift(sys);
  return [kappa, shift](double r) { return kappa * r * r - shift; };
}

// ---------------------------------------------------------------- specfun

void check_laguerre_1f1(Recorder& rec) {
  double worst = 0.0;
  for (int n = 0; n <= 50; ++n) {
    for (double nu : kNus) {
      for (int i = 0; i <= 100; ++i) {
        const double y = 0.5 * i;
        worst = std::max(worst, rel(rec.impl(laguerre(n, nu, y)), laguerre_via_1f1(n, nu, y)));
      }
    }
  }
  rec.check("laguerre recurrence vs 1F1 series (n<=50, y<=50)", worst, 1e-10);
}

void check_orthogonality(Recorder& rec) {
  double worst = 0.0;
  for (double nu : kNus) {
    std::map<int, QuadratureRule> rules;
    for (int n = 0; n <= 20; ++n) {
      for (int m = 0; m <= 20; ++m) {
        const int order = n + m + 2;
        auto it = rules.find(order);
        if (it == rules.end()) it = rules.emplace(order, gauss_laguerre(order, nu)).first;
        const double q = it->second.integrate(
            [&](double y) { return laguerre(n, nu, y) * laguerre(m, nu, y); });
        const double hn = std::exp(std::lgamma(n + nu + 1.0) - std::lgamma(n + 1.0));
        const double hm = std::exp(std::lgamma(m + nu + 1.0) - std::lgamma(m + 1.0));
        const double want = n == m ? hn : 0.0;
        worst = std::max(worst, std::fabs(rec.impl(q) - want) / std::sqrt(hn * hm));
      }
    }
  }
  rec.check("Laguerre orthogonality by Gauss rule (n,m<=20)", worst, 1e-10);
}

void check_ode(Recorder& rec) {
  const double ys[] = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 30.0, 40.0};
  double worst = 0.0;
  for (int n = 0; n <= 20; ++n) {
    for (double nu : kNus) {
      for (double y : ys) {
        const double scale = std::max(1.0, std::fabs(laguerre(n, nu, y)));
        worst = std::max(worst, std::fabs(rec.impl(verify_laguerre_ode(n, nu, y))) / scale);
      }
    }
  }
  rec.check("Laguerre differential equation residual (n<=20)", worst, 1e-9);
}

void check_derivative_identity(Recorder& rec) {
  const double ys[] = {0.5, 1.0, 2.5, 5.0, 10.0, 20.0, 30.0};
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    for (double nu : kNus) {
      for (double y : ys) {
        const double h = 1e-3 * std::max(1.0, y);
        auto l = [&](double t) { return laguerre(n, nu, t); };
        // Fourth-order central difference.
        const double d = (l(y - 2 * h) - 8 * l(y - h) + 8 * l(y + h) - l(y + 2 * h)) / (12 * h);
        const double fd = y * d;
        const double ident = rec.impl(laguerre_derivative_action(n, nu, y));
        const double scale = std::max({1.0, std::fabs(fd), n * std::fabs(l(y))});
        worst = std::max(worst, std::fabs(ident - fd) / scale);
      }
    }
  }
  rec.check("lowering identity y L' vs finite differences", worst, 1e-7);
}

void check_gauss_rules(Recorder& rec) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  double exact_worst = 0.0;
  double sum_worst = 0.0;
  double structure = 0.0;
  for (double nu : kNus) {
    for (int order : {1, 2, 3, 5, 8, 13, 21, 34}) {
      const QuadratureRule rule = gauss_laguerre(order, nu);
      if (static_cast<int>(rule.nodes.size()) != order || rule.weights.size() != rule.nodes.size()) {
        structure += 1.0;
      }
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        if (!(rule.weights[i] > 0.0) || !(rule.nodes[i] > 0.0)) structure += 1.0;
        if (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1])) structure += 1.0;
      }
      double wsum = 0.0;
      for (double w : rule.weights) wsum += w;
      sum_worst = std::max(sum_worst, std::fabs(rec.impl(wsum) - std::tgamma(nu + 1.0)) /
                                          std::tgamma(nu + 1.0));

      for (int trial = 0; trial < 3; ++trial) {
        const int degree = 2 * order - 1;
        std::vector<double> c(static_cast<std::size_t>(degree) + 1);
        for (double& v : c) v = coeff(rng);
        double exact = 0.0;
        double magnitude = 0.0;
        for (int j = 0; j <= degree; ++j) {
          const double moment = std::exp(std::lgamma(j + nu + 1.0));
          exact += c[j] * moment;
          magnitude += std::fabs(c[j]) * moment;
        }
        const double q = rule.integrate([&](double y) {
          double p = 0.0;
          for (int j = degree; j >= 0; --j) p = p * y + c[j];
          return p;
        });
        exact_worst = std::max(exact_worst, std::fabs(rec.impl(q) - exact) / magnitude);
      }
    }
  }
  rec.check("Gauss-Laguerre node/weight structure violations", structure, 0.0);
  rec.check("Gauss-Laguerre weight sum vs Gamma(nu+1)", sum_worst, 1e-12);
  rec.check("Gauss-Laguerre exactness to degree 2N-1", exact_worst, 1e-12);
}

void check_log_gamma(Recorder& rec) {
  double worst = 0.0;
  for (double x : {0.3, 1.5, 2.0, 7.25, 50.0, 100.0, 999.5, 9999.0}) {
    worst = std::max(worst, std::fabs(rec.impl(log_gamma_ratio(x + 1.0, x)) - std::log(x)) /
                                ulp(std::log(x)));
  }
  const double pairs[][2] = {{10.3, 3.7}, {0.7, 45.2}, {60.5, 59.25}, {3.0, 0.25}};
  for (const auto& p : pairs) {
    const long double want = std::lgamma(static_cast<long double>(p[0])) -
                             std::lgamma(static_cast<long double>(p[1]));
    const double w = static_cast<double>(want);
    worst = std::max(worst, std::fabs(rec.impl(log_gamma_ratio(p[0], p[1])) - w) / ulp(w));
  }
  rec.check("log_gamma_ratio error in ulps", worst, 2.0);
}

struct MPGrid {
  std::vector<double> mus{0.25, 0.75, 1.25, 2.75};
  std::vector<double> thetas{0.1, 0.5, 1.316957896924816, 2.5};
  std::vector<double> xs{-20.0, -3.0, 0.0, 1.0, 7.0, 40.0};
};

void check_meixner_pollaczek(Recorder& rec) {
  const MPGrid grid;
  double worst = 0.0;
  double printed_worst = 0.0;
  for (double mu : grid.mus) {
    for (double th : grid.thetas) {
      const RecursionCoeffs c = meixner_pollaczek_coeffs(mu, th);
      for (double x : grid.xs) {
        const PolySequence seq = run_three_term(c, x, 31);
        const std::complex<double> y(0.0, -x / (2.0 * std::sinh(th)));
        for (int n = 0; n <= 30; ++n) {
          const std::complex<double> f = meixner_pollaczek(n, mu, y, th);
          const double want = seq.values[n];
          worst = std::max(worst, std::abs(std::complex<double>(rec.impl(f.real()), f.imag()) - want) /
                                      std::max(1.0, std::fabs(want)));
          if (n < 30) {
            const std::complex<double> p = meixner_pollaczek_printed(n, mu, y, th);
            printed_worst = std::max(printed_worst, std::abs(p - want) / std::max(1.0, std::fabs(want)));
          }
        }
      }
    }
  }
  rec.check("Meixner-Pollaczek closed form vs forward recurrence (n<=30)", worst, 1e-10);
  rec.info("Meixner-Pollaczek closed form as usually printed vs recurrence", printed_worst,
           "erratum: the e^{-n theta} 2F1(mu + i y; 1 - e^{-2 theta}) form does not satisfy the "
           "recurrence; the implementation uses the consistent form");
}

void run_specfun(Recorder& rec) {
  check_laguerre_1f1(rec);
  check_orthogonality(rec);
  check_ode(rec);
  check_derivative_identity(rec);
  check_gauss_rules(rec);
  check_log_gamma(rec);
  check_meixner_pollaczek(rec);
}

// ---------------------------------------------------------------- basis

void run_basis(Recorder& rec) {
  double ortho = 0.0;
  for (int ell : {0, 1, 2, 5}) {
    const BasisParams p(1.3, ell);
    for (int n = 0; n <= 20; ++n) {
      for (int m = 0; m <= n; ++m) {
        ortho = std::max(ortho, std::fabs(rec.impl(overlap(p, n, m)) - (n == m ? 1.0 : 0.0)));
      }
    }
  }
  rec.check("basis orthonormality (n,m<=20, ell in {0,1,2,5})", ortho, 1e-10);

  double slope_err = 0.0;
  for (int ell : {0, 1, 2, 5}) {
    const BasisParams p(0.9, ell);
    for (int n = 0; n <= 5; ++n) {
      const double r1 = 1e-4;
      const double r2 = 1e-3;
      const double slope = std::log(std::fabs(basis_eval(p, n, r2) / basis_eval(p, n, r1))) /
                           std::log(r2 / r1);
      slope_err = std::max(slope_err, std::fabs(rec.impl(slope) - (ell + 1.0)));
    }
  }
  rec.check("small-r exponent of basis functions equals ell + 1", slope_err, 0.01);

  double cov = 0.0;
  const double lam = 1.7;
  const double lam2 = 0.6;
  for (int ell : {0, 2}) {
    for (int n : {0, 3, 9}) {
      for (double r : {0.2, 0.7, 1.5, 3.0}) {
        const double a = basis_eval(BasisParams(lam, ell), n, r);
        const double b = std::sqrt(lam / lam2) * basis_eval(BasisParams(lam2, ell), n, r * lam / lam2);
        cov = std::max(cov, rel(rec.impl(a), b));
      }
    }
  }
  rec.check("lambda covariance of basis functions", cov, 1e-10);

  double tails = 0.0;
  for (int n : {0, 5, 20}) {
    const BasisParams p(1.0, 1);
    tails = std::max({tails, std::fabs(rec.impl(basis_eval(p, n, 1e-8))),
                      std::fabs(rec.impl(basis_eval(p, n, 45.0)))});
  }
  rec.check("basis functions vanish at both ends (r=1e-8, y=2025)", tails, 1e-10);

  const double a0 = normalization(BasisParams(1.0, 0), 0);
  rec.check("A_0 at lambda=1, ell=0 vs sqrt(2/Gamma(3/2))",
            rel(rec.impl(a0), std::sqrt(2.0 / std::tgamma(1.5))), 1e-14);
}

// ---------------------------------------------------------------- assembly

void run_assembly(Recorder& rec) {
  double fidelity = 0.0;
  double tridiag = 0.0;
  double eta_err = 0.0;
  for (const Sample& s : all_samples()) {
    const double lambda = s.lambda_factor * lambda_star(s.sys);
    const SymTridiagonal h = hamiltonian_matrix(s.sys, lambda, 21);
    for (int m = 0; m <= 20; ++m) {
      for (int n = 0; n <= 20; ++n) {
        const double q = rec.impl(matrix_element_quadrature(s.sys, lambda, m, n));
        if (std::abs(m - n) >= 2) {
          tridiag = std::max(tridiag, std::fabs(q));
          continue;
        }
        const double closed = m == n ? h.diag()[n] : h.sub()[std::min(m, n)];
        fidelity = std::max(fidelity, rel(q, closed));
      }
    }
    const Coupling cp = coupling(s.sys, lambda);
    eta_err = std::max(eta_err, rel(rec.impl(cp.eta), quadratic_coefficient(s.sys) / (lambda * lambda)));
  }
  rec.check("matrix elements: closed form vs quadrature (n,m<=20)", fidelity, 1e-9);
  rec.check("matrix elements beyond the first off-diagonal", tridiag, 1e-9);
  rec.check("eta = 2 lambda^2 (xi + 1/4) = kappa / lambda^2", eta_err, 1e-14);

  double diag_err = 0.0;
  double sub_max = 0.0;
  for (const Sample& s : all_samples()) {
    const double ls = lambda_star(s.sys);
    const SymTridiagonal h = hamiltonian_matrix(s.sys, ls, 30);
    const double nu = ell_of(s.sys) + 0.5;
    for (int n = 0; n < 30; ++n) {
      const double want = ls * ls * (2.0 * n + nu + 1.0) - paramagnetic_shift(s.sys);
      diag_err = std::max(diag_err, rel(rec.impl(h.diag()[n]), want));
    }
    for (double v : h.sub()) sub_max = std::max(sub_max, std::fabs(rec.impl(v)));
  }
  rec.check("xi = 0: sub-diagonal vanishes", sub_max, 0.0);
  rec.check("xi = 0: diagonal equals lambda*^2 (2n+nu+1) - shift", diag_err, 4 * kEps);

  double shift_err = 0.0;
  for (const Sample& s : bfield_samples()) {
    BFieldSystem with = std::get<BFieldSystem>(s.sys);
    with.azimuthal = with.ell;
    BFieldSystem without = with;
    without.azimuthal = 0;
    const double lambda = s.lambda_factor * lambda_star(System{with});
    const SymTridiagonal a = hamiltonian_matrix(with, lambda, 25);
    const SymTridiagonal b = hamiltonian_matrix(without, lambda, 25);
    const double shift = paramagnetic_shift(with);
    for (std::size_t n = 0; n < a.size(); ++n) {
      shift_err = std::max(shift_err, std::fabs(rec.impl(a.diag()[n]) - (b.diag()[n] - shift)));
    }
    for (std::size_t n = 0; n < a.sub().size(); ++n) {
      shift_err = std::max(shift_err, std::fabs(rec.impl(a.sub()[n]) - b.sub()[n]));
    }
  }
  rec.check("paramagnetic term is a multiple of the identity", shift_err, 1e-13);
}

// ---------------------------------------------------------------- eigensolve

// Roots of det(T - x I) from the determinant recurrence, isolated by the
// interlacing of successive leading minors and refined by plain bisection.
std::vector<double> charpoly_roots(const std::vector<double>& d, const std::vector<double>& e) {
  const std::size_t n = d.size();
  double bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::fabs(d[i]);
    if (i > 0) row += std::fabs(e[i - 1]);
    if (i + 1 < n) row += std::fabs(e[i]);
    bound = std::max(bound, row);
  }
  bound += 1.0;
  auto det = [&](std::size_t k, double x) {
    double prev = 1.0;
    double cur = d[0] - x;
    for (std::size_t i = 1; i < k; ++i) {
      const double next = (d[i] - x) * cur - e[i - 1] * e[i - 1] * prev;
      prev = cur;
      cur = next;
    }
    return cur;
  };
  std::vector<double> roots{d[0]};
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<double> edges{-bound};
    edges.insert(edges.end(), roots.begin(), roots.end());
    edges.push_back(bound);
    std::vector<double> next;
    for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
      double lo = edges[j];
      double hi = edges[j + 1];
      const bool lo_sign = det(k, lo) > 0.0;
      for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        ((det(k, mid) > 0.0) == lo_sign ? lo : hi) = mid;
      }
      next.push_back(0.5 * (lo + hi));
    }
    roots = std::move(next);
  }
  return roots;
}

void run_eigensolve(Recorder& rec) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  double charpoly = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 8;
    std::vector<double> d(n), e(n - 1);
    for (double& v : d) v = entry(rng);
    for (double& v : e) {
      v = entry(rng);
      if (std::fabs(v) < 1e-3) v = 0.5;
    }
    const Spectrum s = eigenvalues(SymTridiagonal(d, e), n);
    const std::vector<double> want = charpoly_roots(d, e);
    for (std::size_t i = 0; i < n; ++i) {
      charpoly = std::max(charpoly, std::fabs(rec.impl(s.energies[i]) - want[i]));
    }
  }
  rec.check("eigenvalues vs characteristic-polynomial roots (N<=8)", charpoly, 1e-10);

  const double s2 = 0.9185586535436918;
  const Spectrum two = eigenvalues(SymTridiagonal({1.875, 4.375}, {s2}), 2);
  const double root = std::sqrt(1.5625 + s2 * s2);
  rec.check("2x2 eigenvalues vs closed form",
            std::max(std::fabs(rec.impl(two.energies[0]) - (3.125 - root)),
                     std::fabs(rec.impl(two.energies[1]) - (3.125 + root))),
            1e-12);

  double interlace = 0.0;
  const std::vector<int> sizes{10, 20, 40, 80, 160, 320};
  for (const Sample& s : {efield_samples()[0], bfield_samples()[1]}) {
    const double lambda = s.lambda_factor * lambda_star(s.sys);
    const auto rows = convergence_study(s.sys, lambda, 8, sizes);
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const double norm = hamiltonian_matrix(s.sys, lambda, rows[r].basis_size).norm();
      for (std::size_t j = 0; j < rows[r].energies.size(); ++j) {
        const double rise = rec.impl(rows[r].energies[j]) - rows[r - 1].energies[j];
        interlace = std::max(interlace, rise / norm);
      }
    }
  }
  rec.check("E_j(N) nonincreasing in N (relative to ||T||)", interlace, 1e-12);

  const System field = EFieldSystem{1.0, 1.0, 1.5, 0};
  const double ls = lambda_star(field);
  std::vector<Spectrum> spectra;
  for (double f : {0.7, 1.0, 1.6}) spectra.push_back(solve(field, f * ls, 400, 5));
  double spread = 0.0;
  for (int j = 0; j < 5; ++j) {
    for (std::size_t a = 0; a < spectra.size(); ++a) {
      for (std::size_t b = a + 1; b < spectra.size(); ++b) {
        spread = std::max(spread, std::fabs(rec.impl(spectra[a].energies[j]) - spectra[b].energies[j]));
      }
    }
  }
  rec.check("spectrum independent of basis scale (N=400)", spread, 1e-8);

  double zeeman_analytic = 0.0;
  double zeeman_matrix = 0.0;
  for (double b : {0.1, 0.2, 0.4}) {
    BFieldSystem base{1.0, 1.0, b, 1.0, 1, 0};
    const double ls_b = lambda_star(System{base});
    const Spectrum s0 = solve(base, ls_b, 50, 5);
    for (int mu : {-1, 1}) {
      BFieldSystem sys = base;
      sys.azimuthal = mu;
      const double want = -sys.charge * b * mu / (2.0 * sys.light_speed);
      const Spectrum s = solve(sys, ls_b, 50, 5);
      for (int n = 0; n < 5; ++n) {
        const double a = analytic_spectrum_bfield(sys, n);
        const double a0 = analytic_spectrum_bfield(base, n);
        zeeman_analytic = std::max(zeeman_analytic, std::fabs(rec.impl(a) - a0 - want) / ulp(a0));
        zeeman_matrix = std::max(zeeman_matrix, std::fabs(rec.impl(s.energies[n]) - s0.energies[n] - want));
      }
    }
  }
  rec.check("analytic Zeeman shift -qB mu/(2c), error in ulps of E", zeeman_analytic, 4.0);
  rec.check("matrix Zeeman shift at lambda*", zeeman_matrix, 1e-8);

  const System detuned = EFieldSystem{1.0, 1.0, 0.0, 0};
  const Spectrum c1 = solve(detuned, std::sqrt(2.0), 200, 3);
  const Spectrum c2 = solve(detuned, std::sqrt(2.0), 200, 3);
  double mismatches = 0.0;
  for (std::size_t i = 0; i < 3; ++i) mismatches += c1.energies[i] != c2.energies[i];
  rec.check("repeat solves are bit-identical (mismatch count)", mismatches, 0.0);
  rec.check("detuned zero-field ground state at N=200 vs 1.5", std::fabs(rec.impl(c1.energies[0]) - 1.5),
            1e-8);

  const SymTridiagonal t = hamiltonian_matrix(detuned, std::sqrt(2.0), 60);
  const Spectrum low = eigenvalues(t, 4);
  double vec_res = 0.0;
  for (double e : low.energies) {
    const std::vector<double> v = eigenvector(t, e);
    const std::vector<double> tv = t.multiply(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
      vec_res = std::max(vec_res, std::fabs(rec.impl(tv[i]) - e * v[i]) / t.norm());
    }
  }
  rec.check("inverse-iteration eigenvector residual / ||T||", vec_res, 1e-10);
}

// ---------------------------------------------------------------- recursion

void run_recursion(Recorder& rec) {
  double residual = 0.0;
  for (const Sample& s : all_samples()) {
    const double lambda = s.lambda_factor * lambda_star(s.sys);
    const RecursionCoeffs c = energy_coeffs(s.sys, lambda);
    for (double e : {0.5, 2.0, 5.0}) {
      PolySequence seq = run_three_term(c, e, 40);
      for (double& v : seq.values) v = rec.impl(v);
      residual = std::max(residual, recursion_residual(c, seq));
    }
  }
  rec.check("energy-polynomial recursion residual (N=40)", residual, 1e-12);

  double mp_match = 0.0;
  double coupling_gap = 0.0;
  for (const Sample& s : all_samples()) {
    // xi > 0 (real hyperbolic angle) needs lambda below lambda*.
    const double lambda = 0.8 * lambda_star(s.sys);
    const RecursionCoeffs c = energy_coeffs(s.sys, lambda);
    const MPParams mp = match_meixner_pollaczek(s.sys, lambda);
    const RecursionCoeffs standard = meixner_pollaczek_coeffs(mp.mu, mp.theta);
    for (int n = 0; n <= 100; ++n) {
      coupling_gap = std::max(coupling_gap, std::fabs(rec.impl(c.coupling(n)) - standard.coupling(n)));
    }
    for (double e : {0.3, 1.7, 4.0, 9.5}) {
      const PolySequence seq = run_three_term(c, e, 30);
      const std::complex<double> y = meixner_pollaczek_argument(mp, seq.spectral);
      for (int n = 0; n <= 30; ++n) {
        const double f = meixner_pollaczek(n, mp.mu, y, mp.theta).real();
        mp_match = std::max(mp_match, rel(rec.impl(seq.values[n]), f));
      }
    }
  }
  rec.check("physical recursion vs matched Meixner-Pollaczek closed form", mp_match, 1e-10);
  rec.check("coupling sqrt((n+1)(n+nu+1)) equals sqrt((n+1)(n+2mu)) at 2mu = nu+1", coupling_gap, 0.0);

  double duality = 0.0;
  for (const Sample& s : all_samples()) {
    const double lambda = 1.3 * lambda_star(s.sys);
    const RecursionCoeffs c = energy_coeffs(s.sys, lambda);
    for (int n : {3, 6, 12}) {
      const SymTridiagonal t = hamiltonian_matrix(s.sys, lambda, n);
      const Spectrum sp = eigenvalues(t, static_cast<std::size_t>(n));
      for (double e : sp.energies) {
        const std::vector<double> v = eigenvector(t, e);
        std::vector<double> p = run_three_term(c, e, n - 1).values;
        double norm = 0.0;
        for (double x : p) norm += x * x;
        norm = std::sqrt(norm);
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += p[i] * v[i];
        const double sign = dot < 0 ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i) {
          duality = std::max(duality, std::fabs(rec.impl(sign * p[i] / norm) - v[i]));
        }
      }
    }
  }
  rec.check("recursion vector parallel to matrix eigenvector (N<=12)", duality, 1e-8);

  double decoupled = 0.0;
  {
    const System sys = EFieldSystem{1.0, 1.0, 0.5, 1};
    const double e0 = analytic_spectrum(sys, 0);
    const double delta = 1e-4;
    const RecursionCoeffs c = energy_coeffs(sys, (1.0 + delta) * lambda_star(sys));
    const PolySequence seq = minimal_solution(c, e0, 8);
    for (int n = 1; n <= 8; ++n) decoupled = std::max(decoupled, std::fabs(rec.impl(seq.values[n])));
  }
  rec.check("xi -> 0: P_n(E_0) for n>=1 vanish (lambda = lambda*(1+1e-4))", decoupled, 1e-3);

  bool threw = false;
  try {
    energy_coeffs(EFieldSystem{1.0, 1.0, 0.0, 0}, 1.0);
  } catch (const DegenerateCouplingError&) {
    threw = true;
  }
  rec.check("xi = 0 recursion is rejected", rec.impl(threw ? 0.0 : 1.0), 0.0);

  // Detuned basis: the zero-field ground state is phi_0 at lambda = 1.
  const System osc = EFieldSystem{1.0, 1.0, 0.0, 0};
  const BasisParams exact(1.0, 0);
  double wf = 0.0;
  double wf_forward = 0.0;
  const double ref = wavefunction_eval(osc, std::sqrt(2.0), 1.5, 1.0, 40) / basis_eval(exact, 0, 1.0);
  const double ref_fwd = wavefunction_eval(osc, std::sqrt(2.0), 1.5, 1.0, 40, {ExpansionMethod::forward, {}}) /
                         basis_eval(exact, 0, 1.0);
  for (int i = 0; i <= 78; ++i) {
    const double r = 0.1 + 0.05 * i;
    const double phi = basis_eval(exact, 0, r);
    wf = std::max(wf, std::fabs(rec.impl(wavefunction_eval(osc, std::sqrt(2.0), 1.5, r, 40)) / ref - phi) /
                          std::fabs(phi));
    const double fwd = wavefunction_eval(osc, std::sqrt(2.0), 1.5, r, 40, {ExpansionMethod::forward, {}});
    wf_forward = std::max(wf_forward, std::fabs(fwd / ref_fwd - phi) / std::fabs(phi));
  }
  rec.check("detuned 40-term expansion reproduces the ground state", wf, 1e-6);
  rec.info("same expansion with literal forward recursion", wf_forward,
           "forward recursion picks up the growing solution; minimal solution is the default");
}

// ---------------------------------------------------------------- oracle

void run_oracle(Recorder& rec) {
  const RadialPotential half = [](double r) { return 0.5 * r * r; };
  const FdSpectrum fd = fd_spectrum(half, 0, RadialGrid{12.0, 4000}, 3);
  double fd_err = 0.0;
  for (int n = 0; n < 3; ++n) {
    fd_err = std::max(fd_err, std::fabs(rec.impl(fd.spectrum.energies[n]) - quadratic_spectrum(1.0, 0, n)));
  }
  rec.check("finite differences vs exact levels of r^2/2 (M=4000)", fd_err, 2e-5);

  double order_err = 0.0;
  {
    std::vector<std::vector<double>> errs;
    for (int cells : {1000, 2000, 4000}) {
      const FdSpectrum s = fd_spectrum(half, 1, RadialGrid{12.0, cells - 1}, 3);
      std::vector<double> e;
      for (int n = 0; n < 3; ++n) e.push_back(std::fabs(rec.impl(s.spectrum.energies[n]) - quadratic_spectrum(1.0, 1, n)));
      errs.push_back(e);
    }
    for (std::size_t k = 1; k < errs.size(); ++k) {
      for (int n = 0; n < 3; ++n) {
        order_err = std::max(order_err, std::fabs(std::log2(errs[k - 1][n] / errs[k][n]) - 2.0));
      }
    }
  }
  rec.check("Richardson order of finite differences is 2", order_err, 0.1);

  double tra_vs_fd = 0.0;
  double warnings = 0.0;
  for (const Sample& s : all_samples()) {
    const double kappa = quadratic_coefficient(s.sys);
    const int ell = ell_of(s.sys);
    const FdSpectrum f = fd_spectrum(potential_of(s.sys), ell,
                                     RadialGrid{default_r_max(2.0 * kappa, ell, 3), 4000}, 3);
    warnings += f.boundary_warning;
    const Spectrum t = solve(s.sys, lambda_star(s.sys), 400, 3);
    for (int n = 0; n < 3; ++n) {
      tra_vs_fd = std::max(tra_vs_fd, std::fabs(rec.impl(t.energies[n]) - f.spectrum.energies[n]));
    }
  }
  rec.check("TRA vs finite differences, both systems (lowest 3 levels)", tra_vs_fd, 1e-3);
  rec.check("finite-difference boundary warnings on default r_max", warnings, 0.0);

  double mono = 0.0;
  double previous = -std::numeric_limits<double>::infinity();
  for (int ell = 0; ell <= 4; ++ell) {
    const double e0 = rec.impl(fd_spectrum(half, ell, RadialGrid{14.0, 2000}, 1).spectrum.energies[0]);
    if (!(e0 > previous)) mono += 1.0;
    previous = e0;
  }
  rec.check("ground state strictly increasing in ell (violations)", mono, 0.0);

  const FdSpectrum tight = fd_spectrum(half, 0, RadialGrid{2.5, 500}, 1);
  rec.check("boundary warning raised for r_max too small", rec.impl(tight.boundary_warning ? 0.0 : 1.0), 0.0);

  double closed = 0.0;
  for (const Sample& s : efield_samples()) {
    const auto& e = std::get<EFieldSystem>(s.sys);
    for (int n = 0; n < 6; ++n) {
      const double w2 = std::pow(e.omega, 4) + 2.0 * e.charge * e.field;
      closed = std::max(closed, rel(rec.impl(analytic_spectrum_efield(e, n)), quadratic_spectrum(w2, e.ell, n)));
    }
  }
  rec.check("analytic electric-field levels = quadratic_spectrum(omega^4 + 2 q zeta)", closed, 1e-14);

  // Field on: omega = 1, q = 1, zeta = 1.5 gives frequency 2, ground state 3.
  const System field = EFieldSystem{1.0, 1.0, 1.5, 0};
  const FdSpectrum ff = fd_spectrum(potential_of(field), 0, RadialGrid{default_r_max(4.0, 0, 1), 4000}, 1);
  const double e_fd = rec.impl(ff.spectrum.energies[0]);
  rec.check("electric field shifts the ground state to 3.0 (finite differences)", std::fabs(e_fd - 3.0), 1e-4);
  rec.info("gap to the field-free level omega^2 (nu + 1) = 1.5", std::fabs(e_fd - fixed_scale_spectrum(field, 0)),
           "erratum: the spectrum does depend on the electric field; the field-free value is not the "
           "level at zeta != 0");
}

}  // namespace

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> names{"all",        "specfun",   "basis", "assembly",
                                              "eigensolve", "recursion", "oracle"};
  return names;
}

std::vector<CheckResult> run_verification(const std::string& suite, const VerifyOptions& options) {
  const auto& names = verification_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw DomainError("unknown verification suite '" + suite + "'");
  }
  std::vector<CheckResult> out;
  auto run = [&](const std::string& name, void (*fn)(Recorder&)) {
    if (suite != "all" && suite != name) return;
    Recorder rec(name, options, out);
    fn(rec);
  };
  run("specfun", run_specfun);
  run("basis", run_basis);
  run("assembly", run_assembly);
  run("eigensolve", run_eigensolve);
  run("recursion", run_recursion);
  run("oracle", run_oracle);
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.informational || r.passed; });
}

}  // namespace tra
