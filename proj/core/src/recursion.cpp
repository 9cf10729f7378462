#include "tra/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "tra/basis.hpp"
#include "tra/errors.hpp"
#include "tra/specfun.hpp"

namespace tra {
namespace {

constexpr double kRescale = 0x1p400;

double checked_coupling(const RecursionCoeffs& c, int n) {
  const double b = c.coupling(n);
  if (!(b > 0.0)) {
    std::ostringstream msg;
    msg << "three-term recursion '" << c.description << "': coupling b_" << n << " = " << b
        << " is not positive";
    throw DomainError(msg.str());
  }
  return b;
}

// Backward sweep from start with P_{start+1} = 0, P_start = 1, normalised to P_0 = 1.
std::vector<double> backward_sweep(const RecursionCoeffs& c, double x, int start, int keep) {
  std::vector<double> q(static_cast<std::size_t>(start) + 2, 0.0);
  q[start] = 1.0;
  for (int n = start; n >= 1; --n) {
    q[n - 1] = ((x - c.diagonal(n)) * q[n] - c.coupling(n) * q[n + 1]) / checked_coupling(c, n - 1);
    if (std::fabs(q[n - 1]) > kRescale) {
      for (int j = n - 1; j <= start; ++j) q[j] /= kRescale;
    }
  }
  if (q[0] == 0.0 || !std::isfinite(q[0])) {
    throw ConvergenceError("minimal_solution: backward recursion produced P_0 = 0; "
                           "the decaying solution cannot be normalised at this energy");
  }
  std::vector<double> out(q.begin(), q.begin() + keep + 1);
  const double p0 = out[0];
  for (double& v : out) v /= p0;
  return out;
}

void require_nondegenerate(double xi) {
  if (xi == 0.0) {
    throw DegenerateCouplingError("recursion degenerate; spectrum is exactly diagonal (xi = 0)");
  }
}

}  // namespace

PolySequence run_three_term(const RecursionCoeffs& coeffs, double energy, int n_max) {
  if (n_max < 0) throw DomainError("run_three_term: n_max must be non-negative");
  PolySequence seq;
  seq.energy = energy;
  seq.spectral = coeffs.spectral_variable(energy);
  seq.values.resize(static_cast<std::size_t>(n_max) + 1);
  seq.values[0] = 1.0;
  const double x = seq.spectral;
  for (int n = 0; n < n_max; ++n) {
    const double lower = n > 0 ? coeffs.coupling(n - 1) * seq.values[n - 1] : 0.0;
    seq.values[n + 1] = ((x - coeffs.diagonal(n)) * seq.values[n] - lower) / checked_coupling(coeffs, n);
  }
  return seq;
}

PolySequence minimal_solution(const RecursionCoeffs& coeffs, double energy, int n_max) {
  if (n_max < 0) throw DomainError("minimal_solution: n_max must be non-negative");
  PolySequence seq;
  seq.energy = energy;
  seq.spectral = coeffs.spectral_variable(energy);
  int extra = 32;
  std::vector<double> previous = backward_sweep(coeffs, seq.spectral, n_max + extra, n_max);
  for (int attempt = 0; attempt < 12; ++attempt) {
    extra *= 2;
    std::vector<double> current = backward_sweep(coeffs, seq.spectral, n_max + extra, n_max);
    double scale = 0.0;
    double change = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      scale = std::max(scale, std::fabs(current[n]));
      change = std::max(change, std::fabs(current[n] - previous[n]));
    }
    previous = std::move(current);
    if (change <= 1e-14 * scale) {
      seq.values = std::move(previous);
      return seq;
    }
  }
  throw ConvergenceError("minimal_solution: backward recursion did not settle within " +
                         std::to_string(n_max + extra) + " terms");
}

double recursion_residual(const RecursionCoeffs& coeffs, const PolySequence& seq) {
  const auto& p = seq.values;
  double biggest = 1.0;
  for (double v : p) biggest = std::max(biggest, std::fabs(v));
  double worst = 0.0;
  for (std::size_t n = 0; n + 1 < p.size(); ++n) {
    const int k = static_cast<int>(n);
    const double lower = n > 0 ? coeffs.coupling(k - 1) * p[n - 1] : 0.0;
    const double r = seq.spectral * p[n] - coeffs.diagonal(k) * p[n] - lower - coeffs.coupling(k) * p[n + 1];
    worst = std::max(worst, std::fabs(r));
  }
  return worst / biggest;
}

RecursionCoeffs efield_coeffs(const EFieldSystem& sys, double lambda) {
  const Coupling cp = coupling(System{sys}, lambda);
  require_nondegenerate(cp.xi);
  const double xi = cp.xi;
  const double nu = sys.ell + 0.5;
  RecursionCoeffs c;
  c.diagonal = [xi, nu](int n) { return -(0.5 + xi) * (2.0 * n + nu + 1.0) / xi; };
  c.coupling = [nu](int n) { return std::sqrt((n + 1.0) * (n + nu + 1.0)); };
  c.energy_scale = -1.0 / (2.0 * lambda * lambda * xi);
  c.description = "efield energy polynomials";
  return c;
}

RecursionCoeffs bfield_coeffs(const BFieldSystem& sys, double lambda) {
  const Coupling cp = coupling(System{sys}, lambda);
  require_nondegenerate(cp.xi);
  const double xi = cp.xi;
  const double nu = sys.ell + 0.5;
  const double para = sys.charge * sys.field * sys.azimuthal / (4.0 * lambda * lambda * sys.light_speed);
  RecursionCoeffs c;
  c.diagonal = [xi, nu, para](int n) { return (-(0.5 + xi) * (2.0 * n + nu + 1.0) + para) / xi; };
  c.coupling = [nu](int n) { return std::sqrt((n + 1.0) * (n + nu + 1.0)); };
  c.energy_scale = -1.0 / (2.0 * lambda * lambda * xi);
  c.description = "bfield energy polynomials";
  return c;
}

RecursionCoeffs energy_coeffs(const System& sys, double lambda) {
  if (const auto* e = std::get_if<EFieldSystem>(&sys)) return efield_coeffs(*e, lambda);
  return bfield_coeffs(std::get<BFieldSystem>(sys), lambda);
}

RecursionCoeffs meixner_pollaczek_coeffs(double mu, double theta) {
  if (!(mu > 0.0)) throw DomainError("meixner_pollaczek_coeffs: mu must be positive");
  const double ch = std::cosh(theta);
  RecursionCoeffs c;
  c.diagonal = [mu, ch](int n) { return -2.0 * (n + mu) * ch; };
  c.coupling = [mu](int n) { return std::sqrt((n + 1.0) * (n + 2.0 * mu)); };
  c.description = "hyperbolic Meixner-Pollaczek";
  return c;
}

std::complex<double> mp_recurrence_residual(int n, double mu, std::complex<double> y, double theta,
                                            MPRecurrenceForm form, double nu) {
  if (n < 0) throw DomainError("mp_recurrence_residual: n must be non-negative");
  const std::complex<double> i{0.0, 1.0};
  const std::complex<double> fn = meixner_pollaczek(n, mu, y, theta);
  const std::complex<double> fup = meixner_pollaczek(n + 1, mu, y, theta);
  const std::complex<double> fdown = n > 0 ? meixner_pollaczek(n - 1, mu, y, theta) : 0.0;
  const double upper = form == MPRecurrenceForm::standard ? std::sqrt((n + 1.0) * (n + 2.0 * mu))
                                                          : std::sqrt((n + 1.0) * (n + nu + 1.0));
  return (2.0 * i * y * std::sinh(theta) + 2.0 * (n + mu) * std::cosh(theta)) * fn -
         std::sqrt(n * (n + 2.0 * mu - 1.0)) * fdown - upper * fup;
}

namespace {

MPParams finish_match(double xi, int ell, std::optional<double> fixed) {
  require_nondegenerate(xi);
  MPParams mp;
  mp.mu = 0.5 * (ell + 1.5);
  mp.cosh_theta = (0.5 + xi) / xi;
  if (!(mp.cosh_theta >= 1.0)) {
    std::ostringstream msg;
    msg << "no real hyperbolic angle: (1/2 + xi)/xi = " << mp.cosh_theta << " < 1 (xi = " << xi << ")";
    throw DomainError(msg.str());
  }
  mp.theta = std::acosh(mp.cosh_theta);
  mp.fixed_cosh_theta = fixed;
  return mp;
}

}  // namespace

MPParams match_meixner_pollaczek(const EFieldSystem& sys, double lambda) {
  const Coupling cp = coupling(System{sys}, lambda);
  std::optional<double> fixed;
  const double qz = sys.charge * sys.field;
  if (qz != 0.0) fixed = std::pow(sys.omega, 4) / (2.0 * qz);
  return finish_match(cp.xi, sys.ell, fixed);
}

MPParams match_meixner_pollaczek(const BFieldSystem& sys, double lambda) {
  const Coupling cp = coupling(System{sys}, lambda);
  std::optional<double> fixed;
  const double qb = sys.charge * sys.field;
  if (qb != 0.0) {
    const double c = sys.light_speed;
    fixed = 4.0 * std::pow(sys.omega, 4) * c * c / (qb * qb);
  }
  MPParams mp = finish_match(cp.xi, sys.ell, fixed);
  mp.spectral_offset = qb * sys.azimuthal / (4.0 * lambda * lambda * sys.light_speed * cp.xi);
  return mp;
}

MPParams match_meixner_pollaczek(const System& sys, double lambda) {
  return std::visit([&](const auto& s) { return match_meixner_pollaczek(s, lambda); }, sys);
}

std::complex<double> meixner_pollaczek_argument(const MPParams& mp, double spectral) {
  return std::complex<double>(0.0, -(spectral - mp.spectral_offset) / (2.0 * std::sinh(mp.theta)));
}

std::vector<double> expansion_coefficients(const System& sys, double lambda, double energy,
                                           int n_terms, ExpansionMethod method) {
  if (n_terms < 1) throw DomainError("expansion_coefficients: n_terms must be at least 1");
  if (n_terms == 1) {
    coupling(sys, lambda);  // validates the inputs
    return {1.0};
  }
  const RecursionCoeffs c = energy_coeffs(sys, lambda);
  const PolySequence seq = method == ExpansionMethod::minimal
                               ? minimal_solution(c, energy, n_terms - 1)
                               : run_three_term(c, energy, n_terms - 1);
  return seq.values;
}

std::vector<double> wavefunction_partial_sums(const System& sys, double lambda,
                                              const std::vector<double>& coeffs, double r,
                                              std::optional<double> weight) {
  if (coeffs.empty()) throw DomainError("wavefunction_partial_sums: no coefficients");
  const BasisParams basis(lambda, ell_of(sys));
  const std::vector<double> phi = basis_values(basis, static_cast<int>(coeffs.size()), r);
  const double w = weight.value_or(1.0);
  std::vector<double> sums(coeffs.size());
  double acc = 0.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    acc += coeffs[n] * phi[n];
    sums[n] = w * acc;
  }
  return sums;
}

double wavefunction_eval(const System& sys, double lambda, double energy, double r, int n_terms,
                         const WavefunctionOptions& options) {
  const std::vector<double> c = expansion_coefficients(sys, lambda, energy, n_terms, options.method);
  return wavefunction_partial_sums(sys, lambda, c, r, options.weight).back();
}

}  // namespace tra
