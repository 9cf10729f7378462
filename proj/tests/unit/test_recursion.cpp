#include <doctest.h>

#include <cmath>

#include "tra/assembly.hpp"
#include "tra/basis.hpp"
#include "tra/eigensolve.hpp"
#include "tra/errors.hpp"
#include "tra/recursion.hpp"
#include "tra/specfun.hpp"
#include "tra/spectrum.hpp"

using namespace tra;

TEST_SUITE("recursion") {
  TEST_CASE("degree zero") {
    const RecursionCoeffs c = meixner_pollaczek_coeffs(1.0, 0.5);
    CHECK(run_three_term(c, 0.3, 0).values == std::vector<double>{1.0});
    CHECK_THROWS_AS(run_three_term(c, 0.3, -1), DomainError);
  }

  TEST_CASE("generic recursion with constant coefficients") {
    RecursionCoeffs c;
    c.diagonal = [](int) { return 0.0; };
    c.coupling = [](int) { return 0.5; };
    const PolySequence seq = run_three_term(c, 0.3, 5);
    CHECK(seq.values[1] == doctest::Approx(0.6).epsilon(1e-15));
    // Chebyshev polynomials of the second kind: U_n(x).
    CHECK(seq.values[2] == doctest::Approx(4 * 0.09 - 1).epsilon(1e-14));
    CHECK(recursion_residual(c, seq) < 1e-15);
  }

  TEST_CASE("electric-field recursion at a detuned scale") {
    const EFieldSystem e{1.0, 1.0, 0.0, 0};
    const RecursionCoeffs c = efield_coeffs(e, std::sqrt(2.0));
    CHECK(c.coupling(0) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
    CHECK(c.spectral_variable(1.5) == doctest::Approx(2.0).epsilon(1e-15));
    const PolySequence seq = run_three_term(c, 1.5, 3);
    CHECK(seq.values[1] == doctest::Approx(-0.40824829046386302).epsilon(1e-14));
    CHECK(seq.spectral == doctest::Approx(2.0).epsilon(1e-15));
  }

  TEST_CASE("xi = 0 is rejected") {
    CHECK_THROWS_AS(efield_coeffs(EFieldSystem{1.0, 1.0, 0.0, 0}, 1.0), DegenerateCouplingError);
    const BFieldSystem b{1.0, 1.0, 0.5, 1.0, 1, 0};
    CHECK_THROWS_AS(bfield_coeffs(b, lambda_star(b)), DegenerateCouplingError);
    CHECK_THROWS_AS(match_meixner_pollaczek(b, lambda_star(b)), DegenerateCouplingError);
    CHECK_THROWS_AS(expansion_coefficients(b, lambda_star(b), 1.0, 2), DegenerateCouplingError);
    CHECK(expansion_coefficients(b, lambda_star(b), 1.0, 1) == std::vector<double>{1.0});
  }

  TEST_CASE("zero magnetic field gives the electric-field coefficients") {
    const RecursionCoeffs b = bfield_coeffs(BFieldSystem{1.2, 1.0, 0.0, 1.0, 2, 1}, 0.9);
    const RecursionCoeffs e = efield_coeffs(EFieldSystem{1.2, 1.0, 0.0, 2}, 0.9);
    CHECK(b.energy_scale == e.energy_scale);
    for (int n = 0; n < 20; ++n) {
      CHECK(b.diagonal(n) == e.diagonal(n));
      CHECK(b.coupling(n) == e.coupling(n));
    }
  }

  TEST_CASE("paramagnetic term shifts a_n") {
    const double lambda = 0.8;
    const BFieldSystem up{1.0, 1.0, 0.6, 1.0, 1, 1};
    BFieldSystem down = up;
    down.azimuthal = -1;
    const RecursionCoeffs cu = bfield_coeffs(up, lambda);
    const RecursionCoeffs cd = bfield_coeffs(down, lambda);
    const double xi = coupling(up, lambda).xi;
    for (int n = 0; n < 10; ++n) {
      CHECK(cu.diagonal(n) - cd.diagonal(n) ==
            doctest::Approx(2.0 * (0.6 / (4.0 * lambda * lambda)) / xi).epsilon(1e-13));
    }
  }

  TEST_CASE("recursion residual is at rounding level") {
    const System systems[] = {EFieldSystem{1.0, 1.0, 0.5, 0}, BFieldSystem{1.1, -1.0, 1.3, 1.0, 2, -2}};
    for (const System& s : systems) {
      const RecursionCoeffs c = energy_coeffs(s, 0.7 * lambda_star(s));
      for (double e : {0.4, 2.2, 6.0}) CHECK(recursion_residual(c, run_three_term(c, e, 40)) < 1e-12);
    }
  }

  TEST_CASE("Meixner-Pollaczek matching") {
    const MPParams ground = match_meixner_pollaczek(EFieldSystem{1.0, 1.0, 0.0, 0}, 0.9);
    CHECK(ground.mu == 0.75);
    CHECK_FALSE(ground.fixed_cosh_theta.has_value());

    // omega = 1, q zeta = 1 at lambda = 1: xi = 1/2 and cosh(theta) = 2.
    const EFieldSystem e{1.0, 1.0, 1.0, 0};
    const MPParams mp = match_meixner_pollaczek(e, 1.0);
    CHECK(mp.cosh_theta == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(mp.theta == doctest::Approx(1.3169578969248167).epsilon(1e-14));
    REQUIRE(mp.fixed_cosh_theta.has_value());
    CHECK(*mp.fixed_cosh_theta == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mp.spectral_offset == 0.0);

    // Large xi drives cosh(theta) to 1.
    CHECK(match_meixner_pollaczek(e, 0.05).theta < 0.01);

    // xi < 0 leaves no real hyperbolic angle.
    CHECK_THROWS_AS(match_meixner_pollaczek(e, 2.0), DomainError);
  }

  TEST_CASE("physical polynomials equal the matched Meixner-Pollaczek closed form") {
    const System systems[] = {EFieldSystem{1.2, 0.8, 0.3, 2}, BFieldSystem{1.0, 1.0, 0.6, 1.0, 1, 1}};
    for (const System& s : systems) {
      const double lambda = 0.8 * lambda_star(s);
      const RecursionCoeffs c = energy_coeffs(s, lambda);
      const MPParams mp = match_meixner_pollaczek(s, lambda);
      for (double e : {0.3, 1.7, 4.0}) {
        const PolySequence seq = run_three_term(c, e, 20);
        const std::complex<double> y = meixner_pollaczek_argument(mp, seq.spectral);
        for (int n = 0; n <= 20; ++n) {
          const std::complex<double> f = meixner_pollaczek(n, mp.mu, y, mp.theta);
          CHECK(std::abs(f - seq.values[n]) < 1e-9 * std::max(1.0, std::fabs(seq.values[n])));
        }
      }
    }
  }

  TEST_CASE("eigenvectors of the truncated matrix are the energy polynomials") {
    const BFieldSystem b{0.9, 1.0, 0.7, 1.0, 2, -1};
    const double lambda = 1.3 * lambda_star(b);
    for (int size : {2, 5, 12}) {
      const SymTridiagonal h = hamiltonian_matrix(b, lambda, size);
      const Spectrum s = eigenvalues(h, 2);
      for (double e : s.energies) {
        const std::vector<double> v = eigenvector(h, e);
        const PolySequence p = run_three_term(energy_coeffs(b, lambda), e, size);
        double largest = 0.0;
        for (double x : p.values) largest = std::max(largest, std::fabs(x));
        CHECK(std::fabs(p.values[size]) < 1e-9 * largest);
        for (int n = 0; n < size; ++n) CHECK(v[n] / v[0] == doctest::Approx(p.values[n]).epsilon(1e-8).scale(1.0));
      }
    }
  }

  TEST_CASE("coefficients decouple near lambda_star") {
    const EFieldSystem e{1.0, 1.0, 0.5, 1};
    const RecursionCoeffs c = energy_coeffs(e, (1.0 + 1e-4) * lambda_star(e));
    const PolySequence seq = minimal_solution(c, analytic_spectrum(e, 0), 8);
    for (int n = 1; n <= 8; ++n) CHECK(std::fabs(seq.values[n]) < 1e-3);
  }

  TEST_CASE("minimal solution agrees with forward recursion where the latter is stable") {
    const EFieldSystem e{1.0, 1.0, 0.0, 0};
    const RecursionCoeffs c = efield_coeffs(e, std::sqrt(2.0));
    const PolySequence fwd = run_three_term(c, 1.5, 8);
    const PolySequence min = minimal_solution(c, 1.5, 8);
    for (int n = 0; n <= 8; ++n) CHECK(min.values[n] == doctest::Approx(fwd.values[n]).epsilon(1e-8).scale(1.0));
    CHECK(recursion_residual(c, min) < 1e-12);
  }

  TEST_CASE("single-term wavefunction is the first basis function") {
    const EFieldSystem e{1.0, 1.0, 0.3, 1};
    for (double r : {0.3, 1.0, 2.2}) {
      CHECK(wavefunction_eval(e, 0.9, 2.0, r, 1) == doctest::Approx(basis_eval(BasisParams(0.9, 1), 0, r)).epsilon(1e-15));
    }
    CHECK(wavefunction_eval(e, 0.9, 2.0, 1.0, 1, {ExpansionMethod::minimal, 2.0}) ==
          doctest::Approx(2.0 * basis_eval(BasisParams(0.9, 1), 0, 1.0)).epsilon(1e-15));
    const auto sums = wavefunction_partial_sums(e, 0.9, {1.0, 0.5, -0.25}, 1.0);
    REQUIRE(sums.size() == 3);
    CHECK(sums[0] == basis_eval(BasisParams(0.9, 1), 0, 1.0));
  }

  TEST_CASE("detuned expansion converges to the exact ground state") {
    const EFieldSystem osc{1.0, 1.0, 0.0, 0};
    const BasisParams exact(1.0, 0);
    const double ref = wavefunction_eval(osc, std::sqrt(2.0), 1.5, 1.0, 40) / basis_eval(exact, 0, 1.0);
    double worst = 0.0;
    for (int i = 0; i <= 78; ++i) {
      const double r = 0.1 + 0.05 * i;
      const double phi = basis_eval(exact, 0, r);
      worst = std::max(worst, std::fabs(wavefunction_eval(osc, std::sqrt(2.0), 1.5, r, 40) / ref - phi) / std::fabs(phi));
    }
    CHECK(worst < 1e-6);
  }
}
