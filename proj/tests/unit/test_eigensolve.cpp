#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "tra/assembly.hpp"
#include "tra/eigensolve.hpp"
#include "tra/errors.hpp"
#include "tra/spectrum.hpp"

using namespace tra;

namespace {

// Cyclic Jacobi rotations on the dense form, an oracle independent of Sturm counts.
std::vector<double> dense_jacobi_eigenvalues(const SymTridiagonal& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = t.diag()[i];
  for (std::size_t i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = t.sub()[i];
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-40) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double tt = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(tt * tt + 1.0);
        const double s = tt * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace

TEST_SUITE("eigensolve") {
  TEST_CASE("diagonal matrices are sorted") {
    const SymTridiagonal t({3.0, -1.0, 2.0}, {0.0, 0.0});
    CHECK(eigenvalues(t, 3).energies == std::vector<double>{-1.0, 2.0, 3.0});
    CHECK(eigenvalues(SymTridiagonal({4.2}, {}), 1).energies == std::vector<double>{4.2});
  }

  TEST_CASE("two by two closed form") {
    const SymTridiagonal h = hamiltonian_matrix(EFieldSystem{1.0, 1.0, 0.0, 0}, std::sqrt(2.0), 2);
    const Spectrum s = eigenvalues(h, 2);
    CHECK(s.energies[0] == doctest::Approx(3.125 - std::sqrt(2.40625)).epsilon(1e-15));
    CHECK(s.energies[1] == doctest::Approx(3.125 + std::sqrt(2.40625)).epsilon(1e-15));
    CHECK(s.energies[0] == doctest::Approx(1.573790).epsilon(1e-6));
    CHECK(s.energies[1] == doctest::Approx(4.676210).epsilon(1e-6));
    CHECK(s.basis_size == 2);
  }

  TEST_CASE("argument checks") {
    const SymTridiagonal t({1.0, 2.0}, {0.5});
    CHECK_THROWS_AS(eigenvalues(t, 3), DomainError);
    CHECK_THROWS_AS(eigenvalues(t, 0), DomainError);
    CHECK_THROWS_AS(SymTridiagonal({1.0, 2.0}, {0.5, 0.5}), DomainError);
  }

  TEST_CASE("sturm counts") {
    const SymTridiagonal t({1.0, 2.0, 3.0}, {0.0, 0.0});
    CHECK(sturm_count(t, 0.5) == 0);
    CHECK(sturm_count(t, 2.5) == 2);
    CHECK(sturm_count(t, 10.0) == 3);
  }

  TEST_CASE("agrees with a dense Jacobi oracle on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_int_distribution<int> size(1, 40);
    double worst = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
      const int n = size(rng);
      std::vector<double> d(n), e(n - 1);
      for (double& v : d) v = u(rng);
      for (double& v : e) v = u(rng);
      const SymTridiagonal t(d, e);
      const std::vector<double> want = dense_jacobi_eigenvalues(t);
      const Spectrum got = eigenvalues(t, n);
      for (int i = 0; i < n; ++i) worst = std::max(worst, std::fabs(got.energies[i] - want[i]) / t.norm());
    }
    CHECK(worst < 1e-12);
  }

  TEST_CASE("eigenvectors") {
    const SymTridiagonal h = hamiltonian_matrix(EFieldSystem{1.0, 1.0, 0.7, 1}, 0.9, 60);
    const Spectrum s = eigenvalues(h, 5);
    for (double e : s.energies) {
      const std::vector<double> v = eigenvector(h, e);
      const std::vector<double> hv = h.multiply(v);
      double norm = 0.0, residual = 0.0, largest = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        norm += v[i] * v[i];
        residual = std::max(residual, std::fabs(hv[i] - e * v[i]));
        if (std::fabs(v[i]) > std::fabs(largest)) largest = v[i];
      }
      CHECK(norm == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(residual < 1e-12 * h.norm());
      CHECK(largest > 0.0);
    }
  }

  TEST_CASE("convergence with basis size at a detuned scale") {
    const EFieldSystem e{1.0, 1.0, 0.0, 0};
    const auto rows = convergence_study(e, std::sqrt(2.0), 1, {200, 1, 2, 50});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].basis_size == 1);
    CHECK(rows[0].energies[0] == doctest::Approx(1.875).epsilon(1e-15));
    CHECK(rows[1].energies[0] == doctest::Approx(1.573790).epsilon(1e-6));
    CHECK(std::fabs(rows[3].energies[0] - 1.5) < 1e-8);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].energies[0] <= rows[i - 1].energies[0]);
    CHECK_THROWS_AS(convergence_study(e, 1.0, 3, {2}), DomainError);
  }

  TEST_CASE("at lambda_star the levels do not depend on the basis size") {
    const EFieldSystem e{1.0, 1.0, 0.0, 0};
    for (const auto& row : convergence_study(e, 1.0, 3, {3, 10, 100})) {
      CHECK(row.energies == std::vector<double>{1.5, 3.5, 5.5});
    }
  }

  TEST_CASE("interlacing of leading blocks") {
    const SymTridiagonal h = hamiltonian_matrix(BFieldSystem{1.0, 1.0, 0.6, 1.0, 1, 1}, 0.7, 30);
    for (std::size_t n = 2; n <= 30; ++n) {
      const Spectrum big = eigenvalues(h.leading(n), n);
      const Spectrum small = eigenvalues(h.leading(n - 1), n - 1);
      const double slack = 1e-12 * h.norm();
      for (std::size_t i = 0; i + 1 < n; ++i) {
        CHECK(big.energies[i] <= small.energies[i] + slack);
        CHECK(small.energies[i] <= big.energies[i + 1] + slack);
      }
    }
  }

  TEST_CASE("levels do not depend on the basis scale for a large basis") {
    const EFieldSystem e{1.2, 0.8, 0.3, 2};
    const double ls = lambda_star(e);
    for (double f : {0.8, 1.25}) {
      const Spectrum s = solve(e, f * ls, 400, 4);
      for (int n = 0; n < 4; ++n) CHECK(std::fabs(s.energies[n] - analytic_spectrum(e, n)) < 1e-8);
    }
  }

  TEST_CASE("Zeeman splitting") {
    const BFieldSystem base{1.0, 1.0, 0.0, 1.0, 1, 0};
    CHECK(analytic_spectrum(base, 0) == 2.5);
    BFieldSystem up{1.0, 1.0, 0.2, 1.0, 1, 1};
    BFieldSystem down = up;
    down.azimuthal = -1;
    CHECK(analytic_spectrum(down, 0) - analytic_spectrum(up, 0) == doctest::Approx(0.2).epsilon(1e-14));
    const Spectrum su = solve(up, 0.9 * lambda_star(up), 200, 3);
    const Spectrum sd = solve(down, 0.9 * lambda_star(down), 200, 3);
    for (int n = 0; n < 3; ++n) CHECK(sd.energies[n] - su.energies[n] == doctest::Approx(0.2).epsilon(1e-10));
    CHECK_THROWS_AS(analytic_spectrum_bfield(BFieldSystem{1.0, 1.0, 0.2, 1.0, 1, 2}, 0), DomainError);
  }

  TEST_CASE("Larmor form") {
    CHECK(larmor_frequency(1.0, 0.4, 1.0) == doctest::Approx(0.2).epsilon(1e-15));
    for (int mu : {-2, 0, 1}) {
      const BFieldSystem b{1.1, -1.0, 0.4, 1.0, 2, mu};
      CHECK(larmor_level(1.1, 1.0, 0.4, 1.0, 2, mu, 1) == doctest::Approx(analytic_spectrum(b, 1)).epsilon(1e-14));
    }
  }

  TEST_CASE("bitwise determinism") {
    const BFieldSystem b{0.8, 2.0, 0.4, 1.5, 3, 0};
    const Spectrum a = solve(b, 1.1, 150, 6);
    const Spectrum c = solve(b, 1.1, 150, 6);
    CHECK(a.energies == c.energies);
  }
}
