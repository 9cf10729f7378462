#include <doctest.h>

#include <cmath>
#include <complex>

#include "tra/errors.hpp"
#include "tra/recursion.hpp"
#include "tra/specfun.hpp"

using namespace tra;

namespace {
const double kNus[] = {-0.5, 0.5, 1.5, 3.0};
}

TEST_SUITE("specfun") {
  TEST_CASE("laguerre low degrees") {
    CHECK(laguerre(0, 0.5, 3.7) == 1.0);
    CHECK(laguerre(1, 0.5, 1.0) == 0.5);
    CHECK(laguerre(2, 0.5, 1.0) == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(laguerre(1, 1.5, 0.0) == 2.5);
  }

  TEST_CASE("laguerre against mpmath values") {
    CHECK(laguerre(10, 1.5, 7.3) == doctest::Approx(-4.0304774391223020312).epsilon(1e-13));
    CHECK(laguerre(20, 0.5, 12.25) == doctest::Approx(-24.900641708275943206).epsilon(1e-12));
    CHECK(laguerre(30, -0.5, 45.2) == doctest::Approx(751618953.74619877011).epsilon(1e-13));
    CHECK(laguerre(50, 3.0, 47.0) == doctest::Approx(-30279551.94145336969).epsilon(1e-13));
  }

  TEST_CASE("laguerre_sequence matches single evaluations") {
    const auto seq = laguerre_sequence(25, 1.5, 9.0);
    REQUIRE(seq.size() == 26);
    for (int n = 0; n <= 25; ++n) CHECK(seq[n] == laguerre(n, 1.5, 9.0));
  }

  TEST_CASE("argument checks") {
    CHECK_THROWS_AS(laguerre(-1, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(laguerre(2, -1.0, 1.0), DomainError);
    CHECK_THROWS_AS(laguerre(2, 0.5, -0.1), DomainError);
    CHECK_THROWS_AS(laguerre_via_1f1(2, -1.5, 1.0), DomainError);
    CHECK_THROWS_AS(log_gamma_ratio(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(meixner_pollaczek(2, 0.0, {0.0, 1.0}, 0.5), DomainError);
  }

  TEST_CASE("1F1 series examples") {
    CHECK(laguerre_via_1f1(0, 0.5, 2.0) == 1.0);
    CHECK(laguerre_via_1f1(2, 0.5, 1.0) == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(laguerre_via_1f1(1, 1.5, 0.0) == 2.5);
    CHECK(laguerre_via_1f1(50, 3.0, 47.0) == doctest::Approx(-30279551.94145336969).epsilon(1e-14));
  }

  TEST_CASE("recurrence agrees with the 1F1 series (n <= 50, y <= 50)") {
    double worst = 0.0;
    for (int n = 0; n <= 50; ++n) {
      for (double nu : kNus) {
        for (int i = 0; i <= 100; ++i) {
          const double y = 0.5 * i;
          const double ref = laguerre_via_1f1(n, nu, y);
          worst = std::max(worst, std::fabs(laguerre(n, nu, y) - ref) / std::max(1.0, std::fabs(ref)));
        }
      }
    }
    CHECK(worst <= 1e-10);
  }

  TEST_CASE("recurrence agrees with the 1F1 series (n <= 30, y <= 100)") {
    double worst = 0.0;
    for (int n = 0; n <= 30; ++n) {
      for (double nu : kNus) {
        for (int i = 0; i <= 50; ++i) {
          const double y = 2.0 * i;
          const double ref = laguerre_via_1f1(n, nu, y);
          worst = std::max(worst, std::fabs(laguerre(n, nu, y) - ref) / std::max(1.0, std::fabs(ref)));
        }
      }
    }
    CHECK(worst <= 1e-11);
  }

  TEST_CASE("lowering identity") {
    CHECK(laguerre_derivative_action(0, 0.5, 2.0) == 0.0);
    // L_1 = nu + 1 - y, so y L_1' = -y.
    CHECK(laguerre_derivative_action(1, 0.5, 2.0) == doctest::Approx(-2.0).epsilon(1e-15));
    // L_2^nu = ((nu+1)(nu+2) - 2(nu+2) y + y^2) / 2, so y L_2' = -(nu+2) y + y^2.
    CHECK(laguerre_derivative_action(2, 1.5, 3.0) == doctest::Approx(-3.5 * 3.0 + 9.0).epsilon(1e-14));
  }

  TEST_CASE("differential equation residual") {
    CHECK(verify_laguerre_ode(0, 0.5, 2.0) == 0.0);
    CHECK(std::fabs(verify_laguerre_ode(3, 1.5, 0.7)) < 1e-9);
    CHECK(std::fabs(verify_laguerre_ode(10, 0.5, 25.0)) < 1e-7 * std::max(1.0, std::fabs(laguerre(10, 0.5, 25.0))));
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n) {
      for (double nu : kNus) {
        for (double y : {0.05, 0.9, 4.0, 13.0, 33.0}) {
          worst = std::max(worst, std::fabs(verify_laguerre_ode(n, nu, y)) /
                                      std::max(1.0, std::fabs(laguerre(n, nu, y))));
        }
      }
    }
    CHECK(worst < 1e-9);
    CHECK_THROWS_AS(verify_laguerre_ode(2, 0.5, 0.0), DomainError);
  }

  TEST_CASE("log_gamma_ratio") {
    CHECK(log_gamma_ratio(1.0, 1.0) == 0.0);
    CHECK(log_gamma_ratio(2.5, 1.5) == std::log(1.5));
    CHECK(log_gamma_ratio(101.0, 100.0) == std::log(100.0));
    CHECK(log_gamma_ratio(10.3, 3.7) == doctest::Approx(12.053964459472970463).epsilon(4e-16));
    CHECK(log_gamma_ratio(0.7, 45.2) == doctest::Approx(-125.81595469608092105).epsilon(4e-16));
    CHECK(log_gamma_ratio(10000.0, 9999.5) == doctest::Approx(4.6051326847380444915).epsilon(4e-16));
    CHECK(log_gamma_ratio(3.7, 10.3) == -log_gamma_ratio(10.3, 3.7));
  }

  TEST_CASE("Meixner-Pollaczek closed form against mpmath recurrence") {
    const double theta = std::acosh(2.0);
    CHECK(theta == doctest::Approx(1.3169578969248167086).epsilon(1e-15));
    const double xs[] = {-3.0, 0.5, 7.0};
    const double want[] = {39.711943311281576698, 510.57418810641866581, 5686.8237619836276989};
    for (int i = 0; i < 3; ++i) {
      const std::complex<double> y(0.0, -xs[i] / (2.0 * std::sinh(theta)));
      const std::complex<double> f = meixner_pollaczek(5, 1.25, y, theta);
      CHECK(f.real() == doctest::Approx(want[i]).epsilon(1e-12));
      CHECK(std::fabs(f.imag()) < 1e-10 * want[i]);
    }
    CHECK(meixner_pollaczek(0, 1.25, {0.0, 3.0}, 0.7) == std::complex<double>(1.0, 0.0));
  }

  TEST_CASE("Meixner-Pollaczek n = 0 step of the recurrence") {
    const double mu = 1.25;
    const double theta = 0.9;
    const std::complex<double> y(0.0, -0.4);
    // [2 i y sinh + 2 mu cosh] f_0 = sqrt(2 mu) f_1
    const std::complex<double> f1 =
        (2.0 * std::complex<double>(0.0, 1.0) * y * std::sinh(theta) + 2.0 * mu * std::cosh(theta)) /
        std::sqrt(2.0 * mu);
    CHECK(std::abs(meixner_pollaczek(1, mu, y, theta) - f1) < 1e-14);
  }

  TEST_CASE("Meixner-Pollaczek closed form vs forward recurrence on a grid") {
    double worst = 0.0;
    for (double mu : {0.25, 0.75, 1.25, 2.75}) {
      for (double theta : {0.1, 0.5, 1.3169578969248167, 2.5}) {
        const RecursionCoeffs c = meixner_pollaczek_coeffs(mu, theta);
        for (double x : {-20.0, -3.0, 0.0, 1.0, 7.0, 40.0}) {
          const PolySequence seq = run_three_term(c, x, 30);
          const std::complex<double> y(0.0, -x / (2.0 * std::sinh(theta)));
          for (int n = 0; n <= 30; ++n) {
            const double want = seq.values[n];
            worst = std::max(worst, std::abs(meixner_pollaczek(n, mu, y, theta) - want) /
                                        std::max(1.0, std::fabs(want)));
          }
        }
      }
    }
    CHECK(worst <= 1e-10);
  }

  TEST_CASE("standard and printed couplings of the recurrence") {
    const double mu = 1.25;
    const double theta = 0.7;
    const std::complex<double> y(0.3, 0.0);
    double standard = 0.0;
    double printed_matched = 0.0;
    double printed_other = 0.0;
    for (int n = 0; n < 15; ++n) {
      const double scale = std::max(1.0, std::abs(meixner_pollaczek(n + 1, mu, y, theta)));
      standard = std::max(standard, std::abs(mp_recurrence_residual(n, mu, y, theta, MPRecurrenceForm::standard, 0.0)) / scale);
      printed_matched = std::max(printed_matched,
                                 std::abs(mp_recurrence_residual(n, mu, y, theta, MPRecurrenceForm::printed, 2 * mu - 1)) / scale);
      printed_other = std::max(printed_other,
                               std::abs(mp_recurrence_residual(n, mu, y, theta, MPRecurrenceForm::printed, 2 * mu + 0.5)) / scale);
    }
    CHECK(standard < 1e-12);
    CHECK(printed_matched < 1e-12);
    CHECK(printed_other > 1e-3);
  }

  TEST_CASE("closed form as usually printed fails the recurrence") {
    const double mu = 0.75;
    const double theta = 1.1;
    const std::complex<double> y(0.0, -0.8);
    const RecursionCoeffs c = meixner_pollaczek_coeffs(mu, theta);
    const double x = 1.6 * std::sinh(theta);  // x = 2 i y sinh(theta)
    const PolySequence seq = run_three_term(c, x, 6);
    double gap = 0.0;
    for (int n = 1; n <= 6; ++n) {
      gap = std::max(gap, std::abs(meixner_pollaczek_printed(n, mu, y, theta) - seq.values[n]));
    }
    CHECK(gap > 1e-2);
  }
}
