#include "tra/systems.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <type_traits>

#include "tra/errors.hpp"

namespace tra {
namespace {

void check_common(double omega, int ell) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be positive and finite");
  if (ell < 0) throw DomainError("ell must be non-negative");
}

double quartic(double x) {
  const double x2 = x * x;
  return x2 * x2;
}

}  // namespace

void validate(const EFieldSystem& sys) {
  check_common(sys.omega, sys.ell);
  if (!std::isfinite(sys.charge)) throw DomainError("charge must be finite");
  if (!(sys.field >= 0.0) || !std::isfinite(sys.field)) {
    throw DomainError("electric field strength must be non-negative and finite");
  }
  const double confining = quartic(sys.omega) + 2.0 * sys.charge * sys.field;
  if (!(confining > 0.0)) {
    std::ostringstream msg;
    msg << "non-confining electric-field system: omega^4 + 2 q zeta = " << confining << " <= 0";
    throw NonConfiningError(msg.str());
  }
}

void validate(const BFieldSystem& sys) {
  check_common(sys.omega, sys.ell);
  if (!std::isfinite(sys.charge)) throw DomainError("charge must be finite");
  if (!(sys.field >= 0.0) || !std::isfinite(sys.field)) {
    throw DomainError("magnetic field strength must be non-negative and finite");
  }
  if (!(sys.light_speed > 0.0) || !std::isfinite(sys.light_speed)) {
    throw DomainError("speed of light c must be positive and finite");
  }
  if (std::abs(sys.azimuthal) > sys.ell) {
    std::ostringstream msg;
    msg << "azimuthal quantum number " << sys.azimuthal << " outside [-ell, ell] for ell = " << sys.ell;
    throw DomainError(msg.str());
  }
}

void validate(const System& sys) {
  std::visit([](const auto& s) { validate(s); }, sys);
}

int ell_of(const System& sys) {
  return std::visit([](const auto& s) { return s.ell; }, sys);
}

std::string describe(const System& sys) {
  auto num = [](double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
  };
  if (const auto* e = std::get_if<EFieldSystem>(&sys)) {
    return "efield omega=" + num(e->omega) + " q=" + num(e->charge) + " zeta=" + num(e->field) +
           " ell=" + std::to_string(e->ell);
  }
  const auto& b = std::get<BFieldSystem>(sys);
  return "bfield omega=" + num(b.omega) + " q=" + num(b.charge) + " B=" + num(b.field) +
         " c=" + num(b.light_speed) + " ell=" + std::to_string(b.ell) +
         " mu_az=" + std::to_string(b.azimuthal);
}

double quadratic_coefficient(const System& sys) {
  if (const auto* e = std::get_if<EFieldSystem>(&sys)) {
    return 0.5 * quartic(e->omega) + e->charge * e->field;
  }
  const auto& b = std::get<BFieldSystem>(sys);
  const double qb = b.charge * b.field / b.light_speed;
  return 0.5 * quartic(b.omega) + 0.25 * qb * qb;
}

double xi_efield(const EFieldSystem& sys, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("xi_efield: lambda must be positive");
  const double l4 = quartic(lambda);
  return quartic(sys.omega) / (4.0 * l4) + sys.charge * sys.field / (2.0 * l4) - 0.25;
}

double xi_bfield(const BFieldSystem& sys, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("xi_bfield: lambda must be positive");
  const double l4 = quartic(lambda);
  const double qb = sys.charge * sys.field;
  const double c = sys.light_speed;
  return quartic(sys.omega) / (4.0 * l4) + qb * qb / (8.0 * l4 * c * c) - 0.25;
}

Coupling coupling(const System& sys, double lambda) {
  validate(sys);
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive and finite");
  Coupling c;
  c.lambda = lambda;
  c.xi = std::visit(
      [&](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, EFieldSystem>) {
          return xi_efield(s, lambda);
        } else {
          return xi_bfield(s, lambda);
        }
      },
      sys);
  if (std::fabs(c.xi) <= Coupling::kZeroTolerance) c.xi = 0.0;
  c.eta = 2.0 * lambda * lambda * (c.xi + 0.25);
  return c;
}

double lambda_star(const System& sys) {
  validate(sys);
  return std::pow(2.0 * quadratic_coefficient(sys), 0.25);
}

double paramagnetic_shift(const BFieldSystem& sys) {
  return sys.charge * sys.field * sys.azimuthal / (2.0 * sys.light_speed);
}

double paramagnetic_shift(const System& sys) {
  if (const auto* b = std::get_if<BFieldSystem>(&sys)) return paramagnetic_shift(*b);
  return 0.0;
}

}  // namespace tra
