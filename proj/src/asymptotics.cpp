/*
 * asymptotics.cpp
 */
#include "casimir/asymptotics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "casimir/lifshitz.hpp"

namespace casimir {

namespace {

void require_params(const PlasmaAsymptoticsInput& in) {
  if (!(in.gap_um > 0.0)) throw std::domain_error("a must be positive");
  if (!(in.omega_p_eV > 0.0))
    throw std::domain_error("omega_p must be positive");
  if (!(in.temperature_K >= 0.0))
    throw std::domain_error("temperature must be non-negative");
}

void require_low_T(const PlasmaAsymptoticsInput& in) {
  require_params(in);
  char msg[96];
  if (!(in.t() < 0.5)) {
    std::snprintf(msg, sizeof(msg),
                  "low-T expansion requires T/T_eff < 0.5 (got %.3g)", in.t());
    throw std::domain_error(msg);
  }
  if (!(in.delta0_um() / in.gap_um < 0.25)) {
    std::snprintf(msg, sizeof(msg),
                  "low-T expansion requires delta0/a < 0.25 (got %.3g)",
                  in.delta0_um() / in.gap_um);
    throw std::domain_error(msg);
  }
}

} // namespace

double PlasmaAsymptoticsInput::t() const {
  return temperature_K / effective_temperature_K(gap_um);
}

double low_T_energy_plasma(const PlasmaAsymptoticsInput& in) {
  require_low_T(in);
  const double a = in.gap_um;
  const double t = in.t();
  const double d = in.delta0_um() / a;
  const double t3 = t * t * t, t4 = t3 * t;
  const double pi3 = M_PI * M_PI * M_PI;
  const double braces = 1.0 + 45.0 * zeta3 / pi3 * t3 - t4 -
                        4.0 * d * (1.0 - 45.0 * zeta3 / (2.0 * pi3) * t3 + t4);
  return -M_PI * M_PI * hbar_c_eV_um / (720.0 * a * a * a) * braces;
}

double low_T_force_plasma(const PlasmaAsymptoticsInput& in) {
  require_low_T(in);
  const double a = in.gap_um;
  const double t = in.t();
  const double d = in.delta0_um() / a;
  const double t3 = t * t * t;
  const double pi3 = M_PI * M_PI * M_PI;
  const double braces = 1.0 + t3 * t / 3.0 -
                        16.0 / 3.0 * d * (1.0 - 45.0 * zeta3 / (8.0 * pi3) * t3);
  return -M_PI * M_PI * hbar_c_eV_um / (240.0 * a * a * a * a) * braces *
         eV_per_um3_to_Pa;
}

HighTAsymptotes high_T_limits_plasma(const PlasmaAsymptoticsInput& in) {
  require_params(in);
  if (!(in.t() > 2.0)) {
    char msg[96];
    std::snprintf(msg, sizeof(msg),
                  "high-T expansion requires T/T_eff > 2 (got %.3g)", in.t());
    throw std::domain_error(msg);
  }
  const double a = in.gap_um;
  const double d = in.delta0_um() / a;
  const double kT = k_B_eV_per_K * in.temperature_K;
  HighTAsymptotes out;
  out.energy_eV_per_um2 = -kT * zeta3 / (8.0 * M_PI * a * a) * (1.0 - 2.0 * d);
  out.force_Pa =
      -kT * zeta3 / (4.0 * M_PI * a * a * a) * (1.0 - 3.0 * d) * eV_per_um3_to_Pa;
  return out;
}

double relative_temperature_correction(double energy_at_T,
                                       double energy_at_0) {
  if (energy_at_0 == 0.0)
    throw std::domain_error(
        "relative_temperature_correction: zero baseline energy");
  return (energy_at_T - energy_at_0) / energy_at_0;
}

} // namespace casimir
