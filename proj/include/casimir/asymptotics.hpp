/*
 * asymptotics.hpp -- closed-form low/high-temperature expansions for
 *                    the plasma model and the relative temperature
 *                    correction. Used as output and as test oracles
 *                    for the full Lifshitz evaluation.
 */
#pragma once

#include "casimir/constants.hpp"

namespace casimir {

/// Inputs for the perturbative plasma-model formulas. The expansions
/// are used only inside their validity windows; outside, the
/// operations refuse with a domain error naming the violated bound.
struct PlasmaAsymptoticsInput {
  double gap_um;
  double temperature_K;
  double omega_p_eV;

  double delta0_um() const { return hbar_c_eV_um / omega_p_eV; }
  double t() const; // T/T_eff with k_B*T_eff = hbar*c/(2a)
};

/// Low-temperature free energy per area [eV/um^2]:
/// -pi^2 hbar c/(720 a^3) * {1 + (45 zeta3/pi^3) t^3 - t^4
///   - 4 (delta0/a) [1 - (45 zeta3/(2 pi^3)) t^3 + t^4]}.
/// Window: t < 0.5 and delta0/a < 0.25.
double low_T_energy_plasma(const PlasmaAsymptoticsInput& in);

/// Low-temperature pressure [Pa]:
/// -pi^2 hbar c/(240 a^4) * {1 + t^4/3
///   - (16/3)(delta0/a) [1 - (45 zeta3/(8 pi^3)) t^3]}.
double low_T_force_plasma(const PlasmaAsymptoticsInput& in);

struct HighTAsymptotes {
  double energy_eV_per_um2;
  double force_Pa;
};

/// High-temperature limits (window t > 2):
/// E = -(k_B T zeta3/(8 pi a^2)) (1 - 2 delta0/a),
/// F = -(k_B T zeta3/(4 pi a^3)) (1 - 3 delta0/a).
HighTAsymptotes high_T_limits_plasma(const PlasmaAsymptoticsInput& in);

/// delta_T = (E(a,T0) - E(a,0)) / E(a,0); equals the sphere-plate
/// force correction.
double relative_temperature_correction(double energy_at_T, double energy_at_0);

} // namespace casimir
