/*
 * constants.hpp -- physical constants and unit conversions.
 *
 * Unit policy: model parameters in eV (hbar*omega convention), lengths
 * in micrometers, temperatures in kelvin. All internal computation uses
 * the dimensionless variables x = 2*a*xi/c and y = 2*a*q, so SI-scale
 * magnitudes never enter the quadratures.
 */
#pragma once

namespace casimir {

inline constexpr double hbar_c_eV_um = 0.1973269804;      // hbar*c [eV um]
inline constexpr double k_B_eV_per_K = 8.617333262e-5;    // Boltzmann [eV/K]
inline constexpr double hbar_eV_s = 6.582119569e-16;      // hbar [eV s]
inline constexpr double zeta3 = 1.2020569031595943;       // Riemann zeta(3)

// 1 eV = 1.602176634e-19 J (exact); 1 um^2 = 1e-12 m^2, etc.
inline constexpr double eV_per_um2_to_J_per_m2 = 1.602176634e-7;
inline constexpr double eV_per_um3_to_Pa = 1.602176634e-1;
inline constexpr double eV_per_um_to_N = 1.602176634e-13;

} // namespace casimir
