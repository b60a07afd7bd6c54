/*
 * lifshitz.hpp -- Matsubara sums and quadratures for the Casimir free
 *                 energy, force, entropy, and sphere-plate mapping.
 */
#pragma once

#include <stdexcept>
#include <string>

#include "casimir/dielectric.hpp"

namespace casimir {

struct PlatesConfig {
  double gap_um;
  double temperature_K;
};

/// Truncation and tolerance policy for the Matsubara sum and the
/// y-integrals. Tolerances are relative and must lie in (0, 1).
struct QuadratureSettings {
  double rel_tol = 1e-9;
  double matsubara_tail_tol = 1e-10;
  long max_terms = 1000000;
  int max_subdivisions = 200;

  void validate() const;
};

struct EnergyResult {
  double value_eV_per_um2 = 0.0;
  double est_error_eV_per_um2 = 0.0;
  long terms_used = 1; // Matsubara indices evaluated, l = 0 included

  double value_J_per_m2() const;
  double est_error_J_per_m2() const;
};

struct EntropyResult {
  double value_eV_per_um2_K = 0.0;
  double est_error_eV_per_um2_K = 0.0;
  bool high_noise = false; // error estimate exceeds |S|/10

  double value_J_per_m2_K() const;
};

/// Execution policy for the Matsubara sum. The parallel kernel and the
/// serial reference produce bit-identical results: terms are reduced in
/// fixed l-order regardless of how they were evaluated.
enum class Execution { serial, parallel };

/// Thrown when the Matsubara sum or a quadrature fails to converge
/// within the configured caps; carries the partial result.
class convergence_error : public std::runtime_error {
public:
  convergence_error(const std::string& what, EnergyResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const EnergyResult& partial() const { return partial_; }

private:
  EnergyResult partial_;
};

/// xi_l = 2*pi*l*k_B*T/hbar. Requires T > 0 and l >= 0.
MatsubaraPoint matsubara_xi(long l, double temperature_K);

/// k_B*T_eff = hbar*c/(2a).
double effective_temperature_K(double gap_um);

/// Free energy per unit area between parallel plates at T > 0:
/// the l = 0 term (under the given prescription) plus 2*sum_{l>=1} of
/// y-integrals, prefactor k_B*T/(16*pi*a^2). Negative for all
/// supported models.
EnergyResult free_energy_plates(const PlatesConfig& cfg,
                                const DielectricModel& model,
                                Prescription prescription,
                                const QuadratureSettings& quad = {},
                                Execution exec = Execution::parallel);

/// Pressure between parallel plates at T > 0 [Pa]; negative
/// (attractive). Equals -d/da of free_energy_plates.
double force_plates(const PlatesConfig& cfg, const DielectricModel& model,
                    Prescription prescription,
                    const QuadratureSettings& quad = {},
                    Execution exec = Execution::parallel);

/// T = 0 limit via the double integral over (x, y); remains valid for
/// dissipative media. [Pa]
double force_plates_zero_temperature(double gap_um,
                                     const DielectricModel& model,
                                     const QuadratureSettings& quad = {});

/// T = 0 free energy per unit area (double-integral route); the
/// baseline for relative temperature corrections.
EnergyResult
free_energy_plates_zero_temperature(double gap_um,
                                    const DielectricModel& model,
                                    const QuadratureSettings& quad = {});

/// Proximity Force Theorem: F = 2*pi*R*E_plates(a) [N]. Valid for
/// R >> a; warns on stderr when R < 100*a.
double force_sphere_plate(double radius_um, const PlatesConfig& cfg,
                          const DielectricModel& model,
                          Prescription prescription,
                          const QuadratureSettings& quad = {},
                          Execution exec = Execution::parallel);

/// S = -dE/dT by 5-point central differences with one Richardson step;
/// step h = max(0.01*T, 0.5 K), clamped below T.
EntropyResult entropy_plates(const PlatesConfig& cfg,
                             const DielectricModel& model,
                             Prescription prescription,
                             const QuadratureSettings& quad = {},
                             Execution exec = Execution::parallel);

} // namespace casimir
