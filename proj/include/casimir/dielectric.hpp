/*
 * dielectric.hpp -- dielectric models on the imaginary frequency axis,
 *                   reflection coefficients and zero-frequency rules.
 */
#pragma once

#include <string>

namespace casimir {

enum class ModelKind { ideal_metal, plasma, drude, constant_dielectric };

/// Rule fixing the l = 0 term of the Matsubara sum, where the
/// scattering problem can be ill-defined for dissipative media.
enum class Prescription {
  as_is,           // literal xi -> 0 limit of the reflection coefficients
  ideal_metal_sdm, // Schwinger-DeRaad-Milton: r1^2 = r2^2 = 1
  modified,        // TE coefficient continued along the diagonal x = y
};

/// Permittivity model evaluated at imaginary frequencies, eps(i*xi).
/// Immutable after construction; safe to share across threads.
class DielectricModel {
public:
  static DielectricModel ideal_metal();
  static DielectricModel plasma(double omega_p_eV);
  static DielectricModel drude(double omega_p_eV, double gamma_eV);
  static DielectricModel constant_dielectric(double eps0);

  /// Parses "ideal", "plasma:<wp>", "drude:<wp>,<gamma>", "dielectric:<eps0>".
  static DielectricModel parse(const std::string& spec);

  ModelKind kind() const { return kind_; }
  double omega_p_eV() const { return omega_p_eV_; }
  double gamma_eV() const { return gamma_eV_; }
  double eps0() const { return eps0_; }

  /// True only for Drude with gamma > 0. A Drude model with gamma = 0
  /// is routed through the plasma code path everywhere.
  bool dissipative() const;

  std::string id() const;

private:
  DielectricModel(ModelKind k, double wp, double g, double e)
      : kind_(k), omega_p_eV_(wp), gamma_eV_(g), eps0_(e) {}

  ModelKind kind_;
  double omega_p_eV_;
  double gamma_eV_;
  double eps0_;
};

/// Squared reflection coefficients for the two polarizations:
/// r1 = TM (parallel), r2 = TE (perpendicular).
struct ReflectionPair {
  double r1_sq;
  double r2_sq;
};

/// Point in the dimensionless variables x = 2a*xi/c, y = 2a*q.
/// Admissible points satisfy y >= x >= 0.
struct DimlessPoint {
  double x;
  double y;
};

struct MatsubaraPoint {
  long l;
  double xi_rad_per_s;
  double hbar_xi_eV;
};

/// eps(i*xi) with hbar*xi in eV. Ideal metal returns +infinity (the
/// sentinel is never fed back into arithmetic; coefficient code treats
/// the ideal metal symbolically). Result is >= 1 for every model.
double permittivity(const DielectricModel& model, double hbar_xi_eV);

/// Squared Fresnel coefficients at a dimensionless point with x > 0.
ReflectionPair reflection_pair(const DielectricModel& model, double gap_um,
                               DimlessPoint pt);

/// The (r1^2, r2^2) pair to use inside the l = 0 integrand at this y,
/// under the given zero-frequency prescription.
ReflectionPair zero_frequency_reflection(const DielectricModel& model,
                                         Prescription prescription, double y,
                                         double gap_um);

/// Zero-frequency reflection of real photons off a dielectric:
/// ((sqrt(eps0)-1)/(sqrt(eps0)+1))^2.
double real_photon_reflection(double eps0);

struct ScatteringS11 {
  double s11_parallel;
  double s11_perpendicular;
};

/// One-dimensional scattering solution at xi > 0 (hbar*xi in eV,
/// k_perp in 1/um). Defined only where q != k, i.e. eps(i*xi) != 1;
/// used as a cross-check for the reflection-coefficient route.
ScatteringS11 scattering_s11(const DielectricModel& model, double gap_um,
                             double hbar_xi_eV, double k_perp_per_um);

const char* to_string(Prescription p);
Prescription parse_prescription(const std::string& s);

} // namespace casimir
