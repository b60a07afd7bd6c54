/*
 * dielectric.cpp -- permittivities, reflection coefficients, and
 *                   zero-frequency prescriptions.
 */
#include "casimir/dielectric.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

namespace {

bool effectively_plasma(const DielectricModel& m) {
  return m.kind() == ModelKind::plasma ||
         (m.kind() == ModelKind::drude && m.gamma_eV() == 0.0);
}

// x^2*(eps(i xi) - 1) at the dimensionless frequency x. Evaluating this
// combination directly keeps the x -> 0 end of the Drude branch finite
// and the plasma branch exactly x-independent.
double x2_eps_minus_1(const DielectricModel& m, double gap_um, double x) {
  const double wt = 2.0 * gap_um * m.omega_p_eV() / hbar_c_eV_um;
  switch (m.kind()) {
  case ModelKind::plasma:
    return wt * wt;
  case ModelKind::drude: {
    if (m.gamma_eV() == 0.0) return wt * wt;
    const double gt = 2.0 * gap_um * m.gamma_eV() / hbar_c_eV_um;
    return wt * wt * x / (x + gt);
  }
  case ModelKind::constant_dielectric:
    return x * x * (m.eps0() - 1.0);
  case ModelKind::ideal_metal:
    break;
  }
  throw std::logic_error("x2_eps_minus_1: ideal metal has no finite eps");
}

std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

} // namespace

DielectricModel DielectricModel::ideal_metal() {
  return {ModelKind::ideal_metal, 0.0, 0.0, 0.0};
}

DielectricModel DielectricModel::plasma(double omega_p_eV) {
  if (!(omega_p_eV > 0.0))
    throw std::domain_error("plasma: omega_p must be positive");
  return {ModelKind::plasma, omega_p_eV, 0.0, 0.0};
}

DielectricModel DielectricModel::drude(double omega_p_eV, double gamma_eV) {
  if (!(omega_p_eV > 0.0))
    throw std::domain_error("drude: omega_p must be positive");
  if (!(gamma_eV >= 0.0))
    throw std::domain_error("drude: gamma must be non-negative");
  return {ModelKind::drude, omega_p_eV, gamma_eV, 0.0};
}

DielectricModel DielectricModel::constant_dielectric(double eps0) {
  if (!(eps0 >= 1.0))
    throw std::domain_error("constant_dielectric: eps0 must be >= 1");
  return {ModelKind::constant_dielectric, 0.0, 0.0, eps0};
}

bool DielectricModel::dissipative() const {
  return kind_ == ModelKind::drude && gamma_eV_ > 0.0;
}

std::string DielectricModel::id() const {
  switch (kind_) {
  case ModelKind::ideal_metal:
    return "ideal";
  case ModelKind::plasma:
    return "plasma:" + format_param(omega_p_eV_);
  case ModelKind::drude:
    return "drude:" + format_param(omega_p_eV_) + "," + format_param(gamma_eV_);
  case ModelKind::constant_dielectric:
    return "dielectric:" + format_param(eps0_);
  }
  return "?";
}

DielectricModel DielectricModel::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : spec.substr(colon + 1);

  auto parse_num = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("model: bad number '" + s + "' in '" +
                                  spec + "'");
    }
    if (used != s.size())
      throw std::invalid_argument("model: bad number '" + s + "' in '" +
                                  spec + "'");
    return v;
  };

  if (name == "ideal") {
    if (!args.empty())
      throw std::invalid_argument("model: 'ideal' takes no parameters");
    return ideal_metal();
  }
  if (name == "plasma") {
    if (args.empty())
      throw std::invalid_argument("model: expected plasma:<omega_p_eV>");
    return plasma(parse_num(args));
  }
  if (name == "drude") {
    const auto comma = args.find(',');
    if (args.empty() || comma == std::string::npos)
      throw std::invalid_argument(
          "model: expected drude:<omega_p_eV>,<gamma_eV>");
    return drude(parse_num(args.substr(0, comma)),
                 parse_num(args.substr(comma + 1)));
  }
  if (name == "dielectric") {
    if (args.empty())
      throw std::invalid_argument("model: expected dielectric:<eps0>");
    return constant_dielectric(parse_num(args));
  }
  throw std::invalid_argument(
      "model: unknown model '" + name +
      "' (expected ideal | plasma:<wp> | drude:<wp>,<gamma> | "
      "dielectric:<eps0>)");
}

double permittivity(const DielectricModel& model, double hbar_xi_eV) {
  if (!(hbar_xi_eV >= 0.0))
    throw std::domain_error("permittivity: frequency must be non-negative");
  switch (model.kind()) {
  case ModelKind::ideal_metal:
    return std::numeric_limits<double>::infinity();
  case ModelKind::constant_dielectric:
    return model.eps0();
  case ModelKind::plasma:
    break;
  case ModelKind::drude:
    break;
  }
  if (hbar_xi_eV == 0.0)
    throw std::domain_error("permittivity: zero-frequency permittivity is "
                            "singular; use zero_frequency_reflection");
  const double wp = model.omega_p_eV();
  if (effectively_plasma(model))
    return 1.0 + (wp / hbar_xi_eV) * (wp / hbar_xi_eV);
  return 1.0 + wp * wp / (hbar_xi_eV * (hbar_xi_eV + model.gamma_eV()));
}

ReflectionPair reflection_pair(const DielectricModel& model, double gap_um,
                               DimlessPoint pt) {
  if (!(gap_um > 0.0))
    throw std::domain_error("reflection_pair: gap must be positive");
  if (!(pt.x > 0.0))
    throw std::domain_error("reflection_pair: x must be positive; the "
                            "zero-frequency point goes through "
                            "zero_frequency_reflection");
  if (!(pt.y >= pt.x))
    throw std::domain_error("reflection_pair: require y >= x");

  if (model.kind() == ModelKind::ideal_metal) return {1.0, 1.0};

  const double x = pt.x, y = pt.y;
  const double v = x2_eps_minus_1(model, gap_um, x); // x^2*(eps-1) >= 0
  const double eps = 1.0 + v / (x * x);
  const double kt = std::sqrt(y * y + v); // dimensionless 2a*k_l

  // r2 = (kt - y)/(kt + y) rewritten to avoid cancellation when v << y^2;
  // r1 likewise via eps^2 y^2 - kt^2 = (eps-1)((eps+1) y^2 - x^2).
  const double r2 = v / ((kt + y) * (kt + y));
  const double r1 =
      (eps - 1.0) * ((eps + 1.0) * y * y - x * x) /
      ((eps * y + kt) * (eps * y + kt));
  return {r1 * r1, r2 * r2};
}

ReflectionPair zero_frequency_reflection(const DielectricModel& model,
                                         Prescription prescription, double y,
                                         double gap_um) {
  if (!(y > 0.0))
    throw std::domain_error("zero_frequency_reflection: y must be positive");
  if (!(gap_um > 0.0))
    throw std::domain_error("zero_frequency_reflection: gap must be positive");

  if (model.kind() == ModelKind::ideal_metal ||
      prescription == Prescription::ideal_metal_sdm)
    return {1.0, 1.0};

  if (effectively_plasma(model)) {
    // r2(0,y) = (y - sqrt(y^2 + wt^2))/(y + sqrt(y^2 + wt^2)), squared;
    // identical under as_is and modified (eps-1 ~ 1/x^2 makes the TE
    // coefficient x-independent).
    const double wt = 2.0 * gap_um * model.omega_p_eV() / hbar_c_eV_um;
    const double s = std::sqrt(y * y + wt * wt);
    const double r2 = wt * wt / ((s + y) * (s + y));
    return {1.0, r2 * r2};
  }

  if (model.kind() == ModelKind::constant_dielectric) {
    const double r1 = (model.eps0() - 1.0) / (model.eps0() + 1.0);
    return {r1 * r1, 0.0};
  }

  // dissipative Drude
  if (prescription == Prescription::as_is) return {1.0, 0.0};
  // modified: TE coefficient at the diagonal x = y
  const ReflectionPair diag = reflection_pair(model, gap_um, {y, y});
  return {1.0, diag.r2_sq};
}

double real_photon_reflection(double eps0) {
  if (!(eps0 >= 1.0))
    throw std::domain_error("real_photon_reflection: eps0 must be >= 1");
  const double s = std::sqrt(eps0);
  const double r = (s - 1.0) / (s + 1.0);
  return r * r;
}

ScatteringS11 scattering_s11(const DielectricModel& model, double gap_um,
                             double hbar_xi_eV, double k_perp_per_um) {
  if (!(gap_um > 0.0))
    throw std::domain_error("scattering_s11: gap must be positive");
  if (!(hbar_xi_eV > 0.0))
    throw std::domain_error(
        "scattering_s11: scattering solution undefined at zero frequency");
  if (!(k_perp_per_um >= 0.0))
    throw std::domain_error("scattering_s11: k_perp must be non-negative");
  if (model.kind() == ModelKind::ideal_metal)
    throw std::domain_error(
        "scattering_s11: requires a finite dielectric permittivity");

  const double eps = permittivity(model, hbar_xi_eV);
  if (eps == 1.0)
    throw std::domain_error(
        "scattering_s11: q = k (eps = 1); scattering solution is arbitrary");

  const double xi_c = hbar_xi_eV / hbar_c_eV_um; // xi/c [1/um]
  const double q = std::sqrt(xi_c * xi_c + k_perp_per_um * k_perp_per_um);
  const double k = std::sqrt(eps * xi_c * xi_c + k_perp_per_um * k_perp_per_um);

  // Eq. form rescaled by e^{-q a} so only the physical growth factor
  // e^{(k-q)a} remains in the exponentials.
  const double grow = std::exp((k - q) * gap_um);
  const double damp = std::exp(-2.0 * q * gap_um);
  const double s_perp = 4.0 * k * q * grow /
                        ((q + k) * (q + k) - (q - k) * (q - k) * damp);
  const double s_par =
      4.0 * eps * k * q * grow /
      ((eps * q + k) * (eps * q + k) - (eps * q - k) * (eps * q - k) * damp);
  return {s_par, s_perp};
}

const char* to_string(Prescription p) {
  switch (p) {
  case Prescription::as_is:
    return "as-is";
  case Prescription::ideal_metal_sdm:
    return "sdm";
  case Prescription::modified:
    return "modified";
  }
  return "?";
}

Prescription parse_prescription(const std::string& s) {
  if (s == "as-is" || s == "asis") return Prescription::as_is;
  if (s == "sdm" || s == "ideal-metal-sdm") return Prescription::ideal_metal_sdm;
  if (s == "modified") return Prescription::modified;
  throw std::invalid_argument(
      "prescription: expected as-is | sdm | modified, got '" + s + "'");
}

} // namespace casimir
