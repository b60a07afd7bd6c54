/*
 * cli.cpp -- argument parsing, output writers, and the consistency
 *            check battery behind the `check` subcommand.
 */
#include "casimir/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"

namespace casimir::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string num15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

struct Range {
  double lo = 0.0, hi = 0.0;
  int count = 0;

  std::vector<double> grid() const {
    std::vector<double> g(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
      g[static_cast<std::size_t>(i)] =
          lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    return g;
  }
};

Range parse_range(const std::string& s, const char* what) {
  Range r;
  char trail = 0;
  if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &r.lo, &r.hi, &r.count, &trail) !=
      3)
    throw std::invalid_argument(std::string(what) +
                                ": expected <min>:<max>:<count>, got '" + s +
                                "'");
  if (!(r.lo > 0.0))
    throw std::invalid_argument(std::string(what) + ": min must be positive");
  if (!(r.hi >= r.lo))
    throw std::invalid_argument(std::string(what) + ": max must be >= min");
  if (r.count < 2)
    throw std::invalid_argument(std::string(what) + ": count must be >= 2");
  return r;
}

struct CommonOpts {
  std::string model_spec = "ideal";
  std::string prescription = "as-is";
  std::string output;
  std::string format = "csv";
  QuadratureSettings quad;
};

void add_common(CLI::App* sub, CommonOpts& c, bool with_model = true) {
  if (with_model) {
    sub->add_option("--model", c.model_spec,
                    "ideal | plasma:<wp_eV> | drude:<wp_eV>,<gamma_eV> | "
                    "dielectric:<eps0>");
    sub->add_option("--prescription", c.prescription,
                    "zero-frequency rule: as-is | sdm | modified");
  }
  sub->add_option("--output", c.output, "output path (default: stdout)");
  sub->add_option("--format", c.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--quad.rel-tol", c.quad.rel_tol, "quadrature relative tolerance")
      ->envname("CASIMIR_QUAD_RELTOL");
  sub->add_option("--quad.tail-tol", c.quad.matsubara_tail_tol,
                  "Matsubara truncation tolerance");
  sub->add_option("--quad.max-terms", c.quad.max_terms, "Matsubara term cap");
  sub->add_option("--quad.max-subdivisions", c.quad.max_subdivisions,
                  "adaptive subdivision cap per integral");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
  f << text;
}

// Zero-temperature baselines are reused across grid points.
class BaselineCache {
public:
  double energy(const DielectricModel& model, double a,
                const QuadratureSettings& quad) {
    const std::string key = model.id() + "@" + num15(a);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const double e =
        free_energy_plates_zero_temperature(a, model, quad).value_eV_per_um2;
    cache_.emplace(key, e);
    return e;
  }

private:
  std::map<std::string, double> cache_;
};

// ------------------------------------------------------------------ eval

struct EvalOpts {
  CommonOpts common;
  double a_um = 0.0;
  double T_K = -1.0;
  std::string geometry = "plates";
  double R_um = 100.0;
  bool want_delta_T = false;
  bool want_entropy = false;
};

int run_eval(const EvalOpts& o, std::ostream& out, std::ostream& err) {
  const DielectricModel model = DielectricModel::parse(o.common.model_spec);
  const Prescription presc = parse_prescription(o.common.prescription);
  if (!(o.a_um > 0.0)) throw std::domain_error("a must be positive");
  if (!(o.T_K >= 0.0)) throw std::domain_error("T must be non-negative");
  o.common.quad.validate();

  ordered_json j;
  j["command"] = "eval";
  j["model_id"] = model.id();
  j["prescription_id"] = to_string(presc);
  j["geometry"] = o.geometry;
  j["a_um"] = o.a_um;
  j["T_K"] = o.T_K;

  BaselineCache baselines;
  try {
    EnergyResult e;
    double force_Pa = 0.0;
    if (o.T_K > 0.0) {
      const PlatesConfig cfg{o.a_um, o.T_K};
      e = free_energy_plates(cfg, model, presc, o.common.quad);
      force_Pa = force_plates(cfg, model, presc, o.common.quad);
    } else {
      e = free_energy_plates_zero_temperature(o.a_um, model, o.common.quad);
      force_Pa = force_plates_zero_temperature(o.a_um, model, o.common.quad);
    }
    j["E_J_per_m2"] = e.value_J_per_m2();
    j["E_eV_per_um2"] = e.value_eV_per_um2;
    j["F_Pa"] = force_Pa;
    j["est_error_J_per_m2"] = e.est_error_J_per_m2();
    j["terms_used"] = e.terms_used;

    if (o.want_delta_T) {
      if (o.T_K > 0.0) {
        const double e0 = baselines.energy(model, o.a_um, o.common.quad);
        j["delta_T"] =
            relative_temperature_correction(e.value_eV_per_um2, e0);
      } else {
        j["delta_T"] = 0.0;
      }
    }
    if (o.want_entropy) {
      if (!(o.T_K > 0.0)) throw std::domain_error("entropy requires T > 0");
      const EntropyResult s = entropy_plates({o.a_um, o.T_K}, model, presc,
                                             o.common.quad);
      j["S_J_per_m2_K"] = s.value_J_per_m2_K();
      j["S_est_error_J_per_m2_K"] =
          s.est_error_eV_per_um2_K * eV_per_um2_to_J_per_m2;
      j["S_high_noise"] = s.high_noise;
    }
    if (o.geometry == "sphere-plate") {
      if (!(o.R_um > 0.0)) throw std::domain_error("R must be positive");
      if (o.R_um < 100.0 * o.a_um)
        err << "warning: proximity-force mapping assumes R >> a (R/a = "
            << num15(o.R_um / o.a_um) << ")\n";
      j["R_um"] = o.R_um;
      j["F_sphere_plate_N"] =
          2.0 * M_PI * o.R_um * e.value_eV_per_um2 * eV_per_um_to_N;
    }
  } catch (const convergence_error& ce) {
    j["error"] = "convergence";
    j["message"] = ce.what();
    j["partial_E_J_per_m2"] = ce.partial().value_J_per_m2();
    j["partial_est_error_J_per_m2"] = ce.partial().est_error_J_per_m2();
    j["terms_used"] = ce.partial().terms_used;
    j["quad"] = {{"rel_tol", o.common.quad.rel_tol},
                 {"matsubara_tail_tol", o.common.quad.matsubara_tail_tol},
                 {"max_terms", o.common.quad.max_terms},
                 {"max_subdivisions", o.common.quad.max_subdivisions}};
    emit(j.dump(2) + "\n", o.common.output, out);
    return 3;
  }

  j["quad"] = {{"rel_tol", o.common.quad.rel_tol},
               {"matsubara_tail_tol", o.common.quad.matsubara_tail_tol},
               {"max_terms", o.common.quad.max_terms},
               {"max_subdivisions", o.common.quad.max_subdivisions}};
  emit(j.dump(2) + "\n", o.common.output, out);
  return 0;
}

// ----------------------------------------------------------------- sweep

struct SweepOpts {
  CommonOpts common;
  std::string a_range, T_range;
  double a_um = 1.0;
  double T_K = 300.0;
  bool want_delta_T = false;
};

const char* const sweep_header =
    "a_um,T_K,model_id,prescription_id,E_J_per_m2,F_Pa,delta_T,"
    "est_error_J_per_m2";

int run_sweep(const SweepOpts& o, std::ostream& out, std::ostream& err) {
  const DielectricModel model = DielectricModel::parse(o.common.model_spec);
  const Prescription presc = parse_prescription(o.common.prescription);
  o.common.quad.validate();
  if (o.a_range.empty() == o.T_range.empty())
    throw std::invalid_argument(
        "sweep: exactly one of --a-range or --T-range is required");

  const bool over_a = !o.a_range.empty();
  const Range range =
      parse_range(over_a ? o.a_range : o.T_range, over_a ? "--a-range" : "--T-range");
  if (!over_a && !(o.a_um > 0.0)) throw std::domain_error("a must be positive");

  struct Row {
    double a, T;
    bool ok = false;
    double E_J = 0.0, F_Pa = 0.0, est_J = 0.0;
    std::optional<double> delta_T;
  };

  BaselineCache baselines;
  std::vector<Row> rows;
  bool any_failed = false;
  for (double g : range.grid()) {
    Row r;
    r.a = over_a ? g : o.a_um;
    r.T = over_a ? o.T_K : g;
    try {
      const PlatesConfig cfg{r.a, r.T};
      EnergyResult e;
      if (r.T > 0.0) {
        e = free_energy_plates(cfg, model, presc, o.common.quad);
        r.F_Pa = force_plates(cfg, model, presc, o.common.quad);
      } else {
        e = free_energy_plates_zero_temperature(r.a, model, o.common.quad);
        r.F_Pa = force_plates_zero_temperature(r.a, model, o.common.quad);
      }
      r.E_J = e.value_J_per_m2();
      r.est_J = e.est_error_J_per_m2();
      if (o.want_delta_T) {
        const double e0 = baselines.energy(model, r.a, o.common.quad);
        r.delta_T =
            relative_temperature_correction(e.value_eV_per_um2, e0);
      }
      r.ok = true;
    } catch (const convergence_error& ce) {
      err << "sweep: point a=" << num15(r.a) << " T=" << num15(r.T)
          << " failed: " << ce.what() << "\n";
      any_failed = true;
    }
    rows.push_back(r);
  }

  std::ostringstream body;
  if (o.common.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const Row& r : rows) {
      ordered_json j;
      j["a_um"] = r.a;
      j["T_K"] = r.T;
      j["model_id"] = model.id();
      j["prescription_id"] = to_string(presc);
      if (r.ok) {
        j["E_J_per_m2"] = r.E_J;
        j["F_Pa"] = r.F_Pa;
        if (r.delta_T) j["delta_T"] = *r.delta_T;
        j["est_error_J_per_m2"] = r.est_J;
      } else {
        j["error"] = "convergence";
      }
      arr.push_back(j);
    }
    body << arr.dump(2) << "\n";
  } else {
    body << sweep_header << "\n";
    for (const Row& r : rows) {
      body << num15(r.a) << ',' << num15(r.T) << ',' << model.id() << ','
           << to_string(presc) << ',';
      if (r.ok) {
        body << num15(r.E_J) << ',' << num15(r.F_Pa) << ','
             << (r.delta_T ? num15(*r.delta_T) : std::string()) << ','
             << num15(r.est_J);
      } else {
        body << ",,,";
      }
      body << '\n';
    }
  }
  emit(body.str(), o.common.output, out);
  return any_failed ? 4 : 0;
}

// ------------------------------------------------------------------ fig1

struct Fig1Opts {
  CommonOpts common;
  std::string a_range = "1.0:5.0:41";
  double T0_K = 300.0;
};

int run_fig1(const Fig1Opts& o, std::ostream& out, std::ostream& /*err*/) {
  o.common.quad.validate();
  if (!(o.T0_K > 0.0)) throw std::domain_error("T0 must be positive");
  const Range range = parse_range(o.a_range, "--a-range");

  const DielectricModel drude = DielectricModel::drude(12.5, 0.063);
  const DielectricModel diel = DielectricModel::constant_dielectric(7.0);

  BaselineCache baselines;
  std::ostringstream body;
  body << "a_um,delta_T_drude_modified,delta_T_drude_asis,"
          "delta_T_dielectric_eps7\n";
  for (double a : range.grid()) {
    const PlatesConfig cfg{a, o.T0_K};
    const double e0_drude = baselines.energy(drude, a, o.common.quad);
    const double e0_diel = baselines.energy(diel, a, o.common.quad);
    const double e_mod =
        free_energy_plates(cfg, drude, Prescription::modified, o.common.quad)
            .value_eV_per_um2;
    const double e_asis =
        free_energy_plates(cfg, drude, Prescription::as_is, o.common.quad)
            .value_eV_per_um2;
    const double e_diel =
        free_energy_plates(cfg, diel, Prescription::as_is, o.common.quad)
            .value_eV_per_um2;
    body << num15(a) << ','
         << num15(relative_temperature_correction(e_mod, e0_drude)) << ','
         << num15(relative_temperature_correction(e_asis, e0_drude)) << ','
         << num15(relative_temperature_correction(e_diel, e0_diel)) << '\n';
  }
  emit(body.str(), o.common.output, out);
  return 0;
}

// ----------------------------------------------------------------- check

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
  bool informational = false;
  std::string note;
};

struct CheckOpts {
  CommonOpts common;
};

int run_check(const CheckOpts& o, std::ostream& out, std::ostream& /*err*/) {
  o.common.quad.validate();
  const QuadratureSettings& quad = o.common.quad;
  const double rel = quad.rel_tol;
  auto widened = [rel](double nominal, double per_rel) {
    return std::max(nominal, per_rel * rel);
  };

  std::vector<CheckResult> checks;
  // pass defaults to measured <= bound; checks with a different sense
  // override it after creation
  auto add = [&checks](const char* name, double measured,
                       double bound) -> CheckResult& {
    CheckResult c;
    c.name = name;
    c.measured = measured;
    c.bound = bound;
    c.pass = measured <= bound;
    checks.push_back(std::move(c));
    return checks.back();
  };

  const DielectricModel plasma = DielectricModel::plasma(12.5);
  const DielectricModel drude = DielectricModel::drude(12.5, 0.063);

  { // ideal-metal closed form, T = 0 route
    const double f = force_plates_zero_temperature(1.0, DielectricModel::ideal_metal(), quad);
    const double closed = -M_PI * M_PI * hbar_c_eV_um / 240.0 * eV_per_um3_to_Pa;
    add("ideal_metal_closed_form_T0", std::fabs(f / closed - 1.0),
        widened(1e-6, 1e3));
  }
  { // force = -dE/da (5-point central difference)
    const double a = 1.0, h = 1e-3;
    auto E = [&](double gap) {
      return free_energy_plates({gap, 300.0}, plasma, Prescription::as_is, quad)
          .value_eV_per_um2;
    };
    const double dE = (E(a - 2 * h) - 8 * E(a - h) + 8 * E(a + h) - E(a + 2 * h)) /
                      (12.0 * h);
    const double f_fd = -dE * eV_per_um3_to_Pa;
    const double f = force_plates({a, 300.0}, plasma, Prescription::as_is, quad);
    add("force_energy_consistency", std::fabs(f_fd / f - 1.0),
        widened(1e-4, 5e3));
  }
  { // low-T plasma asymptotics
    const PlasmaAsymptoticsInput in{1.0, 57.0, 50.0};
    const double full =
        free_energy_plates({1.0, 57.0}, DielectricModel::plasma(50.0),
                           Prescription::as_is, quad)
            .value_eV_per_um2;
    add("low_T_plasma_asymptotics",
        std::fabs(low_T_energy_plasma(in) / full - 1.0), widened(1e-3, 1e3));
  }
  { // high-T plasma asymptotics
    const double a = 2.0;
    const double T = 5.1 * effective_temperature_K(a);
    const PlasmaAsymptoticsInput in{a, T, 4.0};
    const double full = free_energy_plates({a, T}, DielectricModel::plasma(4.0),
                                           Prescription::as_is, quad)
                            .value_eV_per_um2;
    add("high_T_plasma_asymptotics",
        std::fabs(high_T_limits_plasma(in).energy_eV_per_um2 / full - 1.0),
        widened(1e-2, 1e3));
  }
  { // gamma continuity of the modified prescription; discontinuity of as-is
    const DielectricModel nearly = DielectricModel::drude(12.5, 1e-6);
    const PlatesConfig cfg{1.0, 300.0};
    const double ep = free_energy_plates(cfg, plasma, Prescription::as_is, quad)
                          .value_eV_per_um2;
    const double em = free_energy_plates(cfg, nearly, Prescription::modified, quad)
                          .value_eV_per_um2;
    const double ea = free_energy_plates(cfg, nearly, Prescription::as_is, quad)
                          .value_eV_per_um2;
    add("gamma_continuity_modified", std::fabs(em - ep) / std::fabs(ep),
        widened(1e-4, 1e3));
    CheckResult& disc =
        add("gamma_discontinuity_asis", std::fabs(ea - ep) / std::fabs(ep), 1e-2);
    disc.pass = disc.measured > disc.bound; // the gap is the expected physics
    disc.note = "as-is zero-frequency rule is discontinuous in gamma; the gap "
                "must exceed the bound";
  }
  { // prescription equivalence for the plasma model
    const PlatesConfig cfg{1.0, 300.0};
    const double e1 = free_energy_plates(cfg, plasma, Prescription::as_is, quad)
                          .value_eV_per_um2;
    const double e2 = free_energy_plates(cfg, plasma, Prescription::modified, quad)
                          .value_eV_per_um2;
    add("prescription_equivalence_plasma", std::fabs(e2 - e1) / std::fabs(e1),
        widened(1e-8, 1e2));
  }

  // Entropy checks run at a fixed tight tolerance: they resolve ppm-level
  // differences of the free energy that loosened settings cannot see.
  QuadratureSettings tight = quad;
  tight.rel_tol = 1e-12;
  tight.matsubara_tail_tol = 1e-13;
  tight.max_terms = 5000000;
  { // Nernst: plasma entropy ~ T^2 at low T
    const double s2 = entropy_plates({1.0, 2.0}, plasma, Prescription::as_is, tight)
                          .value_eV_per_um2_K;
    const double s4 = entropy_plates({1.0, 4.0}, plasma, Prescription::as_is, tight)
                          .value_eV_per_um2_K;
    const double slope = std::log(s4 / s2) / std::log(2.0);
    add("nernst_plasma_T2_slope", std::fabs(slope - 2.0), 0.2);
  }
  { // SDM prescription: S(T->0) tends to a nonzero constant
    const double s1 = entropy_plates({1.0, 1.0}, plasma,
                                     Prescription::ideal_metal_sdm, tight)
                          .value_eV_per_um2_K;
    const double s2 = entropy_plates({1.0, 2.0}, plasma,
                                     Prescription::ideal_metal_sdm, tight)
                          .value_eV_per_um2_K;
    CheckResult& c =
        add("sdm_nonzero_entropy_at_0K", std::fabs(s2 / s1 - 1.0), 0.05);
    c.pass = s1 > 0.0 && c.measured < c.bound;
    c.informational = true;
    c.note = "paper-predicted violation of the Nernst theorem under the "
             "ideal-metal zero-frequency rule (expected)";
  }
  { // dissipative Drude with as-is rule: negative entropy at 300 K
    QuadratureSettings tq = quad;
    tq.rel_tol = std::min(quad.rel_tol, 1e-9);
    const double s = entropy_plates({1.0, 300.0}, drude, Prescription::as_is, tq)
                         .value_eV_per_um2_K;
    CheckResult& c = add("drude_asis_negative_entropy", s, 0.0);
    c.pass = s < 0.0;
    c.note = "entropy must come out negative here (the documented defect of "
             "the as-is rule for dissipative media)";
  }
  { // reflection coefficient bounds on random admissible points
    std::mt19937_64 rng(20260809u);
    std::uniform_real_distribution<double> ux(1e-3, 20.0), uy(0.0, 30.0),
        ua(0.1, 3.0);
    const DielectricModel models[] = {DielectricModel::ideal_metal(), plasma,
                                      drude,
                                      DielectricModel::constant_dielectric(7.0)};
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      const double x = ux(rng);
      const double y = x + uy(rng);
      const double a = ua(rng);
      const ReflectionPair r = reflection_pair(models[i % 4], a, {x, y});
      worst = std::max({worst, -r.r1_sq, -r.r2_sq, r.r1_sq - 1.0,
                        r.r2_sq - 1.0, r.r2_sq - r.r1_sq});
    }
    add("reflection_bounds_500pts", worst, 1e-12);
  }
  { // dielectric ordering r1(0) > r_photon > r2(0)
    double min_margin = 1.0;
    for (double e0 : {2.0, 7.0, 100.0}) {
      const ReflectionPair z = zero_frequency_reflection(
          DielectricModel::constant_dielectric(e0), Prescription::as_is, 1.0,
          1.0);
      const double rr = real_photon_reflection(e0);
      min_margin = std::min({min_margin, z.r1_sq - rr, rr - z.r2_sq});
    }
    CheckResult& c = add("dielectric_reflection_ordering", min_margin, 0.0);
    c.pass = min_margin > 0.0;
    c.note = "margin of r1(0) > r_photon > r2(0); must stay positive";
  }
  { // scattering <-> reflection identity
    std::mt19937_64 rng(77003u);
    std::uniform_real_distribution<double> uxi(0.3, 4.0), uk(0.05, 8.0),
        ua(0.2, 1.5);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double hbar_xi = uxi(rng), kp = uk(rng), a = ua(rng);
      const DielectricModel& m = (i % 2) ? plasma : drude;
      const ScatteringS11 s = scattering_s11(m, a, hbar_xi, kp);
      const double xi_c = hbar_xi / hbar_c_eV_um;
      const double q = std::sqrt(xi_c * xi_c + kp * kp);
      const double x = 2.0 * a * xi_c, y = 2.0 * a * q;
      const ReflectionPair r = reflection_pair(m, a, {x, y});
      const double eps = permittivity(m, hbar_xi);
      const double k = std::sqrt(eps * xi_c * xi_c + kp * kp);
      const double lhs_perp = -std::log(s.s11_perpendicular) - (q - k) * a -
                              std::log((q + k) * (q + k) / (4.0 * k * q));
      const double rhs_perp = std::log1p(-r.r2_sq * std::exp(-2.0 * a * q));
      const double lhs_par =
          -std::log(s.s11_parallel) - (q - k) * a -
          std::log((eps * q + k) * (eps * q + k) / (4.0 * eps * k * q));
      const double rhs_par = std::log1p(-r.r1_sq * std::exp(-2.0 * a * q));
      worst = std::max({worst, std::fabs(lhs_perp - rhs_perp),
                        std::fabs(lhs_par - rhs_par)});
    }
    add("scattering_reflection_identity", worst, 1e-12);
  }

  bool all_pass = true;
  for (const CheckResult& c : checks)
    if (!c.pass) all_pass = false;

  std::ostringstream body;
  if (o.common.format == "json") {
    ordered_json j;
    j["checks"] = ordered_json::array();
    for (const CheckResult& c : checks) {
      ordered_json e;
      e["name"] = c.name;
      e["measured"] = c.measured;
      e["bound"] = c.bound;
      e["pass"] = c.pass;
      if (c.informational) e["informational"] = true;
      if (!c.note.empty()) e["note"] = c.note;
      j["checks"].push_back(e);
    }
    j["all_pass"] = all_pass;
    j["rel_tol"] = rel;
    body << j.dump(2) << "\n";
  } else {
    for (const CheckResult& c : checks) {
      body << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
           << "  measured=" << num15(c.measured) << "  bound=" << num15(c.bound);
      if (c.informational) body << "  (informational)";
      body << "\n";
      if (!c.note.empty()) body << "       " << c.note << "\n";
    }
    body << (all_pass ? "all checks passed\n" : "CHECK FAILURES PRESENT\n");
  }
  emit(body.str(), o.common.output, out);
  return all_pass ? 0 : 5;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Casimir free energy and force between real-metal and "
               "dielectric plates (Lifshitz theory)"};
  app.require_subcommand(1);

  EvalOpts eval;
  auto* sub_eval = app.add_subcommand("eval", "single-point evaluation");
  add_common(sub_eval, eval.common);
  sub_eval->add_option("--a", eval.a_um, "gap width [um]")->required();
  sub_eval->add_option("--T", eval.T_K, "temperature [K] (0 selects the T=0 route)")
      ->required();
  sub_eval->add_option("--geometry", eval.geometry, "plates | sphere-plate")
      ->check(CLI::IsMember({"plates", "sphere-plate"}));
  sub_eval->add_option("--R", eval.R_um, "sphere radius [um]");
  sub_eval->add_flag("--delta-T", eval.want_delta_T,
                     "include the relative temperature correction");
  sub_eval->add_flag("--entropy", eval.want_entropy, "include entropy");

  SweepOpts sweep;
  auto* sub_sweep = app.add_subcommand("sweep", "parameter sweep (CSV/JSON)");
  add_common(sub_sweep, sweep.common);
  sub_sweep->add_option("--a-range", sweep.a_range, "<min>:<max>:<count> [um]");
  sub_sweep->add_option("--T-range", sweep.T_range, "<min>:<max>:<count> [K]");
  sub_sweep->add_option("--a", sweep.a_um, "fixed gap for a T-sweep [um]");
  sub_sweep->add_option("--T", sweep.T_K, "fixed temperature for an a-sweep [K]");
  sub_sweep->add_flag("--delta-T", sweep.want_delta_T,
                      "add the T=0 baseline column");

  Fig1Opts fig1;
  auto* sub_fig1 = app.add_subcommand(
      "fig1", "relative temperature correction curves vs separation");
  add_common(sub_fig1, fig1.common, /*with_model=*/false);
  sub_fig1->add_option("--a-range", fig1.a_range, "<min>:<max>:<count> [um]");
  sub_fig1->add_option("--T0", fig1.T0_K, "comparison temperature [K]");

  CheckOpts check;
  auto* sub_check = app.add_subcommand("check", "consistency-check report");
  add_common(sub_check, check.common, /*with_model=*/false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (sub_eval->parsed()) return run_eval(eval, out, err);
    if (sub_sweep->parsed()) return run_sweep(sweep, out, err);
    if (sub_fig1->parsed()) return run_fig1(fig1, out, err);
    return run_check(check, out, err);
  } catch (const convergence_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace casimir::cli
