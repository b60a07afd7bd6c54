/*
 * lifshitz.cpp -- Matsubara summation and (x, y) quadratures.
 *
 * The sum over l is evaluated as the l = 0 term (once, under the active
 * zero-frequency prescription) plus 2*sum_{l>=1}; the factor 2 folds the
 * negative indices using the evenness of eps(i|xi|). Terms are reduced
 * in fixed l-order with compensated summation so the OpenMP kernel and
 * the serial reference produce identical bits at any thread count.
 */
#include "casimir/lifshitz.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

// y-integration window; the integrands carry e^{-y}, so 50 e-folds past
// the lower limit exceed double precision. The remainder is bounded
// analytically and folded into the error estimate.
constexpr double y_window = 50.0;
constexpr double x_cutoff = 700.0; // e^{-x} underflows well before this

enum class IntegrandKind { energy, force };

double point_integrand(IntegrandKind kind, const ReflectionPair& r, double y) {
  const double e = std::exp(-y);
  if (kind == IntegrandKind::energy)
    return y * (std::log1p(-r.r1_sq * e) + std::log1p(-r.r2_sq * e));
  return y * y *
         (r.r1_sq * e / (1.0 - r.r1_sq * e) + r.r2_sq * e / (1.0 - r.r2_sq * e));
}

// Bound on the dropped tail beyond Y (uses r^2 <= 1, e^{-Y} << 1).
double window_tail_bound(IntegrandKind kind, double up) {
  const double e = std::exp(-up);
  if (kind == IntegrandKind::energy) return 2.2 * (up + 1.0) * e;
  return 2.2 * (up * (up + 2.0) + 2.0) * e;
}

struct TermValue {
  double value = 0.0;
  double err = 0.0;
  bool converged = true;
};

// One Matsubara term: integral over y in [x_l, x_l + window].
TermValue term_integral(IntegrandKind kind, const DielectricModel& model,
                        double a, double x, const QuadratureSettings& q,
                        double abs_floor) {
  TermValue tv;
  if (x > x_cutoff) return tv;
  auto f = [&](double y) {
    return point_integrand(kind, reflection_pair(model, a, {x, y}), y);
  };
  const QuadResult r = integrate_adaptive(f, x, x + y_window, q.rel_tol,
                                          abs_floor, q.max_subdivisions);
  tv.value = r.value;
  tv.err = r.abs_error + window_tail_bound(kind, x + y_window);
  tv.converged = r.converged;
  return tv;
}

TermValue zero_term_integral(IntegrandKind kind, const DielectricModel& model,
                             Prescription presc, double a,
                             const QuadratureSettings& q) {
  auto f = [&](double y) {
    return point_integrand(kind, zero_frequency_reflection(model, presc, y, a),
                           y);
  };
  const QuadResult r =
      integrate_adaptive(f, 0.0, y_window, q.rel_tol, 0.0, q.max_subdivisions);
  TermValue tv;
  tv.value = r.value;
  tv.err = r.abs_error + window_tail_bound(kind, y_window);
  tv.converged = r.converged;
  return tv;
}

// Fixed-order compensated accumulation of 2*I_l with the stopping rule:
// last term below matsubara_tail_tol * |accumulated| AND l >= T_eff/T.
struct Scan {
  double sum = 0.0, comp = 0.0;
  double err_sum = 0.0;
  double prev_abs = 0.0, last_abs = 0.0;
  long terms = 0;
  long l_min = 1;
  double tail_tol = 0.0;
  bool done = false;
  bool quad_failure = false;
  long failed_l = -1;

  void add(double v) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }

  // returns true once the stopping rule fires
  bool push(long l, const TermValue& tv) {
    if (!tv.converged && !quad_failure) {
      quad_failure = true;
      failed_l = l;
    }
    const double contrib = 2.0 * tv.value;
    add(contrib);
    err_sum += 2.0 * tv.err;
    prev_abs = last_abs;
    last_abs = std::fabs(contrib);
    ++terms;
    if (l >= l_min && last_abs <= tail_tol * std::fabs(sum)) done = true;
    return done;
  }
};

struct SumOutcome {
  double phi = 0.0;      // I_0 + 2*sum_{l>=1} I_l
  double err = 0.0;      // quadrature + window tails + Matsubara tail
  long terms_used = 1;
  bool converged = true;
  long failed_l = -1;
  bool quad_failure = false;
};

SumOutcome matsubara_sum(IntegrandKind kind, const DielectricModel& model,
                         Prescription presc, double a, double T,
                         const QuadratureSettings& q, Execution exec) {
  const double t = T / effective_temperature_K(a);

  SumOutcome out;
  const TermValue zero = zero_term_integral(kind, model, presc, a, q);
  const TermValue first =
      term_integral(kind, model, a, 2.0 * M_PI * t, q, 0.0);

  Scan scan;
  scan.tail_tol = q.matsubara_tail_tol;
  scan.l_min = static_cast<long>(std::ceil(1.0 / t));
  if (scan.l_min < 1) scan.l_min = 1;
  scan.add(zero.value);
  scan.err_sum = zero.err;
  if (!zero.converged || !first.converged) {
    scan.quad_failure = true;
    scan.failed_l = zero.converged ? 1 : 0;
  }
  scan.push(1, first);

  // absolute floor for later terms, set by the leading magnitudes
  const double scale = std::max(std::fabs(zero.value), std::fabs(first.value));
  const double abs_floor = 0.01 * q.rel_tol * scale;

  auto term = [&](long l) {
    return term_integral(kind, model, a, 2.0 * M_PI * l * t, q, abs_floor);
  };

  long l = 2;
#ifdef _OPENMP
  const bool run_parallel = exec == Execution::parallel && omp_get_max_threads() > 1;
#else
  const bool run_parallel = false;
  (void)exec;
#endif

  if (run_parallel) {
#ifdef _OPENMP
    const long block = std::max(16L, 4L * omp_get_max_threads());
    std::vector<TermValue> slots(static_cast<std::size_t>(block));
    while (!scan.done && l <= q.max_terms) {
      const long hi = std::min(l + block - 1, q.max_terms);
      const long n = hi - l + 1;
#pragma omp parallel for schedule(dynamic)
      for (long i = 0; i < n; ++i)
        slots[static_cast<std::size_t>(i)] = term(l + i);
      for (long i = 0; i < n; ++i)
        if (scan.push(l + i, slots[static_cast<std::size_t>(i)])) break;
      l = hi + 1;
    }
#endif
  } else {
    while (!scan.done && l <= q.max_terms) {
      if (scan.push(l, term(l))) break;
      ++l;
    }
  }

  // geometric tail bound: later ratios are below e^{-2 pi t} for the
  // poly*exp decay of the terms
  const double ratio = std::exp(-2.0 * M_PI * t);
  const double tail =
      ratio < 1.0 ? scan.last_abs * ratio / (1.0 - ratio) : scan.last_abs;

  out.phi = scan.sum;
  out.err = scan.err_sum + tail;
  out.terms_used = scan.terms + 1; // l = 0 included
  out.converged = scan.done && !scan.quad_failure;
  out.quad_failure = scan.quad_failure;
  out.failed_l = scan.failed_l;
  return out;
}

void check_plates_config(const PlatesConfig& cfg) {
  if (!(cfg.gap_um > 0.0)) throw std::domain_error("a must be positive");
  if (!(cfg.temperature_K > 0.0))
    throw std::domain_error("temperature must be positive (the T = 0 case "
                            "uses the zero-temperature route)");
}

[[noreturn]] void throw_sum_failure(const SumOutcome& out, double value,
                                    double err, const char* what) {
  EnergyResult partial;
  partial.value_eV_per_um2 = value;
  partial.est_error_eV_per_um2 = err;
  partial.terms_used = out.terms_used;
  char msg[160];
  if (out.quad_failure)
    std::snprintf(msg, sizeof(msg),
                  "%s: y-integral did not converge within max_subdivisions "
                  "(l = %ld)",
                  what, out.failed_l);
  else
    std::snprintf(msg, sizeof(msg),
                  "%s: Matsubara sum not converged within max_terms = %ld "
                  "(last/abs = %.3e)",
                  what, out.terms_used - 1, err);
  throw convergence_error(msg, partial);
}

} // namespace

void QuadratureSettings::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw std::domain_error("quad: rel_tol must lie in (0, 1)");
  if (!(matsubara_tail_tol > 0.0 && matsubara_tail_tol < 1.0))
    throw std::domain_error("quad: matsubara_tail_tol must lie in (0, 1)");
  if (max_terms <= 0) throw std::domain_error("quad: max_terms must be positive");
  if (max_subdivisions <= 0)
    throw std::domain_error("quad: max_subdivisions must be positive");
}

double EnergyResult::value_J_per_m2() const {
  return value_eV_per_um2 * eV_per_um2_to_J_per_m2;
}

double EnergyResult::est_error_J_per_m2() const {
  return est_error_eV_per_um2 * eV_per_um2_to_J_per_m2;
}

double EntropyResult::value_J_per_m2_K() const {
  return value_eV_per_um2_K * eV_per_um2_to_J_per_m2;
}

MatsubaraPoint matsubara_xi(long l, double temperature_K) {
  if (l < 0) throw std::domain_error("matsubara_xi: l must be non-negative");
  if (!(temperature_K > 0.0))
    throw std::domain_error("matsubara_xi: temperature must be positive "
                            "(T = 0 uses force_plates_zero_temperature)");
  MatsubaraPoint p;
  p.l = l;
  p.hbar_xi_eV = 2.0 * M_PI * l * k_B_eV_per_K * temperature_K;
  p.xi_rad_per_s = p.hbar_xi_eV / hbar_eV_s;
  return p;
}

double effective_temperature_K(double gap_um) {
  if (!(gap_um > 0.0)) throw std::domain_error("a must be positive");
  return hbar_c_eV_um / (2.0 * gap_um * k_B_eV_per_K);
}

EnergyResult free_energy_plates(const PlatesConfig& cfg,
                                const DielectricModel& model,
                                Prescription prescription,
                                const QuadratureSettings& quad,
                                Execution exec) {
  check_plates_config(cfg);
  quad.validate();
  const double prefac = k_B_eV_per_K * cfg.temperature_K /
                        (16.0 * M_PI * cfg.gap_um * cfg.gap_um);
  const SumOutcome out = matsubara_sum(IntegrandKind::energy, model,
                                       prescription, cfg.gap_um,
                                       cfg.temperature_K, quad, exec);
  if (!out.converged)
    throw_sum_failure(out, prefac * out.phi, prefac * out.err,
                      "free_energy_plates");
  EnergyResult r;
  r.value_eV_per_um2 = prefac * out.phi;
  r.est_error_eV_per_um2 = prefac * out.err;
  r.terms_used = out.terms_used;
  return r;
}

double force_plates(const PlatesConfig& cfg, const DielectricModel& model,
                    Prescription prescription, const QuadratureSettings& quad,
                    Execution exec) {
  check_plates_config(cfg);
  quad.validate();
  const double prefac = -k_B_eV_per_K * cfg.temperature_K /
                        (16.0 * M_PI * std::pow(cfg.gap_um, 3));
  const SumOutcome out =
      matsubara_sum(IntegrandKind::force, model, prescription, cfg.gap_um,
                    cfg.temperature_K, quad, exec);
  if (!out.converged)
    throw_sum_failure(out, prefac * out.phi * eV_per_um3_to_Pa,
                      std::fabs(prefac) * out.err * eV_per_um3_to_Pa,
                      "force_plates");
  return prefac * out.phi * eV_per_um3_to_Pa;
}

namespace {

// T = 0 double integral: outer over x, inner over y in [x, x + window].
struct ZeroTOutcome {
  double integral = 0.0; // integral over x of the inner y-integral
  double err = 0.0;
};

ZeroTOutcome zero_temperature_integral(IntegrandKind kind,
                                       const DielectricModel& model, double a,
                                       const QuadratureSettings& q) {
  constexpr double x_max = 60.0;
  const double inner_rel = q.rel_tol / 30.0;

  auto inner = [&](double x, double floor) {
    auto f = [&](double y) {
      return point_integrand(kind, reflection_pair(model, a, {x, y}), y);
    };
    const QuadResult r = integrate_adaptive(f, x, x + y_window, inner_rel,
                                            floor, q.max_subdivisions);
    if (!r.converged) {
      char msg[120];
      std::snprintf(msg, sizeof(msg),
                    "zero-temperature inner y-integral did not converge "
                    "(x = %.6g)",
                    x);
      throw convergence_error(msg, EnergyResult{r.value, r.abs_error, 1});
    }
    return r.value;
  };

  // leading magnitude near x = 0 sets the absolute floor for the rest
  const double lead = std::fabs(inner(1e-3, 0.0));
  const double floor = 0.01 * inner_rel * lead;

  const QuadResult outer = integrate_adaptive(
      [&](double x) { return inner(x, floor); }, 0.0, x_max, q.rel_tol, 0.0,
      q.max_subdivisions);
  if (!outer.converged)
    throw convergence_error(
        "zero-temperature outer x-integral did not converge",
        EnergyResult{outer.value, outer.abs_error, 1});

  ZeroTOutcome out;
  out.integral = outer.value;
  // inner floors integrate to at most floor*x_max; dropped x-tail decays
  // like the inner integral itself
  out.err = outer.abs_error + floor * x_max + window_tail_bound(kind, x_max);
  return out;
}

} // namespace

EnergyResult
free_energy_plates_zero_temperature(double gap_um, const DielectricModel& model,
                                    const QuadratureSettings& quad) {
  if (!(gap_um > 0.0)) throw std::domain_error("a must be positive");
  quad.validate();
  const ZeroTOutcome out =
      zero_temperature_integral(IntegrandKind::energy, model, gap_um, quad);
  const double prefac =
      hbar_c_eV_um / (32.0 * M_PI * M_PI * std::pow(gap_um, 3));
  EnergyResult r;
  r.value_eV_per_um2 = prefac * out.integral;
  r.est_error_eV_per_um2 = prefac * out.err;
  r.terms_used = 1;
  return r;
}

double force_plates_zero_temperature(double gap_um,
                                     const DielectricModel& model,
                                     const QuadratureSettings& quad) {
  if (!(gap_um > 0.0)) throw std::domain_error("a must be positive");
  quad.validate();
  const ZeroTOutcome out =
      zero_temperature_integral(IntegrandKind::force, model, gap_um, quad);
  const double prefac =
      -hbar_c_eV_um / (32.0 * M_PI * M_PI * std::pow(gap_um, 4));
  return prefac * out.integral * eV_per_um3_to_Pa;
}

double force_sphere_plate(double radius_um, const PlatesConfig& cfg,
                          const DielectricModel& model,
                          Prescription prescription,
                          const QuadratureSettings& quad, Execution exec) {
  if (!(radius_um > 0.0))
    throw std::domain_error("sphere radius must be positive");
  if (radius_um < 100.0 * cfg.gap_um)
    std::fprintf(stderr,
                 "warning: proximity-force mapping assumes R >> a "
                 "(R/a = %.3g)\n",
                 radius_um / cfg.gap_um);
  const EnergyResult e =
      free_energy_plates(cfg, model, prescription, quad, exec);
  return 2.0 * M_PI * radius_um * e.value_eV_per_um2 * eV_per_um_to_N;
}

EntropyResult entropy_plates(const PlatesConfig& cfg,
                             const DielectricModel& model,
                             Prescription prescription,
                             const QuadratureSettings& quad, Execution exec) {
  check_plates_config(cfg);
  const double T = cfg.temperature_K;
  double h = std::max(0.01 * T, 0.5);
  if (h >= T) h = 0.5 * T;

  auto energy = [&](double temp) {
    PlatesConfig c{cfg.gap_um, temp};
    return free_energy_plates(c, model, prescription, quad, exec);
  };

  const EnergyResult ep = energy(T + h), em = energy(T - h);
  const EnergyResult ep2 = energy(T + 0.5 * h), em2 = energy(T - 0.5 * h);

  const double d1 = (ep.value_eV_per_um2 - em.value_eV_per_um2) / (2.0 * h);
  const double d2 = (ep2.value_eV_per_um2 - em2.value_eV_per_um2) / h;
  const double richardson = (4.0 * d2 - d1) / 3.0;

  const double noise_d1 =
      (ep.est_error_eV_per_um2 + em.est_error_eV_per_um2) / (2.0 * h);
  const double noise_d2 =
      (ep2.est_error_eV_per_um2 + em2.est_error_eV_per_um2) / h;

  EntropyResult s;
  s.value_eV_per_um2_K = -richardson;
  s.est_error_eV_per_um2_K =
      std::fabs(d2 - d1) / 3.0 + (4.0 * noise_d2 + noise_d1) / 3.0;
  s.high_noise =
      s.est_error_eV_per_um2_K > std::fabs(s.value_eV_per_um2_K) / 10.0;
  return s;
}

} // namespace casimir
