/*
 * quadrature.hpp -- adaptive Gauss-Kronrod (G7,K15) integration on a
 *                   finite interval, worst-interval-first subdivision.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace casimir {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod nodes (positive half), Kronrod weights, and the
// embedded 7-point Gauss weights (nonzero on odd-indexed nodes).
struct GkNode {
  double x, wk, wg;
};

inline constexpr GkNode gk15[8] = {
    {0.000000000000000000, 0.209482141084727828, 0.417959183673469388},
    {0.405845151377397167, 0.190350578064785410, 0.381830050505118945},
    {0.741531185599394440, 0.140653259715525919, 0.279705391489276668},
    {0.949107912342758525, 0.063092092629978553, 0.129484966168869693},
    {0.207784955007898468, 0.204432940075298892, 0.0},
    {0.586087235467691130, 0.169004726639267903, 0.0},
    {0.864864423359769073, 0.104790010322250184, 0.0},
    {0.991455371120812639, 0.022935322010529225, 0.0},
};

template <class F>
inline void qk15(F&& f, double lo, double hi, double& value, double& err,
                 double& resabs) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  double fv[15];
  const double f0 = f(mid);
  fv[0] = f0;
  double resk = gk15[0].wk * f0;
  double resg = gk15[0].wg * f0;
  resabs = gk15[0].wk * std::fabs(f0);
  for (int i = 1; i < 8; ++i) {
    const double dx = half * gk15[i].x;
    const double fa = f(mid - dx);
    const double fb = f(mid + dx);
    fv[2 * i - 1] = fa;
    fv[2 * i] = fb;
    resk += gk15[i].wk * (fa + fb);
    resg += gk15[i].wg * (fa + fb);
    resabs += gk15[i].wk * (std::fabs(fa) + std::fabs(fb));
  }

  const double mean = resk * 0.5;
  double resasc = gk15[0].wk * std::fabs(f0 - mean);
  for (int i = 1; i < 8; ++i) {
    resasc += gk15[i].wk *
              (std::fabs(fv[2 * i - 1] - mean) + std::fabs(fv[2 * i] - mean));
  }

  value = resk * half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);
  err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(err, 50.0 * eps * resabs);
  }
}

} // namespace detail

// Integrates f over [lo, hi] until the summed error estimate satisfies
// max(abs_tol, rel_tol*|I|) or max_subdivisions splits have been spent.
// The node set is a deterministic function of the inputs.
template <class F>
QuadResult integrate_adaptive(F&& f, double lo, double hi, double rel_tol,
                              double abs_tol, int max_subdivisions) {
  struct Segment {
    double lo, hi, value, err;
  };

  QuadResult out;
  if (!(hi > lo)) {
    out.converged = true;
    return out;
  }

  std::vector<Segment> segs;
  segs.reserve(64);
  double resabs_total = 0.0;
  {
    Segment s{lo, hi, 0.0, 0.0};
    double resabs = 0.0;
    detail::qk15(f, lo, hi, s.value, s.err, resabs);
    resabs_total = resabs;
    segs.push_back(s);
  }

  const double eps = std::numeric_limits<double>::epsilon();
  for (int n = 0; n < max_subdivisions; ++n) {
    double total = 0.0, total_err = 0.0;
    std::size_t worst = 0;
    double worst_err = -1.0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      total += segs[i].value;
      total_err += segs[i].err;
      if (segs[i].err > worst_err) {
        worst_err = segs[i].err;
        worst = i;
      }
    }
    const double floor = 100.0 * eps * resabs_total;
    const double target =
        std::max({abs_tol, rel_tol * std::fabs(total), floor});
    if (total_err <= target) {
      out.value = total;
      out.abs_error = total_err;
      out.subdivisions = n;
      out.converged = true;
      return out;
    }

    Segment s = segs[worst];
    const double mid = 0.5 * (s.lo + s.hi);
    if (mid <= s.lo || mid >= s.hi) {
      // interval at floating-point resolution; cannot refine further
      break;
    }
    Segment a{s.lo, mid, 0.0, 0.0}, b{mid, s.hi, 0.0, 0.0};
    double ra = 0.0, rb = 0.0;
    detail::qk15(f, a.lo, a.hi, a.value, a.err, ra);
    detail::qk15(f, b.lo, b.hi, b.value, b.err, rb);
    resabs_total += ra + rb - std::fabs(s.value);
    segs[worst] = a;
    segs.push_back(b);
  }

  double total = 0.0, total_err = 0.0;
  for (const auto& s : segs) {
    total += s.value;
    total_err += s.err;
  }
  out.value = total;
  out.abs_error = total_err;
  out.subdivisions = static_cast<int>(segs.size()) - 1;
  out.converged =
      total_err <= std::max({abs_tol, rel_tol * std::fabs(total),
                             100.0 * eps * resabs_total});
  return out;
}

} // namespace casimir
