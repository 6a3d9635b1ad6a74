#include "ahlab/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "ahlab/curvature.hpp"
#include "ahlab/linalg.hpp"
#include "ahlab/stencil.hpp"
#include "ahlab/yamabe.hpp"

namespace ahlab {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Static: return "static";
    case Verdict::NonStatic: return "non-static";
    default: return "inconclusive";
  }
}

namespace {

// Physical coefficients of either profile kind: radial p and angular q of
// g = p dt^2 + q h.
struct Physical {
  Dim dim;
  RadialGrid grid;
  std::vector<double> p, q;
};

Physical to_physical(const MetricProfile& m) {
  validate(m);
  const auto tab = sinh_table(m.grid);
  Physical ph{m.dim, m.grid, {}, {}};
  ph.p.resize(m.grid.size());
  ph.q.resize(m.grid.size());
  for (std::size_t i = 0; i < m.grid.size(); ++i) {
    const double s2 = tab.sh[i] * tab.sh[i];
    ph.p[i] = 1.0 / s2;
    ph.q[i] = m.a[i] / s2;
  }
  return ph;
}

Physical to_physical(const GeneralProfile& m) {
  validate(m);
  const auto tab = sinh_table(m.grid);
  Physical ph{m.dim, m.grid, {}, {}};
  ph.p.resize(m.grid.size());
  ph.q.resize(m.grid.size());
  for (std::size_t i = 0; i < m.grid.size(); ++i) {
    const double s2 = tab.sh[i] * tab.sh[i];
    ph.p[i] = m.P[i] / s2;
    ph.q[i] = m.Q[i] / s2;
  }
  return ph;
}

bool prefilter_on(const CurvatureField& cf, const RadialGrid& g, double lo, double hi,
                  double tol) {
  const auto [i0, i1] = window_indices(g, lo, hi, 2);
  double rmin = cf.R[i0], rmax = cf.R[i0];
  for (std::size_t i = i0; i <= i1; ++i) {
    rmin = std::min(rmin, cf.R[i]);
    rmax = std::max(rmax, cf.R[i]);
  }
  return rmax - rmin <= tol;
}

// Stacked radial static operator on the window: row block E1 is the angular
// component of L* f, block E2 the tt component, both divided by common
// metric factors so a kernel element zeroes each row.
StaticVerdict kernel_test(const Physical& ph, bool constant_R, double lo, double hi,
                          const StaticThresholds& th) {
  const auto [i0, i1] = window_indices(ph.grid, lo, hi, 20);
  if (i0 == 0 || i1 == ph.grid.size() - 1)
    throw error("static_kernel_test: window touches the grid edge");
  const std::size_t K = i1 - i0 + 1;
  const int n = ph.dim.n;
  const int width = 9;
  const double* tw = ph.grid.nodes.data() + i0;
  const double* pw = ph.p.data() + i0;
  const double* qw = ph.q.data() + i0;

  std::vector<std::size_t> off(K);
  std::vector<double> w1(K * width), w2(K * width);
  for (std::size_t i = 0; i < K; ++i) {
    std::size_t o = (i > 4) ? i - 4 : 0;
    o = std::min(o, K - width);
    off[i] = o;
    auto C = fd_weights(tw[i], tw + o, width, 2);
    for (int j = 0; j < width; ++j) {
      w1[i * width + j] = C[j * 3 + 1];
      w2[i * width + j] = C[j * 3 + 2];
    }
  }
  auto deriv = [&](const double* f, const std::vector<double>& w, std::size_t i) {
    double s = 0.0;
    for (int j = 0; j < width; ++j) s += w[i * width + j] * f[off[i] + j];
    return s;
  };

  std::vector<double> M(2 * K * K, 0.0);
  for (std::size_t i = 0; i < K; ++i) {
    const double pt = deriv(pw, w1, i);
    const double qt = deriv(qw, w1, i);
    const double qtt = deriv(qw, w2, i);
    const double rho = std::sqrt(qw[i]);
    const double sq = std::sqrt(pw[i]);
    const double rho_t = qt / (2.0 * rho);
    const double rho_tt = qtt / (2.0 * rho) - qt * qt / (4.0 * qw[i] * rho);
    const double rp = rho_t / sq;                            // d rho / d arclength
    const double rpp = (rho_tt - rho_t * pt / (2.0 * pw[i])) / pw[i];

    const double c_f = (n - 1) * rpp / rho;
    const double c_ft = -(n - 1) * (rp / rho) / sq;
    for (int j = 0; j < width; ++j) M[i * K + off[i] + j] += c_ft * w1[i * width + j];
    M[i * K + i] += c_f;

    const double d_ftt = -1.0 / pw[i];
    const double d_ft =
        pt / (2.0 * pw[i] * pw[i]) - (n - 1) * (rp / rho) / sq + (rp / rho) / sq;
    const double d_f = rpp / rho - (n - 2) * (1.0 - rp * rp) / (rho * rho);
    for (int j = 0; j < width; ++j)
      M[(K + i) * K + off[i] + j] += d_ftt * w2[i * width + j] + d_ft * w1[i * width + j];
    M[(K + i) * K + i] += d_f;
  }

  // discrete L^2 normalization: rows pick up sqrt of the node weight, columns
  // lose it, so sigma_min measures the operator between L^2(w) spaces
  std::vector<double> sw(K);
  sw[0] = std::sqrt(tw[1] - tw[0]);
  sw[K - 1] = std::sqrt(tw[K - 1] - tw[K - 2]);
  for (std::size_t i = 1; i + 1 < K; ++i) sw[i] = std::sqrt(0.5 * (tw[i + 1] - tw[i - 1]));
  std::vector<double> Mw(2 * K * K);
  for (std::size_t r = 0; r < 2 * K; ++r) {
    const double rowf = sw[r % K];
    for (std::size_t c = 0; c < K; ++c) Mw[r * K + c] = M[r * K + c] * rowf / sw[c];
  }

  std::vector<double> sigma, vt;
  linalg::svd(Mw, 2 * K, K, sigma, vt);

  StaticVerdict out;
  out.window_lo = lo;
  out.window_hi = hi;
  out.window_nodes = K;
  out.constant_curvature = constant_R;
  out.smallest_singular_value = sigma.back();
  out.largest_singular_value = sigma.front();
  out.candidate_potential.resize(K);
  double cmax = 0.0;
  for (std::size_t j = 0; j < K; ++j) {
    out.candidate_potential[j] = vt[(K - 1) * K + j] / sw[j];
    cmax = std::max(cmax, std::abs(out.candidate_potential[j]));
  }
  for (double& c : out.candidate_potential) c /= cmax;
  for (std::size_t r = 0; r < 2 * K; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < K; ++c) s += M[r * K + c] * out.candidate_potential[c];
    out.residual = std::max(out.residual, std::abs(s));
  }

  if (constant_R && out.smallest_singular_value <= th.static_tol && out.residual <= th.static_tol)
    out.verdict = Verdict::Static;
  else if (out.smallest_singular_value >= th.gap_tol)
    out.verdict = Verdict::NonStatic;
  else
    out.verdict = Verdict::Inconclusive;
  return out;
}

std::vector<double> area_radius(const Physical& ph) {
  std::vector<double> rho(ph.grid.size());
  for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = std::sqrt(ph.q[i]);
  return rho;
}

// Zero of the local-interpolant derivative inside [g[i], g[i+1]], found by
// bisection on an 8-node window; also reports the interpolated value and
// the sign of the second derivative at the zero.
Crossing refine_crossing(const RadialGrid& g, const std::vector<double>& f, std::size_t i) {
  const std::size_t N = g.size();
  const std::size_t w = std::min<std::size_t>(8, N);
  std::size_t j0 = (i > 3) ? i - 3 : 0;
  j0 = std::min(j0, N - w);
  auto d1 = [&](double t) {
    auto C = fd_weights(t, g.nodes.data() + j0, w, 1);
    double s = 0.0;
    for (std::size_t j = 0; j < w; ++j) s += C[j * 2 + 1] * f[j0 + j];
    return s;
  };
  double a = g.nodes[i], b = g.nodes[i + 1];
  double fa = d1(a);
  if (fa == 0.0) b = a;
  for (int it = 0; it < 200 && b - a > 1e-14 * b; ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = d1(mid);
    if (fm == 0.0) {
      a = b = mid;
      break;
    }
    if ((fa < 0.0) == (fm < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  Crossing cr;
  cr.t_star = 0.5 * (a + b);
  auto C = fd_weights(cr.t_star, g.nodes.data() + j0, w, 2);
  double val = 0.0, dd = 0.0;
  for (std::size_t j = 0; j < w; ++j) {
    val += C[j * 3] * f[j0 + j];
    dd += C[j * 3 + 2] * f[j0 + j];
  }
  cr.area_radius = val;
  cr.direction = (dd >= 0.0) ? +1 : -1;
  return cr;
}

HorizonScan scan(const Physical& ph) {
  const std::size_t N = ph.grid.size();
  const auto rho = area_radius(ph);
  const auto st = build_stencils(ph.grid, std::min<std::size_t>(7, N) >= 7 ? 7 : 5);
  std::vector<double> rt;
  apply_d1(st, rho, rt);

  HorizonScan out;
  for (std::size_t i = 0; i + 1 < N; ++i) {
    if (rt[i] == 0.0) {
      Crossing cr = refine_crossing(ph.grid, rho, i);
      cr.t_star = ph.grid.nodes[i];
      out.crossings.push_back(cr);
    } else if ((rt[i] < 0.0) != (rt[i + 1] < 0.0) && rt[i + 1] != 0.0) {
      out.crossings.push_back(refine_crossing(ph.grid, rho, i));
    }
  }

  // diagnostic: spheres of mean curvature n-1 (arclength oriented toward the
  // conformal boundary, so d ell = -sqrt(p) dt)
  std::vector<double> fc(N);
  for (std::size_t i = 0; i < N; ++i) fc[i] = -rt[i] / std::sqrt(ph.p[i]) - rho[i];
  for (std::size_t i = 0; i + 1 < N; ++i) {
    if ((fc[i] < 0.0) != (fc[i + 1] < 0.0)) {
      // bisect on the interpolant of fc itself
      const std::size_t w = std::min<std::size_t>(8, N);
      std::size_t j0 = (i > 3) ? i - 3 : 0;
      j0 = std::min(j0, N - w);
      auto ev = [&](double t) {
        auto C = fd_weights(t, ph.grid.nodes.data() + j0, w, 0);
        double s = 0.0;
        for (std::size_t j = 0; j < w; ++j) s += C[j] * fc[j0 + j];
        return s;
      };
      double a = ph.grid.nodes[i], b = ph.grid.nodes[i + 1];
      double fa = ev(a);
      for (int it = 0; it < 200 && b - a > 1e-14 * b; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = ev(mid);
        if ((fa < 0.0) == (fm < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      Crossing cr;
      cr.t_star = 0.5 * (a + b);
      auto C = fd_weights(cr.t_star, ph.grid.nodes.data() + j0, w, 0);
      double val = 0.0;
      for (std::size_t j = 0; j < w; ++j) val += C[j] * rho[j0 + j];
      cr.area_radius = val;
      cr.direction = 0;
      out.cmc_crossings.push_back(cr);
    }
  }
  return out;
}

AdmissibilityReport admissibility(const Physical& ph, const CurvatureField& cf,
                                  const std::vector<double>& compactified_angular,
                                  double t_omega, double tol) {
  if (!(t_omega > ph.grid.front() && t_omega <= ph.grid.back()))
    throw error("admissibility_check: t_omega outside the grid span");
  AdmissibilityReport rep;
  rep.min_R_plus = *std::min_element(cf.Rplus.begin(), cf.Rplus.end());
  rep.curvature_ok = rep.min_R_plus >= -tol;
  if (!rep.curvature_ok)
    rep.reasons.push_back("scalar curvature drops below -n(n-1) - tol");

  std::vector<double> y(compactified_angular.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = compactified_angular[i] - 1.0;
  rep.asymptotic_ok = std::abs(y[0]) <= 1e-3;
  if (rep.asymptotic_ok) {
    try {
      double lo, hi;
      default_fit_window(ph.grid, lo, hi);
      rep.gamma_bar = fit_leading(ph.grid, y, ph.dim.n, lo, hi);
    } catch (const error&) {
      rep.asymptotic_ok = false;
    }
  }
  if (!rep.asymptotic_ok)
    rep.reasons.push_back("profile does not approach 1 at rate t^n near the boundary");

  const HorizonScan hs = scan(ph);
  const auto [i0, i1] = window_indices(ph.grid, ph.grid.front(), t_omega, 2);
  const double spacing =
      (i1 + 1 < ph.grid.size() ? ph.grid.nodes[i1 + 1] : ph.grid.back()) - ph.grid.nodes[i1];
  for (const Crossing& cr : hs.crossings) {
    if (cr.t_star >= t_omega) continue;
    if (t_omega - cr.t_star <= spacing)
      rep.boundary_crossings.push_back(cr);  // "other than possibly on the boundary"
    else
      rep.interior_crossings.push_back(cr);
  }
  rep.no_interior_minimal_sphere = rep.interior_crossings.empty();
  if (!rep.no_interior_minimal_sphere)
    rep.reasons.push_back("closed minimal sphere separates the boundary from infinity");

  rep.pass = rep.curvature_ok && rep.asymptotic_ok && rep.no_interior_minimal_sphere;
  return rep;
}

}  // namespace

bool constant_curvature_prefilter(const MetricProfile& m, double lo, double hi, double tol) {
  return prefilter_on(scalar_curvature(m), m.grid, lo, hi, tol);
}

bool constant_curvature_prefilter(const GeneralProfile& m, double lo, double hi, double tol) {
  return prefilter_on(scalar_curvature(m), m.grid, lo, hi, tol);
}

StaticVerdict static_kernel_test(const MetricProfile& m, double lo, double hi,
                                 const StaticThresholds& th) {
  return kernel_test(to_physical(m), constant_curvature_prefilter(m, lo, hi, th.curvature_tol),
                     lo, hi, th);
}

StaticVerdict static_kernel_test(const GeneralProfile& m, double lo, double hi,
                                 const StaticThresholds& th) {
  return kernel_test(to_physical(m), constant_curvature_prefilter(m, lo, hi, th.curvature_tol),
                     lo, hi, th);
}

HorizonScan minimal_sphere_scan(const MetricProfile& m) { return scan(to_physical(m)); }

HorizonScan minimal_sphere_scan(const GeneralProfile& m) { return scan(to_physical(m)); }

AdmissibilityReport admissibility_check(const MetricProfile& m, double t_omega, double tol) {
  return admissibility(to_physical(m), scalar_curvature(m), m.a, t_omega, tol);
}

AdmissibilityReport admissibility_check(const GeneralProfile& m, double t_omega, double tol) {
  return admissibility(to_physical(m), scalar_curvature(m), m.Q, t_omega, tol);
}

}  // namespace ahlab
