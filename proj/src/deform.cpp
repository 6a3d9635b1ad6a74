#include "ahlab/deform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ahlab/curvature.hpp"
#include "ahlab/mass.hpp"

namespace ahlab {

void validate(const CutoffSpec& c) {
  if (!(0.0 < c.t0 && c.t0 < c.t1)) throw error("CutoffSpec: need 0 < t0 < t1");
}

double smoothstep(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double b0 = std::exp(-1.0 / x);
  const double b1 = std::exp(-1.0 / (1.0 - x));
  return b0 / (b0 + b1);
}

double cutoff_phi(const CutoffSpec& c, double t) {
  return smoothstep((c.t1 - t) / (c.t1 - c.t0));
}

GeneralProfile conformal_multiply(const MetricProfile& metric, const std::vector<double>& u) {
  validate(metric);
  const std::size_t N = metric.grid.size();
  if (u.size() != N) throw error("conformal_multiply: grid mismatch");
  const double e = 4.0 / (metric.dim.n - 2);
  GeneralProfile out{metric.dim, metric.grid, std::vector<double>(N), std::vector<double>(N)};
  for (std::size_t i = 0; i < N; ++i) {
    if (!(u[i] > 0.0)) throw error("conformal_multiply: u must be positive");
    const double f = std::pow(u[i], e);
    out.P[i] = f;
    out.Q[i] = f * metric.a[i];
  }
  return out;
}

GeneralProfile glue(const MetricProfile& base, const GeneralProfile& conformal,
                    const CutoffSpec& cutoff) {
  validate(base);
  validate(conformal);
  validate(cutoff);
  const std::size_t N = base.grid.size();
  if (conformal.grid.size() != N || conformal.grid.nodes != base.grid.nodes)
    throw error("glue: metrics live on different grids");
  GeneralProfile out{base.dim, base.grid, std::vector<double>(N), std::vector<double>(N)};
  for (std::size_t i = 0; i < N; ++i) {
    const double phi = cutoff_phi(cutoff, base.grid.nodes[i]);
    const double b = base.a[i] - 1.0;           // exact for a >= 1/2
    const double BPh = conformal.P[i] - 1.0;
    const double BQh = conformal.Q[i] - 1.0;
    // deviation-space combination: phi = 0 and phi = 1 reproduce base and
    // conformal samples bitwise after the 1 + . reconstruction
    out.P[i] = 1.0 + phi * BPh;
    out.Q[i] = 1.0 + (phi * BQh + (1.0 - phi) * b);
  }
  return out;
}

DeformedFamily build_family(const MetricProfile& base, const YamabeSolution& yamabe,
                            const CutoffSpec& cutoff, const std::vector<double>& s_values) {
  validate(base);
  validate(cutoff);
  const std::size_t N = base.grid.size();
  if (yamabe.v.size() != N) throw error("build_family: yamabe solution grid mismatch");
  DeformedFamily fam{base, yamabe, cutoff, s_values, {}};
  fam.members.reserve(s_values.size());
  std::vector<double> u(N);
  for (double s : s_values) {
    if (!(s > 0.0 && s < 1.0)) throw error("build_family: s must lie in (0,1)");
    for (std::size_t i = 0; i < N; ++i) u[i] = 1.0 + s * yamabe.v[i];
    fam.members.push_back(glue(base, conformal_multiply(base, u), cutoff));
  }
  return fam;
}

FamilyReport verify_family(const DeformedFamily& family, const VerifyTolerances& tol) {
  const MetricProfile& base = family.base;
  const std::size_t N = base.grid.size();
  const double t_min = base.grid.front();

  // the glued metric is h_s only on W_0, so its mass fit must stay inside
  const double fit_lo = 2.5 * t_min;
  const double fit_hi = std::min(0.8 * family.cutoff.t0, 200.0 * t_min);
  if (fit_hi <= fit_lo)
    throw error("verify_family: cutoff t0 too close to the boundary for a mass fit");

  FamilyReport rep;
  rep.degenerate = std::abs(family.yamabe.v_n) <= 1e-12;
  const MassReport base_mass = mass_aspect(base, fit_lo, fit_hi);

  std::vector<double> u(N);
  bool all_ok = true;
  for (std::size_t k = 0; k < family.s_values.size(); ++k) {
    const double s = family.s_values[k];
    const GeneralProfile& gs = family.members[k];
    MemberVerdict mv;
    mv.s = s;
    mv.degenerate = rep.degenerate;
    mv.mu_base = base_mass.mu;
    mv.predicted_drop = predicted_drop(base.dim.n, s, family.yamabe.v_n);

    mv.mu_s = mass_aspect(normalize(gs), fit_lo, fit_hi).mu;
    for (std::size_t i = 0; i < N; ++i) u[i] = 1.0 + s * family.yamabe.v[i];
    mv.mu_hs = mass_aspect(normalize(conformal_multiply(base, u)), fit_lo, fit_hi).mu;
    mv.measured_drop = mv.mu_s - mv.mu_base;

    const CurvatureField cf = scalar_curvature(gs);
    const auto it_min = std::min_element(cf.Rplus.begin(), cf.Rplus.end());
    mv.min_R_plus = *it_min;
    mv.t_at_min = base.grid.nodes[it_min - cf.Rplus.begin()];
    mv.annulus_min_R_plus = cf.Rplus[0];
    mv.annulus_t_at_min = base.grid.nodes[0];
    bool first = true;
    for (std::size_t i = 0; i < N; ++i) {
      const double t = base.grid.nodes[i];
      if (t <= family.cutoff.t0 || t >= family.cutoff.t1) continue;
      if (first || cf.Rplus[i] < mv.annulus_min_R_plus) {
        mv.annulus_min_R_plus = cf.Rplus[i];
        mv.annulus_t_at_min = t;
        first = false;
      }
    }

    mv.mass_decrease_ok = !rep.degenerate && mv.mu_s < mv.mu_base &&
                          mv.measured_drop <= mv.predicted_drop * (1.0 - tol.mass_rel);
    mv.curvature_ok = mv.min_R_plus >= -tol.curvature;
    mv.equality_ok = true;
    for (std::size_t i = 0; i < N; ++i) {
      if (base.grid.nodes[i] < family.cutoff.t1) continue;
      if (gs.P[i] != 1.0 || gs.Q[i] != base.a[i]) {
        mv.equality_ok = false;
        break;
      }
    }

    const bool member_ok =
        mv.curvature_ok && mv.equality_ok && (rep.degenerate || mv.mass_decrease_ok);
    all_ok = all_ok && member_ok;
    rep.members.push_back(mv);
  }
  rep.pass = all_ok;
  return rep;
}

}  // namespace ahlab
