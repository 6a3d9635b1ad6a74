#include "ahlab/mass.hpp"

#include <cmath>
#include <string>

#include "ahlab/deform.hpp"
#include "ahlab/stencil.hpp"

namespace ahlab {

double sphere_area(int n) {
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

MetricProfile normalize(const GeneralProfile& metric, std::vector<double>* tau_out) {
  validate(metric);
  const std::size_t N = metric.grid.size();
  const int n = metric.dim.n;
  if (std::abs(metric.P[0] - 1.0) > 1e-3)
    throw error("normalize: p sinh^2 does not tend to 1 at the boundary (asymptotic mismatch)");

  const auto tab = sinh_table(metric.grid);
  std::vector<double> f(N);
  for (std::size_t i = 0; i < N; ++i) f[i] = (std::sqrt(metric.P[i]) - 1.0) / tab.sh[i];
  std::vector<double> D = cumulative_integral(metric.grid, f);
  // the integral is anchored at t_min; the missing (0, t_min] piece of an
  // integrand ~ C t^{n-1} is f(t_min) t_min / n
  const double D0 = f[0] * metric.grid.front() / n;

  MetricProfile out{metric.dim, RadialGrid{}, std::vector<double>(N), "normalized"};
  out.grid.refinement_level = metric.grid.refinement_level;
  out.grid.nodes.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double t = metric.grid.nodes[i];
    const double Dt = D[i] + D0;
    double tau;
    if (Dt == 0.0) {
      tau = t;  // P = 1 regions map identically, bitwise
    } else {
      const double arg = std::tanh(0.5 * t) * std::exp(Dt);
      if (!(arg < 1.0)) throw error("normalize: coordinate change leaves the chart");
      tau = 2.0 * std::atanh(arg);
    }
    if (!std::isfinite(tau) || (i > 0 && tau <= out.grid.nodes[i - 1]))
      throw error("normalize: tau not strictly increasing (integration failure)");
    out.grid.nodes[i] = tau;
    const double ratio = (tau == t) ? 1.0 : std::sinh(tau) / tab.sh[i];
    out.a[i] = ratio * ratio * metric.Q[i];
  }
  if (tau_out) *tau_out = out.grid.nodes;
  validate(out);
  return out;
}

MassReport mass_aspect(const MetricProfile& metric, double lo, double hi) {
  validate(metric);
  if (lo < 0.0 || hi < 0.0) default_fit_window(metric.grid, lo, hi);
  std::vector<double> y(metric.grid.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = metric.a[i] - 1.0;
  MassReport rep;
  rep.gamma_bar = fit_leading(metric.grid, y, metric.dim.n, lo, hi, &rep.fit);
  rep.mu = (metric.dim.n - 1) * rep.gamma_bar;
  rep.total_mass = rep.mu * sphere_area(metric.dim.n);
  return rep;
}

double predicted_drop(int n, double s, double v_n) {
  return 4.0 * (n - 1) * (n + 1) * s * v_n / (n * (n - 2));
}

LemmaReport check_lemma_coefficients(const MetricProfile& base, const YamabeSolution& yamabe,
                                     double s, double expansion_hi) {
  validate(base);
  const std::size_t N = base.grid.size();
  if (yamabe.v.size() != N) throw error("check_lemma_coefficients: yamabe grid mismatch");
  if (!(s > 0.0 && s < 1.0)) throw error("check_lemma_coefficients: s must lie in (0,1)");
  const int n = base.dim.n;

  std::vector<double> u(N);
  for (std::size_t i = 0; i < N; ++i) u[i] = 1.0 + s * yamabe.v[i];
  const GeneralProfile hs = conformal_multiply(base, u);
  const MetricProfile norm = normalize(hs);

  double lo, hi;
  default_fit_window(base.grid, lo, hi);
  if (expansion_hi < 0.0) expansion_hi = 0.6 * hi;

  LemmaReport rep;
  rep.s = s;
  rep.v_n = yamabe.v_n;
  rep.mu_base = mass_aspect(base, lo, hi).mu;
  rep.mu_hs = mass_aspect(norm, lo, hi).mu;
  rep.measured_drop = rep.mu_hs - rep.mu_base;
  rep.predicted = predicted_drop(n, s, yamabe.v_n);
  rep.abs_discrepancy = std::abs(rep.measured_drop - rep.predicted);
  rep.rel_discrepancy = (rep.predicted != 0.0) ? rep.abs_discrepancy / std::abs(rep.predicted)
                        : (rep.abs_discrepancy <= 1e-8 ? 0.0 : 1.0);

  // leading tau^n coefficients of the three normal-form expansions, fitted
  // against the tau produced by the pipeline itself
  const auto tab = sinh_table(base.grid);
  std::vector<double> y1(N), y2(N), y3(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double tau = norm.grid.nodes[i];
    const double r = (tau == base.grid.nodes[i]) ? 1.0 : std::sinh(tau) / tab.sh[i];
    y1[i] = r * r - 1.0;
    y2[i] = hs.P[i] - 1.0;
    y3[i] = 1.0 / (r * r * hs.P[i]) - 1.0;
  }
  const double sv = s * yamabe.v_n;
  rep.expansions[0] = {"sinh_ratio", fit_leading(norm.grid, y1, n, lo, expansion_hi),
                       4.0 * sv / (n * (n - 2)), 0.0};
  rep.expansions[1] = {"conformal_factor", fit_leading(norm.grid, y2, n, lo, expansion_hi),
                       4.0 * sv / (n - 2), 0.0};
  rep.expansions[2] = {"dt_dtau_sq", fit_leading(norm.grid, y3, n, lo, expansion_hi),
                       -4.0 * (n + 1) * sv / (n * (n - 2)), 0.0};
  for (auto& e : rep.expansions)
    e.rel_err = (e.predicted != 0.0) ? std::abs(e.fitted - e.predicted) / std::abs(e.predicted)
                : (std::abs(e.fitted) <= 1e-8 ? 0.0 : 1.0);
  return rep;
}

}  // namespace ahlab
