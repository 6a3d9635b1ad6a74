#include "ahlab/geometry.hpp"

#include <cmath>

#include "ahlab/stencil.hpp"

namespace ahlab {

namespace {

double pow_int(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

double log_cosh(double z) {
  const double az = std::fabs(z);
  return az + std::log1p(std::exp(-2.0 * az)) - std::log(2.0);
}

// Gauss-Legendre nodes/weights on [-1,1] (Newton on the recurrence).
struct GaussLegendre {
  std::vector<double> x, w;
  explicit GaussLegendre(int k) : x(k), w(k) {
    for (int i = 0; i < k; ++i) {
      double z = std::cos(M_PI * (i + 0.75) / (k + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < k; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        pp = k * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / pp;
        z -= dz;
        if (std::fabs(dz) < 1e-15) break;
      }
      x[i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
  }
};

const GaussLegendre& gl48() {
  static const GaussLegendre g(48);
  return g;
}

// AdS-Schwarzschild closed-form coordinate relation in x = 1/r:
// tanh(t/2) = (x/2) exp(G(x)), G(x) = int_0^x (P(y)^{-1/2} - 1) dy/y,
// P(x) = x^2 V(1/x) = 1 + x^2 - 2 m x^n.
struct AdsRelation {
  int n;
  double m;
  double x_h;   // smallest positive root of P (image of r_h)
  double x_c;   // split point for the quadrature (x_h/2)
  double G_c;   // G(x_c)
  double G_h;   // G(x_h), finite: the endpoint singularity is 1/sqrt
  double t_h;

  AdsRelation(int n_, double m_) : n(n_), m(m_) {
    double lo = 0.0, hi = 1e-3;
    while (P(hi) > 0.0) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e8) throw error("ads: horizon root not bracketed");
    }
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (P(mid) > 0.0 ? lo : hi) = mid;
    }
    x_h = 0.5 * (lo + hi);
    // last Newton polish (P' < 0 at the smallest positive root)
    for (int it = 0; it < 4; ++it) x_h -= P(x_h) / Pp(x_h);
    x_c = 0.5 * x_h;
    G_c = G_regular(x_c);
    G_h = G(x_h);
    t_h = 2.0 * std::atanh(0.5 * x_h * std::exp(G_h));
  }

  double P(double x) const { return 1.0 + x * x - 2.0 * m * pow_int(x, n); }
  double Pp(double x) const { return 2.0 * x - 2.0 * m * n * pow_int(x, n - 1); }
  double f(double y) const { return (1.0 / std::sqrt(P(y)) - 1.0) / y; }

  // int_0^x f, x strictly inside (0, x_h): integrand analytic on [0, x]
  double G_regular(double x) const {
    const auto& q = gl48();
    double acc = 0.0;
    for (std::size_t i = 0; i < q.x.size(); ++i) {
      const double y = 0.5 * x * (q.x[i] + 1.0);
      acc += q.w[i] * f(y);
    }
    return 0.5 * x * acc;
  }

  // int over the near-horizon piece via y = x_h - w^2 (removes the 1/sqrt
  // behavior; the transformed integrand is analytic through w = 0)
  double G_sqrt_piece(double w_lo, double w_hi) const {
    const auto& q = gl48();
    double acc = 0.0;
    for (std::size_t i = 0; i < q.x.size(); ++i) {
      const double w = w_lo + 0.5 * (w_hi - w_lo) * (q.x[i] + 1.0);
      const double y = x_h - w * w;
      acc += q.w[i] * (f(y) * (2.0 * w));
    }
    return 0.5 * (w_hi - w_lo) * acc;
  }

  double G(double x) const {
    if (x <= x_c) return G_regular(x);
    // w decreases toward the horizon: int_{x_c}^{x} = int_{w(x)}^{w(x_c)}
    const double w_at_x = std::sqrt(std::max(x_h - x, 0.0));
    return G_c + G_sqrt_piece(w_at_x, std::sqrt(x_h - x_c));
  }

  double t_of_x(double x) const { return 2.0 * std::atanh(0.5 * x * std::exp(G(x))); }

  // Safeguarded Newton for tanh(t/2) = (x/2) e^{G(x)}; monotone on (0, x_h).
  double x_of_t(double t, double x0) const {
    const double target = std::tanh(0.5 * t);
    double lo = 0.0, hi = x_h;
    double x = (x0 > 0.0 && x0 < x_h) ? x0 : std::min(2.0 * target, 0.5 * x_h);
    for (int it = 0; it < 200; ++it) {
      const double eg = std::exp(G(x));
      const double h = 0.5 * x * eg - target;
      (h > 0.0 ? hi : lo) = x;
      const double hp = eg * (0.5 + 0.5 * x * f(x));
      double xn = x - h / hp;
      if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
      if (std::fabs(xn - x) <= 4e-16 * x) return xn;
      x = xn;
    }
    return x;
  }
};

}  // namespace

void validate(const MetricProfile& mp) {
  validate(mp.grid);
  if (mp.a.size() != mp.grid.size()) throw error("MetricProfile: size mismatch");
  for (double v : mp.a)
    if (!(v > 0.0)) throw error("MetricProfile: a must be positive");
}

void validate(const GeneralProfile& gp) {
  validate(gp.grid);
  if (gp.P.size() != gp.grid.size() || gp.Q.size() != gp.grid.size())
    throw error("GeneralProfile: size mismatch");
  for (std::size_t i = 0; i < gp.P.size(); ++i)
    if (!(gp.P[i] > 0.0 && gp.Q[i] > 0.0)) throw error("GeneralProfile: p,q must be positive");
}

SinhTable sinh_table(const RadialGrid& g) {
  SinhTable t;
  t.sh.resize(g.size());
  t.ch.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    t.sh[i] = std::sinh(g.nodes[i]);
    t.ch[i] = std::cosh(g.nodes[i]);
  }
  return t;
}

double bump_chi(double x) {
  if (std::fabs(x) >= 1.0) return 0.0;
  const double u = 1.0 - x * x;
  return std::exp(1.0 - 1.0 / u);
}

double bump_chi_d1(double x) {
  if (std::fabs(x) >= 1.0) return 0.0;
  const double u = 1.0 - x * x;
  return bump_chi(x) * (-2.0 * x / (u * u));
}

double bump_chi_d2(double x) {
  if (std::fabs(x) >= 1.0) return 0.0;
  const double u = 1.0 - x * x;
  const double u2 = u * u;
  return bump_chi(x) * (4.0 * x * x / (u2 * u2) - 2.0 / u2 - 8.0 * x * x / (u2 * u));
}

MetricProfile make_hyperbolic(Dim n, const RadialGrid& grid) {
  validate(grid);
  MetricProfile mp{n, grid, std::vector<double>(grid.size(), 1.0), "hyperbolic"};
  return mp;
}

MetricProfile make_tail(Dim n, const RadialGrid& grid, double gamma_bar) {
  validate(grid);
  MetricProfile mp{n, grid, std::vector<double>(grid.size()), "tail"};
  for (std::size_t i = 0; i < grid.size(); ++i)
    mp.a[i] = 1.0 + gamma_bar * pow_int(grid.nodes[i], n.n);
  validate(mp);
  return mp;
}

MetricProfile make_bumped(const MetricProfile& base, double t_c, double w, double eps) {
  validate(base);
  if (!(w > 0.0)) throw error("make_bumped: width must be positive");
  if (!(t_c - w > base.grid.front() && t_c + w < base.grid.back()))
    throw error("make_bumped: bump support [t_c-w, t_c+w] not strictly inside the grid");
  MetricProfile mp = base;
  mp.meta = base.meta + "+bump";
  for (std::size_t i = 0; i < mp.grid.size(); ++i)
    mp.a[i] = base.a[i] * (1.0 + eps * bump_chi((mp.grid.nodes[i] - t_c) / w));
  validate(mp);
  return mp;
}

double ads_horizon_radius(Dim n, double m) {
  if (!(m > 0.0)) throw error("ads: mass parameter must be positive");
  return 1.0 / AdsRelation(n.n, m).x_h;
}

double ads_horizon_t(Dim n, double m) {
  if (!(m > 0.0)) throw error("ads: mass parameter must be positive");
  return AdsRelation(n.n, m).t_h;
}

MetricProfile make_ads_schwarzschild(Dim n, double m, const RadialGrid& grid) {
  validate(grid);
  if (!(m > 0.0)) throw error("ads: mass parameter must be positive");
  AdsRelation rel(n.n, m);
  if (grid.back() >= rel.t_h)
    throw error("make_ads_schwarzschild: grid extends past the horizon (t_h = " +
                std::to_string(rel.t_h) + ")");
  MetricProfile mp{n, grid, std::vector<double>(grid.size()), "ads_schwarzschild"};
  double x = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.nodes[i];
    x = rel.x_of_t(t, x);
    const double sh = std::sinh(t);
    mp.a[i] = (sh / x) * (sh / x);
  }
  validate(mp);
  return mp;
}

MetricProfile make_ads_schwarzschild_neck(Dim n, double m, const RadialGrid& grid) {
  validate(grid);
  if (!(m > 0.0)) throw error("ads: mass parameter must be positive");
  AdsRelation rel(n.n, m);
  if (!(grid.back() > rel.t_h))
    throw error("make_ads_schwarzschild_neck: grid must span the horizon");
  MetricProfile mp{n, grid, std::vector<double>(grid.size()), "ads_schwarzschild_neck"};
  const double th2 = std::tanh(0.5 * rel.t_h);
  double x = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.nodes[i];
    // second sheet: reflect through tanh(t/2) tanh(t'/2) = tanh^2(t_h/2)
    const double tt = (t <= rel.t_h) ? t : 2.0 * std::atanh(th2 * th2 / std::tanh(0.5 * t));
    x = rel.x_of_t(tt, x);
    const double sh = std::sinh(t);
    mp.a[i] = (sh / x) * (sh / x);
  }
  validate(mp);
  return mp;
}

MetricProfile make_neck(Dim n, const RadialGrid& grid, double t_star, double omega) {
  validate(grid);
  if (!(t_star > grid.front() && t_star < grid.back()))
    throw error("make_neck: t_star must be inside the grid");
  if (!(omega > 0.0)) throw error("make_neck: omega must be positive");
  MetricProfile mp{n, grid, std::vector<double>(grid.size()), "neck"};
  const double cot = std::cosh(t_star) / std::sinh(t_star);
  const double lc0 = log_cosh(t_star / omega);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid.nodes[i];
    const double s = cot * (t + omega * (log_cosh((t - t_star) / omega) - lc0));
    mp.a[i] = std::exp(2.0 * s);
  }
  validate(mp);
  return mp;
}

double neck_rho_star(double t_star, double omega) {
  const double cot = std::cosh(t_star) / std::sinh(t_star);
  const double s = cot * (t_star - omega * log_cosh(t_star / omega));
  return std::exp(s) / std::sinh(t_star);
}

MetricProfile resample(const MetricProfile& src, const RadialGrid& grid) {
  validate(src);
  validate(grid);
  MetricProfile mp{src.dim, grid, std::vector<double>(grid.size()), src.meta};
  for (std::size_t i = 0; i < grid.size(); ++i)
    mp.a[i] = interpolate(src.grid, src.a, grid.nodes[i]);
  validate(mp);
  return mp;
}

GeneralProfile resample(const GeneralProfile& src, const RadialGrid& grid) {
  validate(src);
  validate(grid);
  GeneralProfile gp{src.dim, grid, std::vector<double>(grid.size()),
                    std::vector<double>(grid.size())};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    gp.P[i] = interpolate(src.grid, src.P, grid.nodes[i]);
    gp.Q[i] = interpolate(src.grid, src.Q, grid.nodes[i]);
  }
  validate(gp);
  return gp;
}

GeneralProfile as_general(const MetricProfile& m) {
  validate(m);
  return GeneralProfile{m.dim, m.grid, std::vector<double>(m.grid.size(), 1.0), m.a};
}

}  // namespace ahlab
