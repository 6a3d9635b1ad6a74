#pragma once
#include <string>
#include <vector>

#include "ahlab/grid.hpp"

namespace ahlab {

// Normal-form profile: g = sinh^{-2}(t) (dt^2 + a(t) h̊) with a > 0, a(0+) = 1.
// The compactified a is stored (not a/sinh^2), so boundary asymptotics keep
// full precision.
struct MetricProfile {
  Dim dim;
  RadialGrid grid;
  std::vector<double> a;
  std::string meta;
};

// General radial metric ĝ = p dt^2 + q h̊ stored through the compactified
// coefficients P = p sinh^2, Q = q sinh^2 (both -> 1 at the boundary for the
// asymptotics this artifact handles).
struct GeneralProfile {
  Dim dim;
  RadialGrid grid;
  std::vector<double> P, Q;
};

void validate(const MetricProfile& m);
void validate(const GeneralProfile& m);

// sinh/cosh tables over a grid; shared by the curvature and solver paths.
struct SinhTable {
  std::vector<double> sh, ch;
};
SinhTable sinh_table(const RadialGrid& g);

// The fixed C^infty bump: chi(x) = exp(1 - 1/(1-x^2)) on |x| < 1, else 0.
// chi(0) = 1, support exactly [-1, 1].
double bump_chi(double x);
double bump_chi_d1(double x);
double bump_chi_d2(double x);

MetricProfile make_hyperbolic(Dim n, const RadialGrid& grid);

// Exact tail profile a = 1 + gamma_bar t^n: the minimal mass-bearing metric
// (mass aspect (n-1) gamma_bar). Positive gamma_bar gives R >= -n(n-1).
MetricProfile make_tail(Dim n, const RadialGrid& grid, double gamma_bar);

// Multiplies a(t) by 1 + eps chi((t-t_c)/w). Performs no curvature check;
// callers verify admissibility separately.
MetricProfile make_bumped(const MetricProfile& base, double t_c, double w, double eps);

// AdS-Schwarzschild in normal form: integrates dt/dr = -sinh(t) V^{-1/2},
// V(r) = 1 + r^2 - 2m r^{2-n}, with t ~ 1/r matching. The separable ODE is
// integrated in closed form, tanh(t/2) = (x/2) e^{G(x)} with x = 1/r, and
// inverted per node by Newton, leaving only smooth (differentiable) error.
// Rejects grids reaching the coordinate image of the horizon.
MetricProfile make_ads_schwarzschild(Dim n, double m, const RadialGrid& grid);

// Horizon data for the same family: r_h is the largest root of V,
// t_h its coordinate image (where the area radius attains its minimum).
double ads_horizon_radius(Dim n, double m);
double ads_horizon_t(Dim n, double m);

// Two-sheet AdS-Schwarzschild: continues the profile past t_h through the
// reflection tanh(t/2) tanh(t'/2) = tanh^2(t_h/2), so the horizon becomes an
// interior minimum of the area radius. Fixture generator for horizon scans;
// the grid must span t_h.
MetricProfile make_ads_schwarzschild_neck(Dim n, double m, const RadialGrid& grid);

// Engineered-neck synthetic: a = exp(2 s(t)) with
// s(t) = coth(t*) [t + omega (log cosh((t-t*)/omega) - log cosh(t*/omega))].
// The area radius has a single critical point exactly at t = t*, with
// rho* = exp(s(t*))/sinh(t*) in closed form (see neck_rho_star).
MetricProfile make_neck(Dim n, const RadialGrid& grid, double t_star, double omega);
double neck_rho_star(double t_star, double omega);

// Local-polynomial resampling (>= 4th order, exact at shared nodes).
MetricProfile resample(const MetricProfile& src, const RadialGrid& grid);
GeneralProfile resample(const GeneralProfile& src, const RadialGrid& grid);

// View a normal-form profile as a general one (P = 1 exactly, Q = a).
GeneralProfile as_general(const MetricProfile& m);

}  // namespace ahlab
