#pragma once
#include <cstddef>
#include <vector>

#include "ahlab/geometry.hpp"

namespace ahlab {

// Diagnostics of a two-term leading-coefficient fit y = c0 t^n + c1 t^{n+1}.
// The fit is repeated on the half window [lo, hi/2]; drift is the relative
// disagreement of the two c0 estimates (0 when both are numerically zero).
struct FitDiagnostics {
  double window_lo = 0.0;
  double window_hi = 0.0;
  std::size_t nodes_used = 0;
  int order = 0;                 // the fitted leading power n
  double next_coefficient = 0.0; // c1 of the t^{n+1} term
  double drift = 0.0;
};

// Shared two-term fitter for all t^n-coefficient extractions (v_n, gamma_bar,
// the Lemma expansion coefficients). Least squares on [lo, hi]; throws
// fit-unstable when the half-window estimate drifts by more than 10%.
double fit_leading(const RadialGrid& grid, const std::vector<double>& y, int n, double lo,
                   double hi, FitDiagnostics* diag = nullptr);

// Default fit window for a grid: [2.5 t_min, 200 t_min], widened until it
// holds at least 8 nodes and clamped to the grid span.
void default_fit_window(const RadialGrid& grid, double& lo, double& hi);

// Log-log slope of |y| against t over [lo, hi]; nodes with |y| = 0 skipped.
double fit_loglog_slope(const RadialGrid& grid, const std::vector<double>& y, double lo, double hi);

struct YamabeSolution {
  std::vector<double> v;  // u - 1, sampled on the metric grid
  double v_n = 0.0;
  double residual_norm = 0.0;
  std::size_t iterations = 0;
  std::vector<double> residual_history;  // max-norm per Newton step
  FitDiagnostics fit;
};

// F(v) = n(n-2)/4 [ (1+v)^{(n+2)/(n-2)} - 1 - ((n+2)/(n-2)) v ].
// Series branch below |v| = 1e-4 keeps the value accurate where the direct
// expression cancels catastrophically. Throws for v <= -1.
double nonlinearity_F(double v, Dim n);

// F'(v) = n(n+2)/4 [ (1+v)^{4/(n-2)} - 1 ].
double nonlinearity_F_prime(double v, Dim n);

// Solve -Delta v + n v + Rhat v = -Rhat - F(v) with Rhat =
// (n-2)/(4(n-1)) (R + n(n-1)), Robin condition v'(t0) = (n/t0) v(t0)
// encoding v ~ v_n t^n at the boundary and zero Neumann at T_max.
// Damped Newton from v = 0; residual max-norm driven below tol, or to the
// row-scaled evaluation noise floor when that floor sits above tol (fine
// grids put the stencil scale A2/h^2 high enough that the residual cannot
// be evaluated below ~1e-12 in absolute terms). Throws if stuck above both.
YamabeSolution solve_yamabe(const MetricProfile& metric, double tol = 1e-12,
                            double hypothesis_tol = 1e-6);

// f = -Rhat (1+v) - F(v), the source of -Delta v + n v = f.
std::vector<double> yamabe_source(const MetricProfile& metric, const std::vector<double>& v);

// Two-term decay fit of v (shared fitter); window defaults as above.
double extract_decay(const std::vector<double>& v, const RadialGrid& grid, int n,
                     FitDiagnostics* diag = nullptr, double lo = -1.0, double hi = -1.0);

}  // namespace ahlab
