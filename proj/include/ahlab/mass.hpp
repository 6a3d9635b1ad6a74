#pragma once
#include <vector>

#include "ahlab/geometry.hpp"
#include "ahlab/yamabe.hpp"

namespace ahlab {

struct MassReport {
  double mu = 0.0;         // (n-1) * gamma_bar
  double gamma_bar = 0.0;  // fitted t^n coefficient of a
  double total_mass = 0.0; // mu * |S^{n-1}|
  FitDiagnostics fit;
};

// Exact area of the round unit (n-1)-sphere, 2 pi^{n/2} / Gamma(n/2).
double sphere_area(int n);

// Change of coordinates to the normal form: solves dtau/sinh(tau) =
// sqrt(p(t)) dt with tau ~ t at the boundary, via the deviation integral
// D(t) = int (sqrt(P) - 1)/sinh (the singular hyperbolic part is handled in
// closed form, so P = 1 maps to tau = t exactly). Returns the profile
// a~(tau) = sinh^2(tau) q(t) on the image grid tau_i = tau(t_i).
// If tau_out is non-null it receives the image nodes.
MetricProfile normalize(const GeneralProfile& metric, std::vector<double>* tau_out = nullptr);

// Fit a = 1 + gamma_bar t^n + c t^{n+1} with the shared fitter; window
// defaults to the decay-fit window of the grid.
MassReport mass_aspect(const MetricProfile& metric, double lo = -1.0, double hi = -1.0);

// Closed-form mass drop of the conformal family: mu(h_s) - mu(g) =
// 4 (n-1)(n+1) s v_n / (n (n-2)).
double predicted_drop(int n, double s, double v_n);

// One fitted-vs-predicted comparison of the normal-form expansion
// coefficients entering the mass-drop derivation.
struct LemmaCoefficient {
  const char* name;
  double fitted = 0.0;
  double predicted = 0.0;
  double rel_err = 0.0;
};

struct LemmaReport {
  double s = 0.0;
  double v_n = 0.0;
  double mu_base = 0.0;
  double mu_hs = 0.0;
  double measured_drop = 0.0;
  double predicted = 0.0;
  double abs_discrepancy = 0.0;
  double rel_discrepancy = 0.0;
  // leading tau^n coefficients: sinh ratio, conformal factor, (dt/dtau)^2
  LemmaCoefficient expansions[3];
};

// Builds h_s = (1 + s v)^{4/(n-2)} g, normalizes it, and compares the
// measured mass drop and the three expansion coefficients against the
// closed forms. expansion_hi defaults to 0.6 * default window upper edge.
LemmaReport check_lemma_coefficients(const MetricProfile& base, const YamabeSolution& yamabe,
                                     double s, double expansion_hi = -1.0);

}  // namespace ahlab
