#pragma once
#include <cstddef>
#include <vector>

#include "ahlab/geometry.hpp"
#include "ahlab/yamabe.hpp"

namespace ahlab {

// Transition region [t0, t1]: the cutoff is identically 1 on t <= t0 (the
// W_0 side, toward the conformal boundary) and identically 0 on t >= t1.
struct CutoffSpec {
  double t0;
  double t1;
  // smoothness certified discretely (sampled derivatives); the analytic
  // transition below is smooth of infinite class
  int smoothness = 2;
};

void validate(const CutoffSpec& c);

// Exponential smoothstep: 0 for x <= 0, 1 for x >= 1, monotone, smooth of
// infinite class. The plateau branches are explicit so plateaus are bitwise.
double smoothstep(double x);

// Cutoff phi(t) = smoothstep((t1 - t)/(t1 - t0)): 1 on t <= t0, 0 on t >= t1,
// non-increasing in t.
double cutoff_phi(const CutoffSpec& c, double t);

// h = u^{4/(n-2)} g as a general profile: p = u^{4/(n-2)} sinh^{-2},
// q = u^{4/(n-2)} a sinh^{-2}. Throws on non-positive u.
GeneralProfile conformal_multiply(const MetricProfile& metric, const std::vector<double>& u);

// g_s = (1-phi) g + phi h, coefficient-wise in p and q. Composed in deviation
// form (P-1, Q-1) so the plateau regions reproduce the inputs bitwise.
GeneralProfile glue(const MetricProfile& base, const GeneralProfile& conformal,
                    const CutoffSpec& cutoff);

struct DeformedFamily {
  MetricProfile base;
  YamabeSolution yamabe;
  CutoffSpec cutoff;
  std::vector<double> s_values;       // each in (0,1)
  std::vector<GeneralProfile> members;  // g_s, aligned with s_values
};

DeformedFamily build_family(const MetricProfile& base, const YamabeSolution& yamabe,
                            const CutoffSpec& cutoff, const std::vector<double>& s_values);

// Per-member verification record of the three family conclusions.
struct MemberVerdict {
  double s = 0.0;
  double mu_base = 0.0;
  double mu_s = 0.0;        // mass aspect of g_s
  double mu_hs = 0.0;       // mass aspect of h_s (gluing must not change it)
  double predicted_drop = 0.0;
  double measured_drop = 0.0;
  double min_R_plus = 0.0;
  double t_at_min = 0.0;        // grid location of the curvature minimum
  double annulus_min_R_plus = 0.0;  // minimum restricted to V_0 = (t0, t1)
  double annulus_t_at_min = 0.0;
  bool mass_decrease_ok = false;   // clause (i)
  bool curvature_ok = false;       // clause (ii)
  bool equality_ok = false;        // clause (iii), bitwise
  bool degenerate = false;         // v_n = 0: no strict decrease applicable
};

struct FamilyReport {
  std::vector<MemberVerdict> members;
  bool degenerate = false;  // v_n = 0 family-wide
  bool pass = false;        // all non-degenerate clauses passed
};

struct VerifyTolerances {
  double curvature = 1e-6;  // clause (ii) slack on R + n(n-1)
  double mass_rel = 0.01;   // clause (i): drop at least predicted * (1 - mass_rel)
};

FamilyReport verify_family(const DeformedFamily& family, const VerifyTolerances& tol = {});

}  // namespace ahlab
