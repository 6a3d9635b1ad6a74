#pragma once
#include <string>
#include <vector>

#include "ahlab/geometry.hpp"

namespace ahlab {

enum class Verdict { Static, NonStatic, Inconclusive };

const char* verdict_name(Verdict v);

struct StaticThresholds {
  double static_tol = 1e-6;     // verdict static: sigma_min and residual below
  double gap_tol = 1e-2;        // verdict non-static: sigma_min above
  double curvature_tol = 1e-6;  // constant-curvature prefilter width
};

struct StaticVerdict {
  double window_lo = 0.0, window_hi = 0.0;
  std::size_t window_nodes = 0;
  double smallest_singular_value = 0.0;
  double largest_singular_value = 0.0;
  std::vector<double> candidate_potential;  // unit max-norm; empty if not computed
  double residual = 0.0;                    // max |L* candidate| over both rows
  bool constant_curvature = false;          // prefilter outcome
  bool radial_sector = true;                // verdict restricted to radial potentials
  Verdict verdict = Verdict::Inconclusive;
};

// True iff max R - min R <= tol over the window.
bool constant_curvature_prefilter(const MetricProfile& m, double lo, double hi, double tol);
bool constant_curvature_prefilter(const GeneralProfile& m, double lo, double hi, double tol);

// Radial-sector kernel test of L* f = -(Delta f) g + Hess f - f Ric: stacks
// the tt- and angular-component residuals of a radial f on the window into an
// overdetermined operator, takes the smallest singular value under discrete
// L^2 row/column normalization, and recovers the minimizer as candidate.
// Windows touching the grid edge are rejected; >= 20 nodes required.
// Verdict: static needs prefilter pass and sigma_min, residual <= static_tol;
// non-static needs sigma_min >= gap_tol; otherwise inconclusive. A window
// with non-constant curvature can never receive verdict static.
StaticVerdict static_kernel_test(const MetricProfile& m, double lo, double hi,
                                 const StaticThresholds& th = {});
StaticVerdict static_kernel_test(const GeneralProfile& m, double lo, double hi,
                                 const StaticThresholds& th = {});

struct Crossing {
  double t_star = 0.0;
  double area_radius = 0.0;
  int direction = 0;      // +1: minimum of the area radius (neck), -1: maximum
  bool separating = true; // radial model: every such sphere separates
};

struct HorizonScan {
  std::vector<Crossing> crossings;       // zeros of d(rho)/d(arclength)
  std::vector<Crossing> cmc_crossings;   // diagnostic: mean curvature = n-1
};

// Locates sign changes of the area-radius derivative along the radial
// arclength; each bracket is refined through the local 8-node interpolant.
HorizonScan minimal_sphere_scan(const MetricProfile& m);
HorizonScan minimal_sphere_scan(const GeneralProfile& m);

struct AdmissibilityReport {
  bool curvature_ok = false;   // R >= -n(n-1) - tol on all nodes
  bool asymptotic_ok = false;  // a -> 1 at rate t^n (stable two-term fit)
  bool no_interior_minimal_sphere = false;
  double min_R_plus = 0.0;
  double gamma_bar = 0.0;
  std::vector<Crossing> interior_crossings;  // t_star < t_omega (less a node spacing)
  std::vector<Crossing> boundary_crossings;  // tolerated, at t_omega itself
  bool pass = false;
  std::vector<std::string> reasons;
};

// Definition-level admissibility: curvature bound, asymptotic form, and no
// closed minimal sphere in the interior t < t_omega (boundary tolerated).
AdmissibilityReport admissibility_check(const MetricProfile& m, double t_omega,
                                        double tol = 1e-6);
AdmissibilityReport admissibility_check(const GeneralProfile& m, double t_omega,
                                        double tol = 1e-6);

}  // namespace ahlab
