#pragma once
#include <string>
#include <vector>

#include "ahlab/deform.hpp"

namespace ahlab {

// Metric construction request. Keys are validated per kind: amplitude and bump
// parameters belong to "bumped", m to "ads_schwarzschild", path to "file".
struct MetricSpec {
  std::string kind;  // hyperbolic | ads_schwarzschild | bumped | file
  int n = 3;
  double m = 1.0;            // ads_schwarzschild
  double gamma_bar = 0.15;   // bumped: tail coefficient of the base profile
  double t_c = 1.2;          // bumped: bump center
  double w = 0.25;           // bumped: bump half-width
  double eps = 1e-4;         // bumped: bump amplitude
  double t_min = 1e-4;
  double t_max = 2.0;
  double t_omega = 1.5;      // inner boundary for the admissibility scan
  std::string path;          // file
};

struct GridSpec {
  int levels = 1;    // refinement levels computed for the convergence table
  int nodes = 1401;  // node count of the coarsest grid
};

struct Tolerances {
  double solver = 1e-12;    // Yamabe Newton residual target
  double curvature = 1e-6;  // R + n(n-1) lower-bound slack
  double fit = 1e-2;        // relative tolerance on fitted mass quantities
  double static_tol = 1e-6;
  double gap_tol = 1e-2;
};

struct RunConfig {
  MetricSpec metric;
  GridSpec grid;
  CutoffSpec cutoff{0.005, 0.010};
  std::vector<double> s_values{0.4, 0.2, 0.1, 0.05};
  Tolerances tolerances;
  double static_lo = 0.3, static_hi = 1.2;  // static-test window
  double fit_lo = -1.0, fit_hi = -1.0;      // mass fit window; -1 = automatic
  std::string output_dir = "out";
};

// Strict parse: unknown keys anywhere are errors, as are keys that do not
// apply to the chosen metric kind. Structural constraints of the referenced
// types (dimension range, window ordering, s in (0,1), positive tolerances)
// are re-checked here so a bad config fails before any stage runs.
RunConfig parse_config(const std::string& json_text);

// parse_config on the file contents; AHLAB_OUTPUT_DIR, when set, overrides
// output_dir (the only environment override).
RunConfig load_config(const std::string& path);

// Canonical echo of the parsed config (defaults filled in), used verbatim in
// reports so identical inputs echo identically.
std::string config_echo(const RunConfig& c);

}  // namespace ahlab
