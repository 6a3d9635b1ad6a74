#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "ahlab/analysis.hpp"
#include "ahlab/deform.hpp"
#include "ahlab/mass.hpp"
#include "ahlab/yamabe.hpp"

namespace ahlab {

struct StageResult {
  std::string name;
  bool ran = false;
  bool ok = false;
  std::string message;  // error text or note (e.g. "degenerate")
};

struct LevelRow {
  int level = 0;
  std::size_t nodes = 0;
  double min_R_plus = 0.0;
  double v_n = 0.0;
  double mu = 0.0;
};

// Observed orders are log2 of successive-difference ratios; they need three
// levels and are NaN (rendered null/nan) when differences sit at noise level.
struct ConvergenceTable {
  std::vector<LevelRow> rows;
  std::vector<double> order_min_R;  // entry k corresponds to rows k, k+1, k+2
  std::vector<double> order_v_n;
  std::vector<double> order_mu;
};

struct RunReport {
  std::string config_json;  // canonical echo
  std::vector<StageResult> stages;
  int exit_code = 0;  // 0 pass, 2 verification failure, 1 execution error

  // geometry
  std::string kind;
  std::size_t grid_nodes = 0;
  double t_min = 0.0, t_max = 0.0;
  int levels = 1;

  // curvature
  bool have_curvature = false;
  double min_R_plus = 0.0, max_R_plus = 0.0, t_at_min_R = 0.0;
  std::vector<double> profile_t;       // finest grid
  std::vector<double> profile_R_base;  // R + n(n-1) on it

  // yamabe
  bool have_yamabe = false;
  YamabeSolution yamabe;
  double source_slope = 0.0;  // fitted decay exponent of f = -Rhat(1+v) - F(v)
  bool degenerate = false;    // v_n at noise floor

  // deform + mass
  bool have_family = false;
  FamilyReport family;
  std::vector<std::vector<double>> profile_R_members;  // R + n(n-1) per g_s
  bool have_mass = false;
  MassReport mass_base;
  std::vector<LemmaReport> lemma;  // empty when degenerate

  // analysis
  bool have_static = false;
  StaticVerdict static_base;
  bool have_scan = false;
  HorizonScan scan_base;
  std::vector<HorizonScan> scan_members;
  bool have_admissibility = false;
  AdmissibilityReport admissibility;
  std::vector<bool> member_admissible;

  ConvergenceTable convergence;
};

// Deterministic JSON rendering (fixed key order, 17-significant-digit floats).
std::string render_report(const RunReport& r);

// report.json plus the four CSV companions in dir (created if absent).
void write_report(const RunReport& r, const std::string& dir);
void emit_plots(const RunReport& r, const std::string& dir);

std::string render_lemma(const std::vector<LemmaReport>& reports);
std::string render_static(const StaticVerdict& v);
std::string render_scan(const HorizonScan& s);

}  // namespace ahlab
