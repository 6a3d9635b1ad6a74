#include "ahlab/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ahlab/curvature.hpp"
#include "ahlab/jsonio.hpp"

namespace ahlab {

namespace {

constexpr double kDegenerateVn = 1e-12;

StageResult* stage(RunReport& r, const char* name) {
  for (auto& s : r.stages)
    if (s.name == name) return &s;
  return nullptr;
}

// log2 of successive-difference ratios; NaN when a difference vanishes
// (already-converged or identically-zero quantities carry no order signal).
std::vector<double> observed_orders(const std::vector<LevelRow>& rows,
                                    double LevelRow::*field) {
  std::vector<double> out;
  for (std::size_t k = 0; k + 2 < rows.size(); ++k) {
    const double d1 = std::abs(rows[k].*field - rows[k + 1].*field);
    const double d2 = std::abs(rows[k + 1].*field - rows[k + 2].*field);
    out.push_back(d2 > 0.0 && d1 > 0.0 ? std::log2(d1 / d2)
                                       : std::numeric_limits<double>::quiet_NaN());
  }
  return out;
}

}  // namespace

MetricProfile build_metric(const MetricSpec& spec, const RadialGrid& grid) {
  Dim n(spec.n);
  if (spec.kind == "hyperbolic") return make_hyperbolic(n, grid);
  if (spec.kind == "ads_schwarzschild") return make_ads_schwarzschild(n, spec.m, grid);
  if (spec.kind == "bumped")
    return make_bumped(make_tail(n, grid, spec.gamma_bar), spec.t_c, spec.w, spec.eps);
  throw error("build_metric: kind \"" + spec.kind + "\" is not a generated metric");
}

RunReport run_pipeline(const RunConfig& cfg) {
  RunReport r;
  r.config_json = config_echo(cfg);
  r.kind = cfg.metric.kind;
  r.levels = cfg.grid.levels;
  for (const char* name : {"geometry", "curvature", "yamabe", "deform", "mass", "analysis"})
    r.stages.push_back(StageResult{name, false, false, ""});

  bool verification_failed = false;
  auto fail_exec = [&](const char* name, const std::string& msg) {
    StageResult* s = stage(r, name);
    s->ran = true;
    s->ok = false;
    s->message = msg;
    r.exit_code = 1;
  };

  // --- geometry -------------------------------------------------------
  std::vector<MetricProfile> metrics;  // one per level, coarsest first
  try {
    if (cfg.metric.kind == "file") {
      if (cfg.grid.levels != 1)
        throw error("pipeline: grid.levels > 1 needs a generated metric kind");
      jsonio::LoadedProfile lp = jsonio::load_profile(cfg.metric.path);
      // general profiles enter the pipeline through the normal form
      metrics.push_back(lp.is_metric ? lp.metric : normalize(lp.general));
    } else {
      RadialGrid grid =
          make_geometric_grid(cfg.metric.t_min, cfg.metric.t_max, cfg.grid.nodes);
      for (int k = 0; k < cfg.grid.levels; ++k) {
        if (k > 0) grid = refine(grid);
        metrics.push_back(build_metric(cfg.metric, grid));
      }
    }
    const MetricProfile& fine = metrics.back();
    r.grid_nodes = fine.grid.size();
    r.t_min = fine.grid.front();
    r.t_max = fine.grid.back();
    StageResult* s = stage(r, "geometry");
    s->ran = s->ok = true;
  } catch (const error& e) {
    fail_exec("geometry", e.what());
    return r;
  }
  const MetricProfile& base = metrics.back();

  // --- curvature ------------------------------------------------------
  std::vector<CurvatureField> curvatures;
  try {
    for (const auto& m : metrics) curvatures.push_back(scalar_curvature(m));
    const auto& cf = curvatures.back();
    std::size_t arg = 0;
    double mn = cf.Rplus[0], mx = cf.Rplus[0];
    for (std::size_t i = 1; i < cf.Rplus.size(); ++i) {
      if (cf.Rplus[i] < mn) mn = cf.Rplus[i], arg = i;
      mx = std::max(mx, cf.Rplus[i]);
    }
    r.have_curvature = true;
    r.min_R_plus = mn;
    r.max_R_plus = mx;
    r.t_at_min_R = base.grid.nodes[arg];
    r.profile_t = base.grid.nodes;
    r.profile_R_base = cf.Rplus;
    StageResult* s = stage(r, "curvature");
    s->ran = true;
    if (mn < -cfg.tolerances.curvature) {
      s->ok = false;
      s->message = "scalar curvature hypothesis failed: min R + n(n-1) = " + jsonio::fmt(mn);
      r.exit_code = 2;
      return r;  // the Yamabe step needs the bound; stop with a partial report
    }
    s->ok = true;
  } catch (const error& e) {
    fail_exec("curvature", e.what());
    return r;
  }

  // --- yamabe ---------------------------------------------------------
  std::vector<YamabeSolution> solutions;
  try {
    for (const auto& m : metrics) solutions.push_back(solve_yamabe(m, cfg.tolerances.solver));
    r.yamabe = solutions.back();
    r.have_yamabe = true;
    r.degenerate = std::abs(r.yamabe.v_n) <= kDegenerateVn;
    r.source_slope = std::numeric_limits<double>::quiet_NaN();
    if (!r.degenerate) {
      const std::vector<double> f = yamabe_source(base, r.yamabe.v);
      const double lo = std::max(0.15, 2.0 * base.grid.front());
      const double hi = std::min(0.5, base.grid.back());
      try {
        r.source_slope = fit_loglog_slope(base.grid, f, lo, hi);
      } catch (const error&) {
        // diagnostic only; grids too narrow for the slope window leave NaN
      }
    }
    StageResult* s = stage(r, "yamabe");
    s->ran = s->ok = true;
    if (r.degenerate) s->message = "degenerate: v_n at noise floor";
  } catch (const error& e) {
    fail_exec("yamabe", e.what());
    return r;
  }

  // --- deform ---------------------------------------------------------
  DeformedFamily family{base, r.yamabe, cfg.cutoff, {}, {}};
  try {
    family = build_family(base, r.yamabe, cfg.cutoff, cfg.s_values);
    VerifyTolerances vt;
    vt.curvature = cfg.tolerances.curvature;
    vt.mass_rel = cfg.tolerances.fit;
    r.family = verify_family(family, vt);
    r.have_family = true;
    for (const auto& member : family.members)
      r.profile_R_members.push_back(scalar_curvature(member).Rplus);
    StageResult* s = stage(r, "deform");
    s->ran = true;
    s->ok = r.family.pass;
    if (r.family.degenerate)
      s->message = "degenerate family: conformal factor is 1, no strict decrease applicable";
    else if (!r.family.pass)
      s->message = "family verification failed";
    if (!r.family.pass) {
      r.exit_code = 2;
      verification_failed = true;
    }
  } catch (const error& e) {
    fail_exec("deform", e.what());
    return r;
  }

  // --- mass -----------------------------------------------------------
  try {
    std::vector<MassReport> level_mass;
    for (const auto& m : metrics) level_mass.push_back(mass_aspect(m, cfg.fit_lo, cfg.fit_hi));
    r.mass_base = level_mass.back();
    r.have_mass = true;
    StageResult* s = stage(r, "mass");
    s->ran = true;
    s->ok = true;
    if (!r.degenerate) {
      for (double sv : cfg.s_values)
        r.lemma.push_back(check_lemma_coefficients(base, r.yamabe, sv));
      for (const auto& l : r.lemma)
        if (!(l.rel_discrepancy <= cfg.tolerances.fit)) {
          s->ok = false;
          s->message = "mass drop disagrees with the closed form at s = " + jsonio::fmt(l.s);
          r.exit_code = 2;
          verification_failed = true;
        }
    } else {
      s->message = "degenerate: drop identically zero";
    }
    for (std::size_t k = 0; k < metrics.size(); ++k) {
      LevelRow row;
      row.level = static_cast<int>(k);
      row.nodes = metrics[k].grid.size();
      row.min_R_plus =
          *std::min_element(curvatures[k].Rplus.begin(), curvatures[k].Rplus.end());
      row.v_n = solutions[k].v_n;
      row.mu = level_mass[k].mu;
      r.convergence.rows.push_back(row);
    }
    r.convergence.order_min_R = observed_orders(r.convergence.rows, &LevelRow::min_R_plus);
    r.convergence.order_v_n = observed_orders(r.convergence.rows, &LevelRow::v_n);
    r.convergence.order_mu = observed_orders(r.convergence.rows, &LevelRow::mu);
  } catch (const error& e) {
    fail_exec("mass", e.what());
    return r;
  }

  // --- analysis -------------------------------------------------------
  try {
    StaticThresholds th;
    th.static_tol = cfg.tolerances.static_tol;
    th.gap_tol = cfg.tolerances.gap_tol;
    th.curvature_tol = cfg.tolerances.curvature;
    r.static_base = static_kernel_test(base, cfg.static_lo, cfg.static_hi, th);
    r.have_static = true;
    if (!r.static_base.constant_curvature && r.static_base.verdict == Verdict::Static)
      throw error("pipeline: prefilter soundness violated");  // structural invariant

    r.scan_base = minimal_sphere_scan(base);
    for (const auto& member : family.members)
      r.scan_members.push_back(minimal_sphere_scan(member));
    r.have_scan = true;

    r.admissibility = admissibility_check(base, cfg.metric.t_omega, cfg.tolerances.curvature);
    bool adm_ok = r.admissibility.pass;
    for (const auto& member : family.members) {
      AdmissibilityReport a =
          admissibility_check(member, cfg.metric.t_omega, cfg.tolerances.curvature);
      r.member_admissible.push_back(a.pass);
      adm_ok = adm_ok && a.pass;
    }
    r.have_admissibility = true;
    StageResult* s = stage(r, "analysis");
    s->ran = true;
    s->ok = adm_ok;
    if (!adm_ok) {
      s->message = "admissibility failed";
      r.exit_code = 2;
      verification_failed = true;
    }
  } catch (const error& e) {
    fail_exec("analysis", e.what());
    return r;
  }

  if (r.exit_code == 0 && verification_failed) r.exit_code = 2;
  return r;
}

std::vector<LemmaReport> run_lemma(const RunConfig& cfg) {
  MetricProfile base = [&] {
    if (cfg.metric.kind == "file") {
      jsonio::LoadedProfile lp = jsonio::load_profile(cfg.metric.path);
      return lp.is_metric ? lp.metric : normalize(lp.general);
    }
    return build_metric(cfg.metric,
                        make_geometric_grid(cfg.metric.t_min, cfg.metric.t_max, cfg.grid.nodes));
  }();
  YamabeSolution sol = solve_yamabe(base, cfg.tolerances.solver);
  std::vector<LemmaReport> out;
  for (double s : cfg.s_values) out.push_back(check_lemma_coefficients(base, sol, s));
  return out;
}

}  // namespace ahlab
