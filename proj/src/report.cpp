#include "ahlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>

#include "ahlab/jsonio.hpp"

namespace ahlab {

namespace {

using jsonio::Writer;

// CSV cells: same 17-digit formatting as JSON, but non-finite prints as nan.
std::string csv(double x) {
  if (!std::isfinite(x)) return "nan";
  return jsonio::fmt(x);
}

void put_fit(Writer& w, const FitDiagnostics& f) {
  w.begin_object();
  w.kv("window_lo", f.window_lo);
  w.kv("window_hi", f.window_hi);
  w.kv("nodes_used", f.nodes_used);
  w.kv("order", f.order);
  w.kv("next_coefficient", f.next_coefficient);
  w.kv("drift", f.drift);
  w.end_object();
}

void put_member(Writer& w, const MemberVerdict& m) {
  w.begin_object();
  w.kv("s", m.s);
  w.kv("mu_base", m.mu_base);
  w.kv("mu_s", m.mu_s);
  w.kv("mu_hs", m.mu_hs);
  w.kv("predicted_drop", m.predicted_drop);
  w.kv("measured_drop", m.measured_drop);
  w.kv("min_R_plus", m.min_R_plus);
  w.kv("t_at_min", m.t_at_min);
  w.kv("annulus_min_R_plus", m.annulus_min_R_plus);
  w.kv("annulus_t_at_min", m.annulus_t_at_min);
  w.kv("mass_decrease_ok", m.mass_decrease_ok);
  w.kv("curvature_ok", m.curvature_ok);
  w.kv("equality_ok", m.equality_ok);
  w.kv("degenerate", m.degenerate);
  w.end_object();
}

void put_lemma(Writer& w, const LemmaReport& l) {
  w.begin_object();
  w.kv("s", l.s);
  w.kv("v_n", l.v_n);
  w.kv("mu_base", l.mu_base);
  w.kv("mu_hs", l.mu_hs);
  w.kv("measured_drop", l.measured_drop);
  w.kv("predicted", l.predicted);
  w.kv("abs_discrepancy", l.abs_discrepancy);
  w.kv("rel_discrepancy", l.rel_discrepancy);
  w.key("expansions").begin_array();
  for (const auto& e : l.expansions) {
    w.begin_object();
    w.kv("name", e.name);
    w.kv("fitted", e.fitted);
    w.kv("predicted", e.predicted);
    w.kv("rel_err", e.rel_err);
    w.end_object();
  }
  w.end_array();
  w.end_object();
}

void put_static(Writer& w, const StaticVerdict& v) {
  w.begin_object();
  w.kv("verdict", verdict_name(v.verdict));
  w.kv("radial_sector", v.radial_sector);
  w.key("window").begin_array().value(v.window_lo).value(v.window_hi).end_array();
  w.kv("window_nodes", v.window_nodes);
  w.kv("smallest_singular_value", v.smallest_singular_value);
  w.kv("largest_singular_value", v.largest_singular_value);
  w.kv("residual", v.residual);
  w.kv("constant_curvature", v.constant_curvature);
  w.kv("candidate_nodes", v.candidate_potential.size());
  w.end_object();
}

void put_crossings(Writer& w, const std::vector<Crossing>& cs) {
  w.begin_array();
  for (const auto& c : cs) {
    w.begin_object();
    w.kv("t_star", c.t_star);
    w.kv("area_radius", c.area_radius);
    w.kv("direction", c.direction);
    w.kv("separating", c.separating);
    w.end_object();
  }
  w.end_array();
}

void put_scan(Writer& w, const HorizonScan& s) {
  w.begin_object();
  w.key("crossings");
  put_crossings(w, s.crossings);
  w.key("cmc_crossings");
  put_crossings(w, s.cmc_crossings);
  w.end_object();
}

void put_admissibility(Writer& w, const AdmissibilityReport& a) {
  w.begin_object();
  w.kv("pass", a.pass);
  w.kv("curvature_ok", a.curvature_ok);
  w.kv("asymptotic_ok", a.asymptotic_ok);
  w.kv("no_interior_minimal_sphere", a.no_interior_minimal_sphere);
  w.kv("min_R_plus", a.min_R_plus);
  w.kv("gamma_bar", a.gamma_bar);
  w.key("interior_crossings");
  put_crossings(w, a.interior_crossings);
  w.key("boundary_crossings");
  put_crossings(w, a.boundary_crossings);
  w.key("reasons").begin_array();
  for (const auto& r : a.reasons) w.value(r);
  w.end_array();
  w.end_object();
}

}  // namespace

std::string render_report(const RunReport& r) {
  Writer w;
  w.begin_object();
  w.kv("tool", "ahlab");
  w.kv("report_version", 1);
  w.key("config").raw(r.config_json.empty() ? "null" : r.config_json);
  w.kv("exit_code", r.exit_code);
  w.key("stages").begin_array();
  for (const auto& s : r.stages) {
    w.begin_object();
    w.kv("name", s.name);
    w.kv("ran", s.ran);
    w.kv("ok", s.ok);
    w.kv("message", s.message);
    w.end_object();
  }
  w.end_array();

  w.key("geometry").begin_object();
  w.kv("kind", r.kind);
  w.kv("nodes", r.grid_nodes);
  w.kv("t_min", r.t_min);
  w.kv("t_max", r.t_max);
  w.kv("levels", r.levels);
  w.end_object();

  if (r.have_curvature) {
    w.key("curvature").begin_object();
    w.kv("min_R_plus", r.min_R_plus);
    w.kv("max_R_plus", r.max_R_plus);
    w.kv("t_at_min", r.t_at_min_R);
    w.end_object();
  }

  if (r.have_yamabe) {
    w.key("yamabe").begin_object();
    w.kv("v_n", r.yamabe.v_n);
    w.kv("residual_norm", r.yamabe.residual_norm);
    w.kv("iterations", r.yamabe.iterations);
    double max_abs_v = 0.0;
    for (double x : r.yamabe.v) max_abs_v = std::max(max_abs_v, std::abs(x));
    w.kv("max_abs_v", max_abs_v);
    w.kv("source_slope", r.source_slope);
    w.kv("degenerate", r.degenerate);
    w.key("fit");
    put_fit(w, r.yamabe.fit);
    w.end_object();
  }

  if (r.have_mass) {
    w.key("mass").begin_object();
    w.kv("mu", r.mass_base.mu);
    w.kv("gamma_bar", r.mass_base.gamma_bar);
    w.kv("total_mass", r.mass_base.total_mass);
    w.key("fit");
    put_fit(w, r.mass_base.fit);
    w.end_object();
  }

  if (r.have_family) {
    w.key("family").begin_object();
    w.kv("pass", r.family.pass);
    w.kv("degenerate", r.family.degenerate);
    w.key("members").begin_array();
    for (const auto& m : r.family.members) put_member(w, m);
    w.end_array();
    w.end_object();
  }

  if (!r.lemma.empty()) {
    w.key("lemma").begin_array();
    for (const auto& l : r.lemma) put_lemma(w, l);
    w.end_array();
  }

  if (r.have_static) {
    w.key("static");
    put_static(w, r.static_base);
  }
  if (r.have_scan) {
    w.key("horizon_scan");
    put_scan(w, r.scan_base);
    w.key("member_scans").begin_array();
    for (const auto& s : r.scan_members) put_scan(w, s);
    w.end_array();
  }
  if (r.have_admissibility) {
    w.key("admissibility");
    put_admissibility(w, r.admissibility);
    w.key("member_admissible").begin_array();
    for (bool b : r.member_admissible) w.value(b);
    w.end_array();
  }

  w.key("convergence").begin_object();
  w.key("rows").begin_array();
  for (const auto& row : r.convergence.rows) {
    w.begin_object();
    w.kv("level", row.level);
    w.kv("nodes", row.nodes);
    w.kv("min_R_plus", row.min_R_plus);
    w.kv("v_n", row.v_n);
    w.kv("mu", row.mu);
    w.end_object();
  }
  w.end_array();
  w.key("order_min_R").numbers(r.convergence.order_min_R);
  w.key("order_v_n").numbers(r.convergence.order_v_n);
  w.key("order_mu").numbers(r.convergence.order_mu);
  w.end_object();

  w.end_object();
  return w.str() + "\n";
}

void emit_plots(const RunReport& r, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  {
    std::string out = "s,measured_drop,predicted_drop,rel_err\n";
    for (const auto& m : r.family.members) {
      double rel = 0.0;
      if (m.predicted_drop != 0.0)
        rel = std::abs(m.measured_drop - m.predicted_drop) / std::abs(m.predicted_drop);
      else if (m.measured_drop != 0.0)
        rel = std::numeric_limits<double>::infinity();
      out += csv(m.s) + "," + csv(m.measured_drop) + "," + csv(m.predicted_drop) + "," +
             csv(rel) + "\n";
    }
    jsonio::write_file(dir + "/mass_drop.csv", out);
  }

  {
    std::string header = "t,R_base";
    for (std::size_t k = 0; k < r.profile_R_members.size(); ++k) {
      char lbl[48];
      std::snprintf(lbl, sizeof lbl, ",R_s%g",
                    k < r.family.members.size() ? r.family.members[k].s : 0.0);
      header += lbl;
    }
    std::string out = header + "\n";
    for (std::size_t i = 0; i < r.profile_t.size(); ++i) {
      out += csv(r.profile_t[i]) + "," +
             csv(i < r.profile_R_base.size() ? r.profile_R_base[i] : 0.0);
      for (const auto& col : r.profile_R_members)
        out += "," + csv(i < col.size() ? col[i] : 0.0);
      out += "\n";
    }
    jsonio::write_file(dir + "/curvature_profile.csv", out);
  }

  {
    std::string out = "t,v\n";
    for (std::size_t i = 0; i < r.profile_t.size(); ++i)
      out += csv(r.profile_t[i]) + "," + csv(i < r.yamabe.v.size() ? r.yamabe.v[i] : 0.0) + "\n";
    jsonio::write_file(dir + "/yamabe_profile.csv", out);
  }

  {
    const auto& c = r.convergence;
    std::string out = "level,nodes,min_R_plus,v_n,mu,order_min_R,order_v_n,order_mu\n";
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t k = 0; k < c.rows.size(); ++k) {
      const auto& row = c.rows[k];
      // order entry j spans rows j, j+1, j+2; report it on its last row
      const bool has = k >= 2 && k - 2 < c.order_min_R.size();
      out += std::to_string(row.level) + "," + std::to_string(row.nodes) + "," +
             csv(row.min_R_plus) + "," + csv(row.v_n) + "," + csv(row.mu) + "," +
             csv(has ? c.order_min_R[k - 2] : nan) + "," + csv(has ? c.order_v_n[k - 2] : nan) +
             "," + csv(has ? c.order_mu[k - 2] : nan) + "\n";
    }
    jsonio::write_file(dir + "/convergence.csv", out);
  }
}

void write_report(const RunReport& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  jsonio::write_file(dir + "/report.json", render_report(r));
  emit_plots(r, dir);
}

std::string render_lemma(const std::vector<LemmaReport>& reports) {
  Writer w;
  w.begin_array();
  for (const auto& l : reports) put_lemma(w, l);
  w.end_array();
  return w.str() + "\n";
}

std::string render_static(const StaticVerdict& v) {
  Writer w;
  put_static(w, v);
  return w.str() + "\n";
}

std::string render_scan(const HorizonScan& s) {
  Writer w;
  put_scan(w, s);
  return w.str() + "\n";
}

}  // namespace ahlab
