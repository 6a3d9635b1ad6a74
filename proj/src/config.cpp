#include "ahlab/config.hpp"

#include <cstdlib>
#include <initializer_list>

#include <nlohmann/json.hpp>

#include "ahlab/jsonio.hpp"

namespace ahlab {

namespace {

using nlohmann::json;

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* where) {
  if (!j.is_object()) throw error(std::string("config: ") + where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok) throw error(std::string("config: unknown key \"") + it.key() + "\" in " + where);
  }
}

double get_number(const json& j, const char* name, double fallback) {
  if (!j.contains(name)) return fallback;
  if (!j[name].is_number()) throw error(std::string("config: \"") + name + "\" must be a number");
  return j[name].get<double>();
}

int get_int(const json& j, const char* name, int fallback) {
  if (!j.contains(name)) return fallback;
  if (!j[name].is_number_integer())
    throw error(std::string("config: \"") + name + "\" must be an integer");
  return j[name].get<int>();
}

std::string get_string(const json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_string())
    throw error(std::string("config: missing string \"") + name + "\"");
  return j[name].get<std::string>();
}

void forbid(const json& j, std::initializer_list<const char*> keys, const std::string& kind) {
  for (const char* k : keys)
    if (j.contains(k))
      throw error(std::string("config: key \"") + k + "\" does not apply to kind \"" + kind + "\"");
}

void parse_metric(const json& j, MetricSpec& m) {
  check_keys(j,
             {"kind", "n", "m", "gamma_bar", "t_c", "w", "eps", "t_min", "t_max", "t_omega",
              "path"},
             "metric");
  m.kind = get_string(j, "kind");
  if (m.kind != "hyperbolic" && m.kind != "ads_schwarzschild" && m.kind != "bumped" &&
      m.kind != "file")
    throw error("config: metric.kind must be hyperbolic | ads_schwarzschild | bumped | file");

  if (m.kind == "file") {
    m.path = get_string(j, "path");
    forbid(j, {"n", "m", "gamma_bar", "t_c", "w", "eps", "t_min", "t_max"}, m.kind);
  } else {
    forbid(j, {"path"}, m.kind);
    m.n = get_int(j, "n", m.n);
    Dim check(m.n);  // range validation
    if (m.kind != "ads_schwarzschild") forbid(j, {"m"}, m.kind);
    if (m.kind != "bumped") forbid(j, {"gamma_bar", "t_c", "w", "eps"}, m.kind);
    m.m = get_number(j, "m", m.m);
    m.gamma_bar = get_number(j, "gamma_bar", m.gamma_bar);
    m.t_c = get_number(j, "t_c", m.t_c);
    m.w = get_number(j, "w", m.w);
    m.eps = get_number(j, "eps", m.eps);
    m.t_min = get_number(j, "t_min", m.t_min);
    m.t_max = get_number(j, "t_max", m.t_max);
    if (!(m.t_min > 0.0) || !(m.t_max > m.t_min))
      throw error("config: need 0 < t_min < t_max");
    if (m.kind == "ads_schwarzschild" && !(m.m > 0.0))
      throw error("config: ads_schwarzschild needs m > 0");
    if (m.kind == "bumped" && !(m.w > 0.0)) throw error("config: bumped needs w > 0");
  }
  m.t_omega = get_number(j, "t_omega", m.t_omega);
  if (!(m.t_omega > 0.0)) throw error("config: need t_omega > 0");
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw error(std::string("config: JSON parse failure: ") + e.what());
  }
  check_keys(j,
             {"version", "metric", "grid", "cutoff", "s_values", "tolerances", "static_window",
              "fit_window", "output"},
             "config");
  if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != 1)
    throw error("config: missing or unsupported version (expected 1)");
  if (!j.contains("metric")) throw error("config: missing \"metric\"");

  RunConfig c;
  parse_metric(j["metric"], c.metric);

  if (j.contains("grid")) {
    const json& g = j["grid"];
    check_keys(g, {"levels", "nodes"}, "grid");
    c.grid.levels = get_int(g, "levels", c.grid.levels);
    c.grid.nodes = get_int(g, "nodes", c.grid.nodes);
    if (c.grid.levels < 1 || c.grid.levels > 6) throw error("config: grid.levels must be in [1,6]");
    if (c.grid.nodes < 16) throw error("config: grid.nodes must be >= 16");
  }
  if (j.contains("cutoff")) {
    const json& g = j["cutoff"];
    check_keys(g, {"t0", "t1"}, "cutoff");
    c.cutoff.t0 = get_number(g, "t0", c.cutoff.t0);
    c.cutoff.t1 = get_number(g, "t1", c.cutoff.t1);
  }
  validate(c.cutoff);
  if (j.contains("s_values")) {
    if (!j["s_values"].is_array() || j["s_values"].empty())
      throw error("config: s_values must be a non-empty array");
    c.s_values.clear();
    for (const auto& e : j["s_values"]) {
      if (!e.is_number()) throw error("config: s_values entries must be numbers");
      c.s_values.push_back(e.get<double>());
    }
  }
  for (double s : c.s_values)
    if (!(s > 0.0 && s < 1.0)) throw error("config: every s must lie in (0,1)");
  if (j.contains("tolerances")) {
    const json& g = j["tolerances"];
    check_keys(g, {"solver", "curvature", "fit", "static_tol", "gap_tol"}, "tolerances");
    c.tolerances.solver = get_number(g, "solver", c.tolerances.solver);
    c.tolerances.curvature = get_number(g, "curvature", c.tolerances.curvature);
    c.tolerances.fit = get_number(g, "fit", c.tolerances.fit);
    c.tolerances.static_tol = get_number(g, "static_tol", c.tolerances.static_tol);
    c.tolerances.gap_tol = get_number(g, "gap_tol", c.tolerances.gap_tol);
    for (double v : {c.tolerances.solver, c.tolerances.curvature, c.tolerances.fit,
                     c.tolerances.static_tol, c.tolerances.gap_tol})
      if (!(v > 0.0)) throw error("config: tolerances must be positive");
    if (!(c.tolerances.static_tol < c.tolerances.gap_tol))
      throw error("config: need static_tol < gap_tol");
  }
  auto parse_window = [&](const char* name, double& lo, double& hi) {
    if (!j.contains(name)) return;
    const json& g = j[name];
    if (!g.is_array() || g.size() != 2 || !g[0].is_number() || !g[1].is_number())
      throw error(std::string("config: ") + name + " must be [lo, hi]");
    lo = g[0].get<double>();
    hi = g[1].get<double>();
    if (!(lo < hi)) throw error(std::string("config: ") + name + " needs lo < hi");
  };
  parse_window("static_window", c.static_lo, c.static_hi);
  parse_window("fit_window", c.fit_lo, c.fit_hi);
  if (j.contains("output")) {
    const json& g = j["output"];
    check_keys(g, {"dir"}, "output");
    if (g.contains("dir")) {
      if (!g["dir"].is_string()) throw error("config: output.dir must be a string");
      c.output_dir = g["dir"].get<std::string>();
    }
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  RunConfig c = parse_config(jsonio::read_file(path));
  if (const char* dir = std::getenv("AHLAB_OUTPUT_DIR"); dir && *dir) c.output_dir = dir;
  return c;
}

std::string config_echo(const RunConfig& c) {
  jsonio::Writer w;
  w.begin_object();
  w.kv("version", 1);
  w.key("metric").begin_object();
  w.kv("kind", c.metric.kind);
  if (c.metric.kind == "file") {
    w.kv("path", c.metric.path);
  } else {
    w.kv("n", c.metric.n);
    if (c.metric.kind == "ads_schwarzschild") w.kv("m", c.metric.m);
    if (c.metric.kind == "bumped") {
      w.kv("gamma_bar", c.metric.gamma_bar);
      w.kv("t_c", c.metric.t_c);
      w.kv("w", c.metric.w);
      w.kv("eps", c.metric.eps);
    }
    w.kv("t_min", c.metric.t_min);
    w.kv("t_max", c.metric.t_max);
  }
  w.kv("t_omega", c.metric.t_omega);
  w.end_object();
  w.key("grid").begin_object();
  w.kv("levels", c.grid.levels);
  w.kv("nodes", c.grid.nodes);
  w.end_object();
  w.key("cutoff").begin_object();
  w.kv("t0", c.cutoff.t0);
  w.kv("t1", c.cutoff.t1);
  w.end_object();
  w.key("s_values").numbers(c.s_values);
  w.key("tolerances").begin_object();
  w.kv("solver", c.tolerances.solver);
  w.kv("curvature", c.tolerances.curvature);
  w.kv("fit", c.tolerances.fit);
  w.kv("static_tol", c.tolerances.static_tol);
  w.kv("gap_tol", c.tolerances.gap_tol);
  w.end_object();
  w.key("static_window").begin_array().value(c.static_lo).value(c.static_hi).end_array();
  if (c.fit_lo > 0.0)
    w.key("fit_window").begin_array().value(c.fit_lo).value(c.fit_hi).end_array();
  w.key("output").begin_object();
  w.kv("dir", c.output_dir);
  w.end_object();
  w.end_object();
  return w.str();
}

}  // namespace ahlab
