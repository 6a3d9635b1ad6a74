#include "ahlab/jsonio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ahlab/geometry.hpp"

namespace ahlab::jsonio {

std::string fmt(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

void Writer::comma() {
  if (pending_key_) {
    pending_key_ = false;
    return;  // value follows its key, no separator
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ += ',';
    first_.back() = false;
  }
}

Writer& Writer::begin_object() {
  comma();
  out_ += '{';
  first_.push_back(true);
  return *this;
}

Writer& Writer::end_object() {
  first_.pop_back();
  out_ += '}';
  return *this;
}

Writer& Writer::begin_array() {
  comma();
  out_ += '[';
  first_.push_back(true);
  return *this;
}

Writer& Writer::end_array() {
  first_.pop_back();
  out_ += ']';
  return *this;
}

Writer& Writer::key(const std::string& k) {
  comma();
  out_ += '"';
  out_ += escape(k);
  out_ += "\":";
  pending_key_ = true;
  return *this;
}

Writer& Writer::value(double v) {
  comma();
  out_ += fmt(v);
  return *this;
}

Writer& Writer::value(int v) {
  comma();
  out_ += std::to_string(v);
  return *this;
}

Writer& Writer::value(std::size_t v) {
  comma();
  out_ += std::to_string(v);
  return *this;
}

Writer& Writer::value(bool v) {
  comma();
  out_ += v ? "true" : "false";
  return *this;
}

Writer& Writer::value(const char* v) { return value(std::string(v)); }

Writer& Writer::value(const std::string& v) {
  comma();
  out_ += '"';
  out_ += escape(v);
  out_ += '"';
  return *this;
}

Writer& Writer::numbers(const std::vector<double>& v) {
  begin_array();
  for (double x : v) value(x);
  return end_array();
}

Writer& Writer::raw(const std::string& json_value) {
  comma();
  out_ += json_value;
  return *this;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error("jsonio: cannot open for write: " + path);
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw error("jsonio: write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw error("jsonio: cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_profile(const MetricProfile& m, const std::string& path) {
  validate(m);
  Writer w;
  w.begin_object();
  w.kv("version", 1);
  w.kv("kind", "metric");
  w.kv("n", m.dim.n);
  w.key("nodes").numbers(m.grid.nodes);
  w.key("a").numbers(m.a);
  if (!m.meta.empty()) w.kv("meta", m.meta);
  w.end_object();
  write_file(path, w.str() + "\n");
}

void write_profile(const GeneralProfile& m, const std::string& path) {
  validate(m);
  SinhTable st = sinh_table(m.grid);
  const std::size_t N = m.grid.size();
  std::vector<double> p(N), q(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double s2 = st.sh[i] * st.sh[i];
    p[i] = m.P[i] / s2;
    q[i] = m.Q[i] / s2;
  }
  Writer w;
  w.begin_object();
  w.kv("version", 1);
  w.kv("kind", "general");
  w.kv("n", m.dim.n);
  w.key("nodes").numbers(m.grid.nodes);
  w.key("p").numbers(p);
  w.key("q").numbers(q);
  w.end_object();
  write_file(path, w.str() + "\n");
}

namespace {

using nlohmann::json;

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok) throw error(std::string("profile: unknown key \"") + it.key() + "\" in " + where);
  }
}

std::vector<double> number_array(const json& j, const char* name) {
  if (!j.is_array()) throw error(std::string("profile: \"") + name + "\" must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) throw error(std::string("profile: \"") + name + "\" has a non-number entry");
    out.push_back(e.get<double>());
  }
  return out;
}

}  // namespace

LoadedProfile load_profile(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw error("profile: parse failure in " + path + ": " + e.what());
  }
  if (!j.is_object()) throw error("profile: top level must be an object");
  check_keys(j, {"version", "kind", "n", "nodes", "a", "p", "q", "meta"}, "profile");
  if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != 1)
    throw error("profile: missing or unsupported version (expected 1)");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw error("profile: missing \"kind\"");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw error("profile: missing integer \"n\"");
  if (!j.contains("nodes")) throw error("profile: missing \"nodes\"");

  const std::string kind = j["kind"].get<std::string>();
  Dim dim(j["n"].get<int>());
  RadialGrid grid;
  grid.nodes = number_array(j["nodes"], "nodes");
  validate(grid);
  SinhTable st = sinh_table(grid);

  LoadedProfile out;
  if (kind == "metric") {
    if (j.contains("p") || j.contains("q"))
      throw error("profile: kind \"metric\" carries \"a\", not \"p\"/\"q\"");
    if (!j.contains("a")) throw error("profile: kind \"metric\" requires \"a\"");
    out.is_metric = true;
    out.metric.dim = dim;
    out.metric.grid = grid;
    out.metric.a = number_array(j["a"], "a");
    if (j.contains("meta")) {
      if (!j["meta"].is_string()) throw error("profile: \"meta\" must be a string");
      out.metric.meta = j["meta"].get<std::string>();
    }
    validate(out.metric);
  } else if (kind == "general") {
    if (j.contains("a") || j.contains("meta"))
      throw error("profile: kind \"general\" carries \"p\"/\"q\", not \"a\"");
    if (!j.contains("p") || !j.contains("q"))
      throw error("profile: kind \"general\" requires \"p\" and \"q\"");
    out.is_metric = false;
    out.general.dim = dim;
    out.general.grid = grid;
    std::vector<double> p = number_array(j["p"], "p");
    std::vector<double> q = number_array(j["q"], "q");
    if (p.size() != grid.size() || q.size() != grid.size())
      throw error("profile: p/q length mismatch with nodes");
    out.general.P.resize(grid.size());
    out.general.Q.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double s2 = st.sh[i] * st.sh[i];
      out.general.P[i] = p[i] * s2;
      out.general.Q[i] = q[i] * s2;
    }
    validate(out.general);
  } else {
    throw error("profile: kind must be \"metric\" or \"general\", got \"" + kind + "\"");
  }
  return out;
}

}  // namespace ahlab::jsonio
