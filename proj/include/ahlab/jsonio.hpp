#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "ahlab/geometry.hpp"

namespace ahlab::jsonio {

// 17-significant-digit decimal form; round-trips any finite double.
// Non-finite values are not valid JSON and render as null.
std::string fmt(double x);

// Streaming JSON emitter with caller-controlled key order and fmt() for
// every number: identical inputs give byte-identical documents (LF only).
class Writer {
 public:
  Writer& begin_object();
  Writer& end_object();
  Writer& begin_array();
  Writer& end_array();
  Writer& key(const std::string& k);
  Writer& value(double v);
  Writer& value(int v);
  Writer& value(std::size_t v);
  Writer& value(bool v);
  Writer& value(const char* v);
  Writer& value(const std::string& v);
  Writer& kv(const std::string& k, double v) { return key(k).value(v); }
  Writer& kv(const std::string& k, int v) { return key(k).value(v); }
  Writer& kv(const std::string& k, std::size_t v) { return key(k).value(v); }
  Writer& kv(const std::string& k, bool v) { return key(k).value(v); }
  Writer& kv(const std::string& k, const char* v) { return key(k).value(v); }
  Writer& kv(const std::string& k, const std::string& v) { return key(k).value(v); }
  Writer& numbers(const std::vector<double>& v);
  // Splices a pre-rendered JSON value (comma handling still applies).
  Writer& raw(const std::string& json_value);

  const std::string& str() const { return out_; }

 private:
  void comma();
  std::string out_;
  std::vector<bool> first_;  // per nesting level: no element emitted yet
  bool pending_key_ = false;
};

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// Versioned profile files. kind "metric" stores the normal-form a(t); kind
// "general" stores the physical coefficients p, q of g = p dt^2 + q h.
void write_profile(const MetricProfile& m, const std::string& path);
void write_profile(const GeneralProfile& m, const std::string& path);

struct LoadedProfile {
  bool is_metric = false;
  MetricProfile metric{Dim(3), {}, {}, {}};
  GeneralProfile general{Dim(3), {}, {}, {}};
};

// Strict reader: unknown keys, bad types, or version mismatches are errors.
LoadedProfile load_profile(const std::string& path);

}  // namespace ahlab::jsonio
