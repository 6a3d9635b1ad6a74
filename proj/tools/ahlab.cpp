#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ahlab/config.hpp"
#include "ahlab/jsonio.hpp"
#include "ahlab/pipeline.hpp"
#include "ahlab/report.hpp"

namespace {

const char* status_name(int code) {
  switch (code) {
    case 0: return "pass";
    case 2: return "verification-failure";
    default: return "execution-error";
  }
}

int cmd_run(const std::string& config_path) {
  ahlab::RunConfig cfg = ahlab::load_config(config_path);
  ahlab::RunReport report = ahlab::run_pipeline(cfg);
  ahlab::write_report(report, cfg.output_dir);
  std::printf("report: %s/report.json\n", cfg.output_dir.c_str());
  for (const auto& s : report.stages)
    if (s.ran && !s.message.empty())
      std::printf("%s: %s\n", s.name.c_str(), s.message.c_str());
  std::printf("status: %s (exit %d)\n", status_name(report.exit_code), report.exit_code);
  return report.exit_code;
}

int cmd_verify_lemma(const std::string& config_path) {
  ahlab::RunConfig cfg = ahlab::load_config(config_path);
  std::vector<ahlab::LemmaReport> reports = ahlab::run_lemma(cfg);
  const std::string doc = ahlab::render_lemma(reports);
  std::filesystem::create_directories(cfg.output_dir);
  ahlab::jsonio::write_file(cfg.output_dir + "/lemma.json", doc);
  std::fputs(doc.c_str(), stdout);
  int code = 0;
  for (const auto& l : reports) {
    if (!(l.rel_discrepancy <= cfg.tolerances.fit)) code = 2;
    for (const auto& e : l.expansions)
      if (!(e.rel_err <= 1e-4)) code = 2;  // Lemma-level accuracy contract
  }
  std::printf("status: %s (exit %d)\n", status_name(code), code);
  return code;
}

int cmd_scan(const std::string& metric_path) {
  ahlab::jsonio::LoadedProfile lp = ahlab::jsonio::load_profile(metric_path);
  ahlab::HorizonScan scan = lp.is_metric ? ahlab::minimal_sphere_scan(lp.metric)
                                         : ahlab::minimal_sphere_scan(lp.general);
  std::fputs(ahlab::render_scan(scan).c_str(), stdout);
  return 0;
}

int cmd_static(const std::string& metric_path, double lo, double hi) {
  ahlab::jsonio::LoadedProfile lp = ahlab::jsonio::load_profile(metric_path);
  ahlab::StaticVerdict v = lp.is_metric ? ahlab::static_kernel_test(lp.metric, lo, hi)
                                        : ahlab::static_kernel_test(lp.general, lo, hi);
  std::fputs(ahlab::render_static(v).c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ahlab: mass-decreasing conformal deformations of asymptotically "
               "hyperbolic metrics, in spherical symmetry"};
  app.require_subcommand(1);

  std::string config_path, metric_path;
  std::vector<double> window;

  CLI::App* run = app.add_subcommand("run", "execute the full pipeline for a config");
  run->add_option("config", config_path, "JSON run configuration")->required();

  CLI::App* lemma =
      app.add_subcommand("verify-lemma", "check the mass-drop coefficients only");
  lemma->add_option("config", config_path, "JSON run configuration")->required();

  CLI::App* scan =
      app.add_subcommand("scan-horizons", "locate minimal spheres of a metric file");
  scan->add_option("metric", metric_path, "profile JSON")->required();

  CLI::App* st = app.add_subcommand("static-test", "radial static-kernel test on a window");
  st->add_option("metric", metric_path, "profile JSON")->required();
  st->add_option("--window", window, "window endpoints a,b")
      ->required()
      ->delimiter(',')
      ->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) return cmd_run(config_path);
    if (lemma->parsed()) return cmd_verify_lemma(config_path);
    if (scan->parsed()) return cmd_scan(metric_path);
    if (st->parsed()) return cmd_static(metric_path, window[0], window[1]);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "ahlab: %s\n", e.what());
    return 1;
  }
  return 1;
}
