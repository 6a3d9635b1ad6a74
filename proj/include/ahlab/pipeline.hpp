#pragma once
#include "ahlab/config.hpp"
#include "ahlab/report.hpp"

namespace ahlab {

// Constructs the configured metric on a given grid (generated kinds only;
// kind "file" is loaded by the pipeline itself).
MetricProfile build_metric(const MetricSpec& spec, const RadialGrid& grid);

// Full experiment: geometry -> curvature -> yamabe -> deform -> mass ->
// analysis. Stage order is fixed; a hypothesis failure stops the run with a
// partial report and the failing stage identified. report.exit_code follows
// the CLI contract: 0 full pass, 2 verification failure, 1 execution error.
RunReport run_pipeline(const RunConfig& cfg);

// The verify-lemma verb: base metric + Yamabe solve + per-s coefficient
// comparison, nothing else.
std::vector<LemmaReport> run_lemma(const RunConfig& cfg);

}  // namespace ahlab
