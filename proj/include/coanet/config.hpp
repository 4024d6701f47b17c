#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "coanet/date.hpp"
#include "coanet/disambig.hpp"
#include "coanet/metrics.hpp"
#include "coanet/report.hpp"

namespace coanet::config {

// Whole-pipeline configuration. The file format is sectioned key-value
// text; serialize() emits one canonical form that parse() reads back
// losslessly. The global seed and thread cap are fanned out to the stage
// option structs on access, never stored twice.
struct PipelineConfig {
  std::string metadata_path;
  std::string topics_path;
  std::string out_dir;
  std::optional<Date> from_date;
  std::optional<Date> to_date;
  std::uint64_t seed = 0;
  int threads = 0;

  disambig::DisambigOptions disambig;
  metrics::MetricsOptions metrics;
  report::AnalysisOptions analysis;

  // Stage options with the shared seed/threads applied. Stage seeds are
  // distinct sub-streams of the global seed so their draws never overlap.
  disambig::DisambigOptions disambig_options() const;
  metrics::MetricsOptions metrics_options() const;
  report::AnalysisOptions analysis_options() const;

  void validate() const;  // run-readiness: paths present, ranges checked
};

// Applies one key. Both the file parser and the C API setter route
// through here, so they accept exactly the same keys. Unknown sections or
// keys and malformed values raise ValidationError.
void apply(PipelineConfig& config, const std::string& section, const std::string& key,
           const std::string& value);

PipelineConfig parse(const std::string& text);
PipelineConfig load(const std::string& path);
std::string serialize(const PipelineConfig& config);
void save(const std::string& path, const PipelineConfig& config);

}  // namespace coanet::config
