#pragma once

#include <map>
#include <string>
#include <vector>

#include "coanet/config.hpp"

namespace coanet::pipeline {

// One manifest entry. A stage is skipped on rerun when its parameter
// digest and every recorded input and output digest still match; timing
// is informational only.
struct StageRecord {
  std::string params;                          // digest of the options in force
  std::map<std::string, std::string> inputs;   // path -> content digest
  std::map<std::string, std::string> outputs;  // path -> content digest
  double seconds = 0.0;
};

struct StageStatus {
  std::string name;
  bool cached = false;
  double seconds = 0.0;
};

struct RunResult {
  std::string out_dir;
  std::vector<StageStatus> stages;
};

extern const char* const kStageNames[5];  // ingest, disambiguate, networks, metrics, analyze

// Runs every stage in order under config.out_dir, resuming from
// manifest.json unless force is set. The manifest is rewritten after each
// stage so an interrupted run resumes at the failed stage.
RunResult run(const config::PipelineConfig& config, bool force = false);

std::map<std::string, StageRecord> load_manifest(const std::string& path);
void save_manifest(const std::string& path, const std::map<std::string, StageRecord>& stages);

}  // namespace coanet::pipeline
