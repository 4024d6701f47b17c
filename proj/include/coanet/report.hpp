#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coanet/stats.hpp"

namespace coanet::report {

struct AnalysisOptions {
  double cutoff = 0.20;
  double alpha = 0.005;  // Bonferroni-corrected per-test level
  int bootstrap_iterations = 10000;
  std::uint64_t seed = 0;
  std::vector<double> sensitivity_cutoffs = {0.15, 0.20, 0.25, 0.30};

  void validate() const;
};

struct SensitivityCell {
  double cutoff = 0.0;
  std::size_t metric = 0;
  bool valid = false;
  double delta = 0.0;
  double p = 1.0;
  bool significant = false;
};

struct AnalysisReport {
  AnalysisOptions options;
  std::size_t n_topics = 0;
  std::size_t n_popular = 0;
  std::size_t n_niche = 0;
  std::vector<stats::ComparisonRow> comparisons;      // one per metric
  std::vector<stats::SizeCorrelation> correlations;   // one per metric
  std::vector<stats::RegressionRow> regressions;      // one per metric
  std::vector<SensitivityCell> sensitivity;           // cutoff-major order
};

AnalysisReport analyze(const std::vector<metrics::MetricVector>& rows,
                       const AnalysisOptions& options);

std::string to_json(const AnalysisReport& report);
AnalysisReport from_json(const std::string& json_text);

// Plain-text tables: group comparison, size correlation, regression suite
// with effect classes, and the cutoff sensitivity grid.
std::string render_text(const AnalysisReport& report);

}  // namespace coanet::report
