#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coanet/metrics.hpp"

namespace coanet::stats {

// --- special functions ---

double normal_cdf(double z);
// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);
// Two-sided p-value for a Student-t statistic with dof degrees of freedom.
double student_t_two_sided_p(double t, double dof);

// --- rank tests and effect sizes ---

struct MannWhitneyResult {
  double u = 0.0;   // min(U_x, U_y)
  double p = 1.0;   // two-sided
  bool exact = false;
};

// Midranks for ties. Exact enumeration when min(n,m) < 8 and the pooled
// sample is tie-free (p = 2 P(U <= u), capped at 1); otherwise normal
// approximation with tie-corrected variance and continuity correction.
MannWhitneyResult mann_whitney_u(const std::vector<double>& x,
                                 const std::vector<double>& y);

double cliffs_delta(const std::vector<double>& x, const std::vector<double>& y);
// negligible / small / medium / large at |d| = 0.147, 0.33, 0.474.
const char* cliffs_delta_label(double delta);

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

// Percentile bootstrap for cliffs_delta; iteration i draws from a
// sub-seeded generator so results are independent of evaluation order.
Interval bootstrap_delta_ci(const std::vector<double>& x, const std::vector<double>& y,
                            int iterations, double level, std::uint64_t seed);

// Family-wise corrected per-test level.
double bonferroni_alpha(double family_alpha, std::size_t tests);

// --- regression ---

// Columns exclude the intercept; one is prepended internally.
struct OlsFit {
  bool valid = false;
  std::vector<double> beta, se, t, p;  // index 0 = intercept
  double r2 = 0.0, adj_r2 = 0.0;
  std::size_t n = 0, k = 0;
};

OlsFit ols(const std::vector<std::vector<double>>& columns, const std::vector<double>& y);

// (v - mean) / sd with the n-1 sample sd; zero variance raises
// ValidationError naming what was being standardized.
std::vector<double> standardize(const std::vector<double>& v, const std::string& what);

// --- analysis over metric rows ---

enum class PopClass { kMid, kPopular, kNiche };

// One ranking by paper count descending (ties toward the smaller topic
// id); the top floor(cutoff * N) topics are popular, the bottom as many
// niche.
std::vector<PopClass> classify_popularity(const std::vector<metrics::MetricVector>& rows,
                                          double cutoff);

struct ComparisonRow {
  std::size_t metric = 0;
  bool valid = false;  // both groups need >= 2 defined values
  std::size_t n_popular = 0, n_niche = 0;
  MannWhitneyResult test;
  double delta = 0.0;
  std::string delta_label;
  Interval delta_ci;
  bool significant = false;
};

ComparisonRow compare_metric(const std::vector<metrics::MetricVector>& rows,
                             const std::vector<PopClass>& classes, std::size_t metric,
                             double alpha, int bootstrap_iterations, std::uint64_t seed);

struct SizeCorrelation {
  std::size_t metric = 0;
  bool valid = false;
  std::size_t n = 0;
  double r = 0.0;
  double p = 1.0;
};

// Pearson correlation of the metric against ln(n_authors), all topics with
// a defined value.
SizeCorrelation size_correlation(const std::vector<metrics::MetricVector>& rows,
                                 std::size_t metric);

enum class EffectClass { kNone, kRobust, kRobustReversed, kConfounded, kEmergent };
const char* effect_class_name(EffectClass c);

EffectClass classify_effect(double beta_simple, double p_simple, double beta_control,
                            double p_control, double alpha);

struct RegressionRow {
  std::size_t metric = 0;
  bool valid = false;
  std::size_t n = 0;
  // model 1: metric ~ popularity
  double beta_simple = 0.0, se_simple = 0.0, p_simple = 1.0, r2_simple = 0.0;
  // model 2: metric ~ popularity + size
  double beta_control = 0.0, se_control = 0.0, p_control = 1.0;
  double beta_size = 0.0, p_size = 1.0, r2_control = 0.0;
  // model 3: + popularity x size interaction
  double beta_interaction = 0.0, p_interaction = 1.0, r2_full = 0.0;
  EffectClass effect = EffectClass::kNone;
};

// Standardized OLS over popular+niche topics with a defined metric value;
// size is standardized ln(n_authors), the interaction is the product of
// the standardized main-effect columns.
RegressionRow regress_metric(const std::vector<metrics::MetricVector>& rows,
                             const std::vector<PopClass>& classes, std::size_t metric,
                             double alpha);

}  // namespace coanet::stats
