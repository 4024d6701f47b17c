#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coanet/netbuild.hpp"

namespace coanet::metrics {

struct MetricValue {
  double value = 0.0;
  bool valid = false;
};

struct MetricVector {
  int topic_id = -1;
  std::int64_t n_authors = 0;
  std::int64_t n_papers = 0;
  MetricValue collaboration_rate;
  MetricValue repeated_collab_rate;
  MetricValue degree_centralization;
  MetricValue degree_assortativity;
  MetricValue modularity;
  MetricValue small_world;
  MetricValue coreness_ratio;
  MetricValue robustness_ratio;
  MetricValue avg_constraint;
  MetricValue avg_effective_size;
};

inline constexpr std::size_t kMetricCount = 10;
// Canonical metric order; also the metrics CSV column order.
const char* metric_name(std::size_t i);
const MetricValue& metric_value(const MetricVector& v, std::size_t i);
MetricValue& metric_value(MetricVector& v, std::size_t i);

struct MetricsOptions {
  std::uint64_t seed = 0;          // global; per-topic sub-seeds are derived
  int robust_trials = 25;          // random-removal trials
  double robust_fraction = 0.10;   // share of nodes removed
  std::size_t sample_threshold = 200;  // path sampling above this many nodes
  std::size_t sample_sources = 200;    // BFS sources when sampling
  int threads = 0;

  void validate() const;
};

// Flattened adjacency shared by the metric kernels. Node order follows the
// network's sorted node_ids, so index order is id order.
struct Adjacency {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> nbrs;  // sorted
  std::vector<std::uint32_t> degree;
  std::vector<double> strength;
  std::int64_t edge_count = 0;

  static Adjacency from(const netbuild::TopicNetwork& net);
};

MetricValue collaboration_rate(const netbuild::TopicNetwork& net);
MetricValue repeated_collab_rate(const netbuild::TopicNetwork& net);
MetricValue degree_centralization(const Adjacency& adj);
MetricValue degree_assortativity(const Adjacency& adj);

struct Partition {
  std::vector<std::uint32_t> community;  // per node
  double q = 0.0;
  bool valid = false;
};

// Deterministic weighted Louvain: nodes swept in index order, gain ties
// resolve to the smallest community label.
Partition modularity_partition(const Adjacency& adj);
double weighted_modularity(const Adjacency& adj, const std::vector<std::uint32_t>& community);
MetricValue modularity(const Adjacency& adj);

// Computed on the largest connected component of adj; path lengths are
// sampled from `sample_sources` BFS roots when the component exceeds
// sample_threshold.
MetricValue small_world_coefficient(const Adjacency& adj, std::uint64_t seed,
                                    std::size_t sample_threshold,
                                    std::size_t sample_sources);

std::vector<std::uint32_t> core_numbers(const Adjacency& adj);
MetricValue coreness_ratio(const Adjacency& adj);

// Largest-component share after removing the top ceil(fraction*n) nodes by
// degree (ties to the smaller index) relative to the mean over random
// removals of the same size.
MetricValue robustness_ratio(const Adjacency& adj, double fraction, int trials,
                             std::uint64_t seed);

MetricValue avg_constraint(const Adjacency& adj);
MetricValue avg_effective_size(const Adjacency& adj);

MetricVector compute_all(const netbuild::TopicNetwork& net, const MetricsOptions& opts);
std::vector<MetricVector> compute_batch(const std::vector<netbuild::TopicNetwork>& nets,
                                        const MetricsOptions& opts);

void write_metrics_csv(const std::string& path, const std::vector<MetricVector>& rows);
std::vector<MetricVector> read_metrics_csv(const std::string& path);

}  // namespace coanet::metrics
