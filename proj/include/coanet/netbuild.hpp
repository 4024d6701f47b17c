#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coanet/disambig.hpp"
#include "coanet/records.hpp"

namespace coanet::netbuild {

struct WeightedEdge {
  std::uint32_t a = 0, b = 0;  // node indices, a < b
  std::int64_t weight = 0;     // number of joint papers
};

struct TopicNetwork {
  int topic_id = -1;
  std::vector<std::string> node_ids;       // canonical author ids, sorted
  std::vector<std::int64_t> paper_counts;  // papers per author within the topic
  std::vector<WeightedEdge> edges;         // sorted by (a, b)
  std::int64_t single_author_papers = 0;
  std::int64_t multi_author_papers = 0;

  std::size_t size() const { return node_ids.size(); }
  std::int64_t papers() const { return single_author_papers + multi_author_papers; }
};

// Raw author string -> canonical identity. Unmapped names fall back to
// their normalized form (the raw string itself when unparseable) so that a
// partial mapping still yields a usable network.
class NameMapping {
 public:
  NameMapping() = default;
  explicit NameMapping(std::map<std::string, disambig::MappingEntry> entries)
      : entries_(std::move(entries)) {}

  disambig::MappingEntry resolve(const std::string& raw) const;
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::string>& fallbacks() const { return fallbacks_; }

 private:
  std::map<std::string, disambig::MappingEntry> entries_;
  mutable std::vector<std::string> fallbacks_;
};

// Clique expansion over each paper's canonical author set; edge weights
// count joint papers.
TopicNetwork build_topic_network(int topic_id,
                                 const std::vector<const PaperRecord*>& papers,
                                 const NameMapping& mapping);

// One network per assigned topic id, sorted by topic id. Unassigned
// records are ignored.
std::vector<TopicNetwork> build_all(const std::vector<PaperRecord>& records,
                                    const NameMapping& mapping);

// Node-induced subnetwork on the largest connected component; ties break
// on the component holding the lexicographically smallest node id. Paper
// tallies still refer to the source topic.
TopicNetwork largest_connected_component(const TopicNetwork& net);

// Writes topic_<id>_nodes.csv / topic_<id>_edges.csv plus a topics.csv
// index into dir; optionally GraphML next to them.
void write_network_csvs(const std::string& dir, const TopicNetwork& net);
void write_graphml(const std::string& dir, const TopicNetwork& net);
void write_topics_index(const std::string& dir, const std::vector<TopicNetwork>& nets);

std::vector<TopicNetwork> read_networks_dir(const std::string& dir);

}  // namespace coanet::netbuild
