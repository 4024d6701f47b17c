#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coanet/names.hpp"
#include "coanet/records.hpp"

namespace coanet::disambig {

struct DisambigOptions {
  double similarity_threshold = 0.95;  // stage 1 edge on full normalized strings
  double pinyin_similarity = 0.92;     // stage 2 given-name check, romanized names
  double western_similarity = 0.87;    // stage 2 given-name check, other names
  double jaccard_threshold = 0.5;      // stage 3 combined score cut
  double coauthor_weight = 0.6;        // stage 3 weight on the co-author Jaccard
  std::size_t max_cluster = 50;        // components above this size are split
  std::size_t min_papers = 2;          // stage 3 candidates need this many papers
  int threads = 0;                     // 0 = hardware concurrency
  std::string diminutives_path;        // optional override of the builtin table
  std::string pinyin_path;             // optional override of the builtin lexicon

  void validate() const;  // throws ValidationError on out-of-range values
};

enum class EdgeReason { kInitialExpansion, kHighSimilarity };

struct SimilarityEdge {
  std::uint32_t a = 0, b = 0;  // node indices, a < b
  EdgeReason reason = EdgeReason::kHighSimilarity;
};

// Nodes are unique normalized names; edges only ever connect names sharing
// a last-name block.
struct SimilarityGraph {
  std::vector<names::NormalizedName> nodes;
  std::vector<SimilarityEdge> edges;
};

struct AuditEntry {
  std::string stage;                 // "normalize" | "stage1" | "stage2" | "stage3"
  std::vector<std::string> members;  // normalized names (raw for normalize failures)
  std::string decision;
  double score = 0.0;
};

struct CanonicalAuthor {
  std::string canonical_id;    // normalized form of the representative
  std::string representative;  // display variant chosen for the cluster
  std::vector<std::string> variants;   // raw strings, sorted
  std::vector<std::string> paper_ids;  // sorted, unique
};

struct DisambigSummary {
  std::size_t raw_names = 0;
  std::size_t parsed_names = 0;   // distinct normalized forms
  std::size_t stage1_edges = 0;
  std::size_t stage2_clusters = 0;
  std::size_t stage3_merges = 0;
  std::size_t profiles = 0;       // final canonical author count
};

struct DisambigResult {
  std::vector<CanonicalAuthor> authors;            // sorted by canonical_id
  std::map<std::string, std::size_t> raw_to_author;  // raw string -> authors index
  std::vector<AuditEntry> audit;
  DisambigSummary summary;
};

SimilarityGraph build_similarity_graph(const std::vector<names::NormalizedName>& nodes,
                                       const DisambigOptions& opts);

// Splits one connected component into clusters of node indices.
// Components within max_cluster whose full given names are pairwise
// compatible merge wholesale; larger or incompatible ones are partitioned
// by given-name compatibility, attaching initial-only variants when they
// are adjacent to exactly one subgroup.
std::vector<std::vector<std::uint32_t>> split_component(
    const SimilarityGraph& graph, const std::vector<std::uint32_t>& component,
    const DisambigOptions& opts, const names::NameVariantTable& variants,
    const names::PinyinLexicon& pinyin, std::vector<AuditEntry>* audit);

DisambigResult disambiguate(const std::vector<PaperRecord>& records,
                            const DisambigOptions& opts);

// raw_name,canonical_id,representative with a header row.
void write_mapping_csv(const std::string& path, const DisambigResult& result);
void write_audit_jsonl(const std::string& path, const std::vector<AuditEntry>& audit);

struct MappingEntry {
  std::string canonical_id;
  std::string representative;
};

std::map<std::string, MappingEntry> load_mapping(const std::string& path);

}  // namespace coanet::disambig
