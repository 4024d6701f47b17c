#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coanet/records.hpp"

namespace coanet::synth {

// Planted-modular topics: `communities` author groups of `community_size`,
// densely co-authoring inside each group via two-author papers, with a
// small clique planted in the first group and a sparse ring of bridge
// papers between consecutive groups.
struct ModularSpec {
  int topics = 1;
  int first_topic_id = 1;
  int communities = 6;
  int community_size = 10;
  int intra_papers = 14;  // per community; the first size-1 trace a path
  int clique_size = 6;    // pairwise papers planted in the first community
  int bridge_papers = 6;
  int solo_papers = 3;
  int jitter_papers = 12;  // extra random intra pairs, uniform in [0, jitter]
  std::uint64_t seed = 0;

  void validate() const;
};

// Core-periphery topics: a core covered pairwise by three large papers
// (a clique after expansion), with degree-one periphery authors attached
// to random core members.
struct CorePeripherySpec {
  int topics = 1;
  int first_topic_id = 1;
  int core_size = 18;
  int periphery_size = 42;
  int repeat_papers = 10;  // periphery links published twice
  int solo_papers = 3;
  int jitter_papers = 6;  // extra periphery links, uniform in [0, jitter]
  std::uint64_t seed = 0;

  void validate() const;
};

struct TopicTruth {
  int topic_id = 0;
  std::string structure;  // "planted-modular" | "core-periphery"
  std::vector<std::vector<std::string>> groups;  // communities, or {core, periphery}
};

struct SyntheticCorpus {
  std::vector<PaperRecord> records;
  std::vector<TopicTruth> truth;
};

SyntheticCorpus generate_modular(const ModularSpec& spec);
SyntheticCorpus generate_core_periphery(const CorePeripherySpec& spec);

// Identity corpus for disambiguation evaluation. Identities draw a variant
// template (bare initials, middle-initial forms, diacritic spellings,
// dictionary diminutives, pinyin initialisms, split-syllable pinyin pairs
// that only co-occurrence evidence can join) or join a trap group of two
// distinct authors with confusable names. Helper identities added for
// co-occurrence evidence are extra singletons on top of `identities`.
struct NameCorpusSpec {
  int identities = 10000;
  int target_raws = 0;   // when > 0, grow until exactly this many raw names
  int surname_pool = 0;  // 0 = a unique surname per identity or trap group
  double share_initialism = 0.25;
  double share_middle = 0.15;
  double share_diacritic = 0.15;
  double share_diminutive = 0.10;
  double share_pinyin_initial = 0.10;
  double share_pinyin_split = 0.10;
  double share_trap = 0.15;
  std::uint64_t seed = 0;

  void validate() const;
};

struct GoldPair {
  std::string a, b;  // raw strings
};

struct NameCorpus {
  std::vector<PaperRecord> records;
  std::vector<std::pair<std::string, int>> raw_identity;  // sorted; probes excluded
  std::vector<GoldPair> true_pairs;  // same identity, expected to merge
  std::vector<GoldPair> trap_pairs;  // distinct identities, must stay apart
  int identity_count = 0;
  std::size_t raw_count = 0;
};

NameCorpus generate_name_corpus(const NameCorpusSpec& spec);

// metadata.jsonl + assignments.csv (+ ground_truth.json) under dir.
void write_corpus_files(const std::string& dir, const SyntheticCorpus& corpus);
// Adds gold_map.csv, true_pairs.csv and trap_pairs.csv next to the corpus.
void write_name_corpus_files(const std::string& dir, const NameCorpus& corpus);

}  // namespace coanet::synth
