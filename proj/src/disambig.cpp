#include "coanet/disambig.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstring>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "coanet/csv.hpp"
#include "coanet/util.hpp"

namespace coanet::disambig {

using names::NormalizedName;

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);  // smaller index wins, keeps roots stable
    parent[b] = a;
  }
};

// Character histogram prefilter: levenshtein >= L1/2, so pairs whose
// histograms differ too much skip the DP entirely.
struct CharCounts {
  std::array<std::uint8_t, 28> c{};
  std::uint32_t len = 0;
};

CharCounts count_chars(const std::string& s) {
  CharCounts cc;
  cc.len = static_cast<std::uint32_t>(s.size());
  for (char ch : s) {
    int slot;
    if (ch >= 'a' && ch <= 'z') slot = ch - 'a';
    else if (ch >= '0' && ch <= '9') slot = 26;
    else slot = 27;
    if (cc.c[slot] < 255) ++cc.c[slot];
  }
  return cc;
}

std::size_t histogram_l1(const CharCounts& a, const CharCounts& b) {
  std::size_t l1 = 0;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    l1 += a.c[i] > b.c[i] ? a.c[i] - b.c[i] : b.c[i] - a.c[i];
  return l1;
}

bool similarity_exceeds(const std::string& a, const std::string& b, double threshold) {
  std::size_t maxlen = std::max(a.size(), b.size());
  if (maxlen == 0) return false;
  auto limit = static_cast<std::size_t>((1.0 - threshold) * static_cast<double>(maxlen)) + 1;
  std::size_t dist = names::levenshtein_bounded(a, b, limit);
  if (dist > limit) return false;
  return 1.0 - static_cast<double>(dist) / static_cast<double>(maxlen) > threshold;
}

double jaccard(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t inter = 0, i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++inter;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return static_cast<double>(inter) /
         static_cast<double>(a.size() + b.size() - inter);
}

}  // namespace

void DisambigOptions::validate() const {
  auto in_unit = [](double v) { return v > 0.0 && v <= 1.0; };
  if (!in_unit(similarity_threshold))
    throw ValidationError("similarity threshold must be in (0,1]");
  if (!in_unit(pinyin_similarity) || !in_unit(western_similarity))
    throw ValidationError("given-name similarity thresholds must be in (0,1]");
  if (jaccard_threshold < 0.0 || jaccard_threshold > 1.0)
    throw ValidationError("jaccard threshold must be in [0,1]");
  if (coauthor_weight < 0.0 || coauthor_weight > 1.0)
    throw ValidationError("coauthor weight must be in [0,1]");
  if (max_cluster < 2) throw ValidationError("max cluster size must be at least 2");
  if (min_papers < 1) throw ValidationError("min papers must be at least 1");
  if (threads < 0) throw ValidationError("threads must be >= 0");
}

SimilarityGraph build_similarity_graph(const std::vector<NormalizedName>& nodes,
                                       const DisambigOptions& opts) {
  SimilarityGraph graph;
  graph.nodes = nodes;

  std::map<std::string, std::vector<std::uint32_t>> blocks;
  for (std::uint32_t i = 0; i < nodes.size(); ++i) blocks[nodes[i].last].push_back(i);

  std::vector<const std::vector<std::uint32_t>*> block_list;
  block_list.reserve(blocks.size());
  for (const auto& [last, ids] : blocks) block_list.push_back(&ids);

  std::vector<CharCounts> counts(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    counts[i] = count_chars(nodes[i].normalized);

  const double thr = opts.similarity_threshold;
  auto scan_block = [&](const std::vector<std::uint32_t>& ids,
                        std::vector<SimilarityEdge>& out) {
    for (std::size_t x = 0; x < ids.size(); ++x) {
      for (std::size_t y = x + 1; y < ids.size(); ++y) {
        std::uint32_t a = ids[x], b = ids[y];
        if (names::is_initial_expansion(nodes[a], nodes[b])) {
          out.push_back({a, b, EdgeReason::kInitialExpansion});
          continue;
        }
        std::size_t maxlen =
            std::max(nodes[a].normalized.size(), nodes[b].normalized.size());
        auto limit =
            static_cast<std::size_t>((1.0 - thr) * static_cast<double>(maxlen)) + 1;
        if (histogram_l1(counts[a], counts[b]) > 2 * limit) continue;
        if (similarity_exceeds(nodes[a].normalized, nodes[b].normalized, thr))
          out.push_back({a, b, EdgeReason::kHighSimilarity});
      }
    }
  };

  unsigned n_threads = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, block_list.size() ? block_list.size() : 1);

  std::vector<std::vector<SimilarityEdge>> per_block(block_list.size());
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < block_list.size(); ++i)
      scan_block(*block_list[i], per_block[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < n_threads; ++t) {
      workers.emplace_back([&] {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= block_list.size()) break;
          scan_block(*block_list[i], per_block[i]);
        }
      });
    }
    for (auto& w : workers) w.join();
  }
  for (auto& edges : per_block)
    graph.edges.insert(graph.edges.end(), edges.begin(), edges.end());
  return graph;
}

namespace {

struct CompatCache {
  const names::NameVariantTable* variants;
  const names::PinyinLexicon* pinyin;
  double pinyin_thr, western_thr;
  mutable std::map<std::pair<std::string, std::string>, bool> memo;

  bool operator()(const std::string& a, const std::string& b) const {
    if (a == b) return true;
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = names::first_names_compatible(key.first, key.second, *variants, *pinyin,
                                            pinyin_thr, western_thr);
    memo.emplace(key, ok);
    return ok;
  }
};

}  // namespace

std::vector<std::vector<std::uint32_t>> split_component(
    const SimilarityGraph& graph, const std::vector<std::uint32_t>& component,
    const DisambigOptions& opts, const names::NameVariantTable& variants,
    const names::PinyinLexicon& pinyin, std::vector<AuditEntry>* audit) {
  if (component.size() == 1) return {component};

  CompatCache compatible{&variants, &pinyin, opts.pinyin_similarity,
                         opts.western_similarity, {}};

  std::set<std::string> full_set;
  for (auto id : component) {
    const auto& n = graph.nodes[id];
    if (!n.first.empty() && !n.is_initialized) full_set.insert(n.first);
  }
  std::vector<std::string> toks(full_set.begin(), full_set.end());

  std::size_t total_pairs = toks.size() * (toks.size() - 1) / 2;
  std::size_t ok_pairs = 0;
  std::vector<std::vector<char>> adj(toks.size(), std::vector<char>(toks.size(), 0));
  for (std::size_t i = 0; i < toks.size(); ++i) {
    for (std::size_t j = i + 1; j < toks.size(); ++j) {
      if (compatible(toks[i], toks[j])) {
        adj[i][j] = adj[j][i] = 1;
        ++ok_pairs;
      }
    }
  }

  auto members_of = [&](const std::vector<std::uint32_t>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (auto id : ids) out.push_back(graph.nodes[id].normalized);
    return out;
  };

  if (component.size() <= opts.max_cluster && ok_pairs == total_pairs) {
    if (audit && component.size() > 1)
      audit->push_back({"stage2", members_of(component), "merged",
                        total_pairs ? 1.0 : 0.0});
    return {component};
  }

  // Partition full given-name tokens into compatibility cliques, largest
  // degree first so dense groups form before their satellites.
  std::vector<std::size_t> order(toks.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> degree(toks.size(), 0);
  for (std::size_t i = 0; i < toks.size(); ++i)
    degree[i] = static_cast<std::size_t>(
        std::count(adj[i].begin(), adj[i].end(), char(1)));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (degree[a] != degree[b]) return degree[a] > degree[b];
    return toks[a] < toks[b];
  });

  std::vector<int> clique_of(toks.size(), -1);
  int n_cliques = 0;
  for (std::size_t seed : order) {
    if (clique_of[seed] >= 0) continue;
    int c = n_cliques++;
    clique_of[seed] = c;
    std::vector<std::size_t> members = {seed};
    for (std::size_t cand : order) {
      if (clique_of[cand] >= 0) continue;
      bool all = true;
      for (auto m : members) {
        if (!adj[cand][m]) {
          all = false;
          break;
        }
      }
      if (all) {
        clique_of[cand] = c;
        members.push_back(cand);
      }
    }
  }

  std::unordered_map<std::string, int> token_clique;
  for (std::size_t i = 0; i < toks.size(); ++i) token_clique[toks[i]] = clique_of[i];

  std::vector<std::vector<std::uint32_t>> groups(n_cliques);
  std::vector<std::uint32_t> pending;  // initial-form and mononym members
  std::unordered_map<std::uint32_t, int> group_of_node;
  for (auto id : component) {
    const auto& n = graph.nodes[id];
    if (!n.first.empty() && !n.is_initialized) {
      int g = token_clique[n.first];
      groups[g].push_back(id);
      group_of_node[id] = g;
    } else {
      pending.push_back(id);
    }
  }

  // attach an abbreviated variant only when all its full-form neighbors
  // agree on a subgroup
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> nbrs;
  std::set<std::uint32_t> in_comp(component.begin(), component.end());
  for (const auto& e : graph.edges) {
    if (in_comp.count(e.a) && in_comp.count(e.b)) {
      nbrs[e.a].push_back(e.b);
      nbrs[e.b].push_back(e.a);
    }
  }
  std::vector<std::vector<std::uint32_t>> singletons;
  for (auto id : pending) {
    std::set<int> seen;
    auto it = nbrs.find(id);
    if (it != nbrs.end()) {
      for (auto nb : it->second) {
        auto g = group_of_node.find(nb);
        if (g != group_of_node.end()) seen.insert(g->second);
      }
    }
    if (seen.size() == 1) {
      groups[*seen.begin()].push_back(id);
      if (audit)
        audit->push_back({"stage2",
                          {graph.nodes[id].normalized},
                          "attached",
                          1.0});
    } else {
      singletons.push_back({id});
      if (audit && !seen.empty())
        audit->push_back({"stage2",
                          {graph.nodes[id].normalized},
                          "ambiguous",
                          static_cast<double>(seen.size())});
    }
  }

  std::vector<std::vector<std::uint32_t>> out;
  for (auto& g : groups) {
    if (g.empty()) continue;
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  out.insert(out.end(), singletons.begin(), singletons.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  if (audit)
    audit->push_back({"stage2", members_of(component), "split",
                      total_pairs ? static_cast<double>(ok_pairs) /
                                        static_cast<double>(total_pairs)
                                  : 0.0});
  return out;
}

namespace {

// Representative completeness: more tokens first, then fewer initials,
// then the lexicographically smallest normalized form.
bool more_complete(const NormalizedName& a, const NormalizedName& b) {
  auto tokens = [](const NormalizedName& n) {
    return (n.first.empty() ? 0 : 1) + n.middle.size() + 1;
  };
  auto initials = [](const NormalizedName& n) {
    std::size_t k = n.first.empty() ? 0 : (names::token_is_initial(n.first) ? 1 : 0);
    for (const auto& m : n.middle) k += names::token_is_initial(m) ? 1 : 0;
    return k;
  };
  auto ta = tokens(a), tb = tokens(b);
  if (ta != tb) return ta > tb;
  auto ia = initials(a), ib = initials(b);
  if (ia != ib) return ia < ib;
  return a.normalized < b.normalized;
}

}  // namespace

DisambigResult disambiguate(const std::vector<PaperRecord>& records,
                            const DisambigOptions& opts) {
  opts.validate();
  const names::NameVariantTable* variants_ptr = &names::NameVariantTable::builtin();
  names::NameVariantTable variants_override;
  if (!opts.diminutives_path.empty()) {
    variants_override = names::NameVariantTable::from_csv(opts.diminutives_path);
    variants_ptr = &variants_override;
  }
  const names::PinyinLexicon* pinyin_ptr = &names::PinyinLexicon::builtin();
  names::PinyinLexicon pinyin_override;
  if (!opts.pinyin_path.empty()) {
    pinyin_override = names::PinyinLexicon::from_file(opts.pinyin_path);
    pinyin_ptr = &pinyin_override;
  }

  DisambigResult result;

  // raw author string -> papers mentioning it
  std::map<std::string, std::vector<std::uint32_t>> raw_papers;
  for (std::uint32_t p = 0; p < records.size(); ++p)
    for (const auto& a : records[p].authors) raw_papers[a].push_back(p);
  result.summary.raw_names = raw_papers.size();

  // distinct normalized forms become graph nodes
  std::map<std::string, NormalizedName> node_map;
  std::map<std::string, std::vector<std::string>> node_raws;
  std::vector<std::string> unparseable;
  for (const auto& [raw, papers] : raw_papers) {
    auto nn = names::normalize_name(raw);
    if (!nn) {
      unparseable.push_back(raw);
      result.audit.push_back({"normalize", {raw}, "unparseable", 0.0});
      continue;
    }
    auto [it, inserted] = node_map.emplace(nn->normalized, *nn);
    if (!inserted && more_complete(*nn, it->second)) it->second = *nn;
    node_raws[nn->normalized].push_back(raw);
  }

  std::vector<NormalizedName> nodes;
  nodes.reserve(node_map.size());
  for (auto& [norm, nn] : node_map) nodes.push_back(nn);
  result.summary.parsed_names = nodes.size();

  SimilarityGraph graph = build_similarity_graph(nodes, opts);
  result.summary.stage1_edges = graph.edges.size();

  UnionFind uf(nodes.size());
  for (const auto& e : graph.edges) uf.unite(e.a, e.b);
  std::map<std::uint32_t, std::vector<std::uint32_t>> comps;
  for (std::uint32_t i = 0; i < nodes.size(); ++i) comps[uf.find(i)].push_back(i);

  std::vector<std::vector<std::uint32_t>> clusters;
  for (const auto& [root, comp] : comps) {
    auto parts = split_component(graph, comp, opts, *variants_ptr, *pinyin_ptr,
                                 &result.audit);
    clusters.insert(clusters.end(), parts.begin(), parts.end());
  }
  result.summary.stage2_clusters = clusters.size();

  // stage 3 operates on profiles: cluster -> papers, co-author profiles
  const std::size_t n_profiles = clusters.size();
  std::vector<std::vector<std::uint32_t>> profile_papers(n_profiles);
  std::vector<std::uint32_t> node_profile(nodes.size());
  for (std::uint32_t c = 0; c < n_profiles; ++c) {
    for (auto id : clusters[c]) {
      node_profile[id] = c;
      for (const auto& raw : node_raws[nodes[id].normalized]) {
        const auto& papers = raw_papers[raw];
        profile_papers[c].insert(profile_papers[c].end(), papers.begin(), papers.end());
      }
    }
    auto& pp = profile_papers[c];
    std::sort(pp.begin(), pp.end());
    pp.erase(std::unique(pp.begin(), pp.end()), pp.end());
  }

  std::unordered_map<std::string, std::uint32_t> raw_profile;
  for (std::uint32_t c = 0; c < n_profiles; ++c)
    for (auto id : clusters[c])
      for (const auto& raw : node_raws[nodes[id].normalized]) raw_profile[raw] = c;

  std::vector<std::vector<std::uint32_t>> paper_profiles(records.size());
  for (std::uint32_t p = 0; p < records.size(); ++p) {
    for (const auto& a : records[p].authors) {
      auto it = raw_profile.find(a);
      if (it != raw_profile.end()) paper_profiles[p].push_back(it->second);
    }
    auto& v = paper_profiles[p];
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  std::vector<std::vector<std::uint32_t>> coauthors(n_profiles);
  for (std::uint32_t c = 0; c < n_profiles; ++c) {
    auto& co = coauthors[c];
    for (auto p : profile_papers[c])
      for (auto other : paper_profiles[p])
        if (other != c) co.push_back(other);
    std::sort(co.begin(), co.end());
    co.erase(std::unique(co.begin(), co.end()), co.end());
  }

  std::vector<std::uint32_t> profile_rep(n_profiles);
  for (std::uint32_t c = 0; c < n_profiles; ++c) {
    std::uint32_t best = clusters[c].front();
    for (auto id : clusters[c])
      if (more_complete(nodes[id], nodes[best])) best = id;
    profile_rep[c] = best;
  }

  UnionFind puf(n_profiles);
  std::map<std::pair<std::string, char>, std::vector<std::uint32_t>> stage3_blocks;
  for (std::uint32_t c = 0; c < n_profiles; ++c) {
    const auto& rep = nodes[profile_rep[c]];
    if (rep.first.empty()) continue;
    if (profile_papers[c].size() < opts.min_papers) continue;
    stage3_blocks[{rep.last, rep.first[0]}].push_back(c);
  }
  for (const auto& [key, ids] : stage3_blocks) {
    for (std::size_t x = 0; x < ids.size(); ++x) {
      for (std::size_t y = x + 1; y < ids.size(); ++y) {
        std::uint32_t c1 = ids[x], c2 = ids[y];
        double score = opts.coauthor_weight * jaccard(coauthors[c1], coauthors[c2]) +
                       (1.0 - opts.coauthor_weight) *
                           jaccard(profile_papers[c1], profile_papers[c2]);
        if (score > opts.jaccard_threshold) {
          puf.unite(c1, c2);
          ++result.summary.stage3_merges;
          result.audit.push_back({"stage3",
                                  {nodes[profile_rep[c1]].normalized,
                                   nodes[profile_rep[c2]].normalized},
                                  "merged",
                                  score});
        }
      }
    }
  }

  // final clusters, transitively resolved
  std::map<std::uint32_t, std::vector<std::uint32_t>> final_groups;
  for (std::uint32_t c = 0; c < n_profiles; ++c) final_groups[puf.find(c)].push_back(c);

  std::map<std::string, CanonicalAuthor> authors;
  for (const auto& [root, members] : final_groups) {
    std::uint32_t best_node = profile_rep[members.front()];
    for (auto c : members)
      if (more_complete(nodes[profile_rep[c]], nodes[best_node]))
        best_node = profile_rep[c];
    CanonicalAuthor author;
    author.canonical_id = nodes[best_node].normalized;
    std::set<std::uint32_t> papers;
    for (auto c : members) {
      for (auto id : clusters[c])
        for (const auto& raw : node_raws[nodes[id].normalized])
          author.variants.push_back(raw);
      papers.insert(profile_papers[c].begin(), profile_papers[c].end());
    }
    std::sort(author.variants.begin(), author.variants.end());
    // display form: the longest raw spelling of the best node, ties to the
    // lexicographically smallest
    std::string rep;
    for (const auto& raw : node_raws[nodes[best_node].normalized]) {
      if (rep.empty() || raw.size() > rep.size() ||
          (raw.size() == rep.size() && raw < rep))
        rep = raw;
    }
    author.representative = rep;
    for (auto p : papers) author.paper_ids.push_back(records[p].paper_id);
    std::sort(author.paper_ids.begin(), author.paper_ids.end());
    author.paper_ids.erase(
        std::unique(author.paper_ids.begin(), author.paper_ids.end()),
        author.paper_ids.end());
    authors.emplace(author.canonical_id, std::move(author));
  }
  for (const auto& raw : unparseable) {
    CanonicalAuthor author;
    author.canonical_id = raw;
    author.representative = raw;
    author.variants = {raw};
    for (auto p : raw_papers[raw]) author.paper_ids.push_back(records[p].paper_id);
    std::sort(author.paper_ids.begin(), author.paper_ids.end());
    authors.emplace(author.canonical_id, std::move(author));
  }

  for (auto& [id, author] : authors) result.authors.push_back(std::move(author));
  result.summary.profiles = result.authors.size();
  for (std::size_t i = 0; i < result.authors.size(); ++i)
    for (const auto& raw : result.authors[i].variants) result.raw_to_author[raw] = i;
  return result;
}

void write_mapping_csv(const std::string& path, const DisambigResult& result) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write mapping: " + path);
  out << "raw_name,canonical_id,representative\n";
  for (const auto& [raw, idx] : result.raw_to_author) {
    const auto& a = result.authors[idx];
    out << csv::join_row({raw, a.canonical_id, a.representative}) << '\n';
  }
  if (!out) throw DataError("write failed: " + path);
}

void write_audit_jsonl(const std::string& path, const std::vector<AuditEntry>& audit) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write audit log: " + path);
  for (const auto& e : audit) {
    nlohmann::json j;
    j["stage"] = e.stage;
    j["members"] = e.members;
    j["decision"] = e.decision;
    j["score"] = e.score;
    out << j.dump() << '\n';
  }
  if (!out) throw DataError("write failed: " + path);
}

std::map<std::string, MappingEntry> load_mapping(const std::string& path) {
  auto table = csv::read_file(path);
  int col_raw = -1, col_id = -1, col_rep = -1;
  for (int i = 0; i < static_cast<int>(table.header.size()); ++i) {
    std::string h = to_lower(trim(table.header[i]));
    if (h == "raw_name") col_raw = i;
    else if (h == "canonical_id") col_id = i;
    else if (h == "representative") col_rep = i;
  }
  if (col_raw < 0 || col_id < 0)
    throw DataError(path + ": header must name raw_name and canonical_id");
  std::map<std::string, MappingEntry> out;
  for (const auto& row : table.rows) {
    MappingEntry e;
    e.canonical_id = row[col_id];
    e.representative = col_rep >= 0 ? row[col_rep] : row[col_id];
    out[row[col_raw]] = e;
  }
  return out;
}

}  // namespace coanet::disambig
