#include "coanet/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "coanet/csv.hpp"
#include "coanet/util.hpp"

namespace coanet::metrics {

namespace {

const char* const kMetricNames[kMetricCount] = {
    "collaboration_rate", "repeated_collab_rate", "degree_centralization",
    "degree_assortativity", "modularity",         "small_world",
    "coreness_ratio",      "robustness_ratio",    "avg_constraint",
    "avg_effective_size"};

}  // namespace

const char* metric_name(std::size_t i) { return kMetricNames[i]; }

const MetricValue& metric_value(const MetricVector& v, std::size_t i) {
  switch (i) {
    case 0: return v.collaboration_rate;
    case 1: return v.repeated_collab_rate;
    case 2: return v.degree_centralization;
    case 3: return v.degree_assortativity;
    case 4: return v.modularity;
    case 5: return v.small_world;
    case 6: return v.coreness_ratio;
    case 7: return v.robustness_ratio;
    case 8: return v.avg_constraint;
    default: return v.avg_effective_size;
  }
}

MetricValue& metric_value(MetricVector& v, std::size_t i) {
  return const_cast<MetricValue&>(metric_value(static_cast<const MetricVector&>(v), i));
}

void MetricsOptions::validate() const {
  if (robust_trials < 1) throw ValidationError("robustness trials must be >= 1");
  if (robust_fraction <= 0.0 || robust_fraction >= 1.0)
    throw ValidationError("robustness removal fraction must be in (0,1)");
  if (sample_threshold < 2) throw ValidationError("sample threshold must be >= 2");
  if (sample_sources < 1) throw ValidationError("sample sources must be >= 1");
  if (threads < 0) throw ValidationError("threads must be >= 0");
}

Adjacency Adjacency::from(const netbuild::TopicNetwork& net) {
  Adjacency adj;
  adj.n = net.size();
  adj.nbrs.resize(adj.n);
  adj.degree.assign(adj.n, 0);
  adj.strength.assign(adj.n, 0.0);
  adj.edge_count = static_cast<std::int64_t>(net.edges.size());
  for (const auto& e : net.edges) {
    auto w = static_cast<double>(e.weight);
    adj.nbrs[e.a].push_back({e.b, w});
    adj.nbrs[e.b].push_back({e.a, w});
    adj.strength[e.a] += w;
    adj.strength[e.b] += w;
    ++adj.degree[e.a];
    ++adj.degree[e.b];
  }
  for (auto& row : adj.nbrs) std::sort(row.begin(), row.end());
  return adj;
}

MetricValue collaboration_rate(const netbuild::TopicNetwork& net) {
  std::int64_t total = net.papers();
  if (total == 0) return {};
  return {static_cast<double>(net.multi_author_papers) / static_cast<double>(total),
          true};
}

MetricValue repeated_collab_rate(const netbuild::TopicNetwork& net) {
  if (net.edges.empty()) return {};
  std::int64_t repeated = 0;
  for (const auto& e : net.edges)
    if (e.weight > 1) ++repeated;
  return {static_cast<double>(repeated) / static_cast<double>(net.edges.size()), true};
}

MetricValue degree_centralization(const Adjacency& adj) {
  if (adj.n < 3) return {};
  std::uint32_t dmax = *std::max_element(adj.degree.begin(), adj.degree.end());
  double sum = 0.0;
  for (auto d : adj.degree) sum += static_cast<double>(dmax - d);
  double denom = static_cast<double>(adj.n - 1) * static_cast<double>(adj.n - 2);
  return {sum / denom, true};
}

MetricValue degree_assortativity(const Adjacency& adj) {
  if (adj.n < 3 || adj.edge_count < 2) return {};
  // Pearson correlation over edge endpoint degrees, both orientations
  double sx = 0.0, sxx = 0.0, sxy = 0.0;
  double m2 = 0.0;  // number of directed pairs
  for (std::uint32_t u = 0; u < adj.n; ++u) {
    double du = adj.degree[u];
    for (const auto& [v, w] : adj.nbrs[u]) {
      double dv = adj.degree[v];
      sx += du;
      sxx += du * du;
      sxy += du * dv;
      m2 += 1.0;
    }
  }
  double num = m2 * sxy - sx * sx;
  double den = m2 * sxx - sx * sx;
  if (den <= 0.0) return {};
  return {num / den, true};
}

double weighted_modularity(const Adjacency& adj,
                           const std::vector<std::uint32_t>& community) {
  double total_w = 0.0;
  std::unordered_map<std::uint32_t, double> intra, tot;
  for (std::uint32_t u = 0; u < adj.n; ++u) {
    tot[community[u]] += adj.strength[u];
    for (const auto& [v, w] : adj.nbrs[u]) {
      if (v <= u) continue;
      total_w += w;
      if (community[u] == community[v]) intra[community[u]] += w;
    }
  }
  if (total_w <= 0.0) return 0.0;
  double q = 0.0;
  for (const auto& [c, s] : tot) {
    double in_c = 0.0;
    if (auto it = intra.find(c); it != intra.end()) in_c = it->second;
    double frac = s / (2.0 * total_w);
    q += in_c / total_w - frac * frac;
  }
  return q;
}

namespace {

struct LevelGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> nbrs;  // no self loops
  std::vector<double> self_loop;
  std::vector<double> strength;  // includes 2 * self_loop
  double two_m = 0.0;
};

LevelGraph level_from(const Adjacency& adj) {
  LevelGraph g;
  g.n = adj.n;
  g.nbrs = adj.nbrs;
  g.self_loop.assign(adj.n, 0.0);
  g.strength = adj.strength;
  g.two_m = std::accumulate(adj.strength.begin(), adj.strength.end(), 0.0);
  return g;
}

// One pass of local moving; returns true when any node changed community.
bool local_moving(const LevelGraph& g, std::vector<std::uint32_t>& comm) {
  std::vector<double> tot(g.n, 0.0);
  for (std::uint32_t u = 0; u < g.n; ++u) tot[comm[u]] += g.strength[u];
  bool any_move = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::uint32_t u = 0; u < g.n; ++u) {
      std::uint32_t cur = comm[u];
      std::map<std::uint32_t, double> w_to;  // ordered: ties resolve low
      w_to[cur] = 0.0;
      for (const auto& [v, w] : g.nbrs[u]) w_to[comm[v]] += w;
      tot[cur] -= g.strength[u];
      std::uint32_t best_c = cur;
      double best_score = w_to[cur] - g.strength[u] * tot[cur] / g.two_m;
      for (const auto& [c, w] : w_to) {
        if (c == cur) continue;
        double score = w - g.strength[u] * tot[c] / g.two_m;
        if (score > best_score + 1e-12) {
          best_score = score;
          best_c = c;
        }
      }
      tot[best_c] += g.strength[u];
      if (best_c != cur) {
        comm[u] = best_c;
        moved = true;
        any_move = true;
      }
    }
  }
  return any_move;
}

}  // namespace

Partition modularity_partition(const Adjacency& adj) {
  Partition part;
  if (adj.n == 0 || adj.edge_count == 0) return part;

  LevelGraph g = level_from(adj);
  // node_of[u] = current level node containing original node u
  std::vector<std::uint32_t> node_of(adj.n);
  std::iota(node_of.begin(), node_of.end(), 0);

  while (true) {
    std::vector<std::uint32_t> comm(g.n);
    std::iota(comm.begin(), comm.end(), 0);
    bool any = local_moving(g, comm);
    if (!any) break;

    // renumber communities by first appearance in node order
    std::vector<std::uint32_t> relabel(g.n, UINT32_MAX);
    std::uint32_t next = 0;
    for (std::uint32_t u = 0; u < g.n; ++u) {
      if (relabel[comm[u]] == UINT32_MAX) relabel[comm[u]] = next++;
      comm[u] = relabel[comm[u]];
    }
    for (auto& c : node_of) c = comm[c];

    // aggregate level graph
    LevelGraph h;
    h.n = next;
    h.nbrs.resize(next);
    h.self_loop.assign(next, 0.0);
    h.strength.assign(next, 0.0);
    h.two_m = g.two_m;
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> agg;
    for (std::uint32_t u = 0; u < g.n; ++u) {
      std::uint32_t cu = comm[u];
      h.self_loop[cu] += g.self_loop[u];
      for (const auto& [v, w] : g.nbrs[u]) {
        if (v < u) continue;
        std::uint32_t cv = comm[v];
        if (cu == cv) {
          h.self_loop[cu] += w;
        } else {
          auto key = cu < cv ? std::make_pair(cu, cv) : std::make_pair(cv, cu);
          agg[key] += w;
        }
      }
    }
    for (const auto& [key, w] : agg) {
      h.nbrs[key.first].push_back({key.second, w});
      h.nbrs[key.second].push_back({key.first, w});
    }
    for (auto& row : h.nbrs) std::sort(row.begin(), row.end());
    for (std::uint32_t u = 0; u < h.n; ++u) {
      double s = 2.0 * h.self_loop[u];
      for (const auto& [v, w] : h.nbrs[u]) s += w;
      h.strength[u] = s;
    }
    if (h.n == g.n) break;  // no shrinkage, fixed point
    g = std::move(h);
  }

  part.community = node_of;
  part.q = weighted_modularity(adj, part.community);
  part.valid = true;
  return part;
}

MetricValue modularity(const Adjacency& adj) {
  if (adj.n < 3 || adj.edge_count == 0) return {};
  Partition p = modularity_partition(adj);
  if (!p.valid) return {};
  return {p.q, true};
}

namespace {

// Largest connected component as a compact index list.
std::vector<std::uint32_t> largest_component(const Adjacency& adj) {
  std::vector<int> comp(adj.n, -1);
  int n_comp = 0;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < adj.n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = n_comp;
    queue.assign(1, s);
    while (!queue.empty()) {
      std::uint32_t u = queue.back();
      queue.pop_back();
      for (const auto& [v, w] : adj.nbrs[u]) {
        if (comp[v] < 0) {
          comp[v] = n_comp;
          queue.push_back(v);
        }
      }
    }
    ++n_comp;
  }
  std::vector<std::size_t> size(n_comp, 0);
  for (auto c : comp) ++size[c];
  int best = 0;
  for (int c = 1; c < n_comp; ++c)
    if (size[c] > size[best]) best = c;  // first wins ties: smallest node id
  std::vector<std::uint32_t> members;
  members.reserve(size[best]);
  for (std::uint32_t u = 0; u < adj.n; ++u)
    if (comp[u] == best) members.push_back(u);
  return members;
}

Adjacency induced(const Adjacency& adj, const std::vector<std::uint32_t>& members) {
  Adjacency out;
  out.n = members.size();
  out.nbrs.resize(out.n);
  out.degree.assign(out.n, 0);
  out.strength.assign(out.n, 0.0);
  std::vector<std::int64_t> remap(adj.n, -1);
  for (std::uint32_t i = 0; i < members.size(); ++i) remap[members[i]] = i;
  for (std::uint32_t i = 0; i < members.size(); ++i) {
    for (const auto& [v, w] : adj.nbrs[members[i]]) {
      if (remap[v] < 0) continue;
      out.nbrs[i].push_back({static_cast<std::uint32_t>(remap[v]), w});
      out.strength[i] += w;
      ++out.degree[i];
      if (remap[v] > i) ++out.edge_count;
    }
  }
  return out;
}

}  // namespace

MetricValue small_world_coefficient(const Adjacency& adj, std::uint64_t seed,
                                    std::size_t sample_threshold,
                                    std::size_t sample_sources) {
  if (adj.n < 3 || adj.edge_count == 0) return {};
  auto members = largest_component(adj);
  if (members.size() < 3) return {};
  Adjacency lcc = induced(adj, members);

  const double n = static_cast<double>(lcc.n);
  const double e = static_cast<double>(lcc.edge_count);
  const double mean_degree = 2.0 * e / n;
  if (mean_degree <= 1.0) return {};

  // average local clustering, degree<2 nodes contribute zero
  double c_sum = 0.0;
  for (std::uint32_t u = 0; u < lcc.n; ++u) {
    std::uint32_t d = lcc.degree[u];
    if (d < 2) continue;
    std::size_t links = 0;
    const auto& nu = lcc.nbrs[u];
    for (std::size_t x = 0; x < nu.size(); ++x) {
      for (std::size_t y = x + 1; y < nu.size(); ++y) {
        // is nu[x] adjacent to nu[y]?
        const auto& row = lcc.nbrs[nu[x].first];
        auto it = std::lower_bound(
            row.begin(), row.end(), std::make_pair(nu[y].first, 0.0),
            [](const auto& p, const auto& q) { return p.first < q.first; });
        if (it != row.end() && it->first == nu[y].first) ++links;
      }
    }
    c_sum += 2.0 * static_cast<double>(links) /
             (static_cast<double>(d) * static_cast<double>(d - 1));
  }
  double c_actual = c_sum / n;

  // mean shortest path via BFS, sampled sources above the threshold
  std::vector<std::uint32_t> sources;
  if (lcc.n > sample_threshold && sample_sources < lcc.n) {
    std::vector<std::uint32_t> pool(lcc.n);
    std::iota(pool.begin(), pool.end(), 0);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < sample_sources; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
      sources.push_back(pool[i]);
    }
    std::sort(sources.begin(), sources.end());
  } else {
    sources.resize(lcc.n);
    std::iota(sources.begin(), sources.end(), 0);
  }
  double dist_sum = 0.0;
  double dist_count = 0.0;
  std::vector<std::int32_t> dist(lcc.n);
  std::deque<std::uint32_t> queue;
  for (auto s : sources) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      std::uint32_t u = queue.front();
      queue.pop_front();
      for (const auto& [v, w] : lcc.nbrs[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (std::uint32_t v = 0; v < lcc.n; ++v) {
      if (v == s) continue;
      dist_sum += dist[v];
      dist_count += 1.0;
    }
  }
  if (dist_count == 0.0) return {};
  double l_actual = dist_sum / dist_count;

  double c_random = 2.0 * e / (n * (n - 1.0));
  double l_random = std::log(n) / std::log(mean_degree);
  if (c_random <= 0.0 || l_random <= 0.0 || l_actual <= 0.0) return {};
  double omega = (c_actual / c_random) / (l_actual / l_random);
  return {omega, true};
}

std::vector<std::uint32_t> core_numbers(const Adjacency& adj) {
  const std::size_t n = adj.n;
  std::vector<std::uint32_t> deg(adj.degree);
  std::uint32_t maxd = 0;
  for (auto d : deg) maxd = std::max(maxd, d);
  std::vector<std::vector<std::uint32_t>> bins(maxd + 1);
  for (std::uint32_t u = 0; u < n; ++u) bins[deg[u]].push_back(u);
  std::vector<std::uint32_t> core(n, 0);
  std::vector<char> removed(n, 0);
  std::uint32_t k = 0;
  for (std::uint32_t d = 0; d <= maxd; ++d) {
    auto& bin = bins[d];
    for (std::size_t idx = 0; idx < bin.size(); ++idx) {
      std::uint32_t u = bin[idx];
      if (removed[u] || deg[u] != d) continue;
      k = std::max(k, d);
      core[u] = k;
      removed[u] = 1;
      for (const auto& [v, w] : adj.nbrs[u]) {
        if (removed[v] || deg[v] <= d) continue;
        --deg[v];
        if (deg[v] <= maxd) bins[deg[v]].push_back(v);
      }
    }
  }
  return core;
}

MetricValue coreness_ratio(const Adjacency& adj) {
  if (adj.n < 3 || adj.edge_count == 0) return {};
  auto core = core_numbers(adj);
  std::uint32_t kmax = *std::max_element(core.begin(), core.end());
  if (kmax == 0) return {};
  std::size_t inner = 0;
  for (auto c : core)
    if (c == kmax) ++inner;
  return {static_cast<double>(inner) / static_cast<double>(adj.n), true};
}

namespace {

std::size_t lcc_size_after_removal(const Adjacency& adj, const std::vector<char>& gone) {
  std::vector<int> comp(adj.n, -1);
  std::size_t best = 0;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < adj.n; ++s) {
    if (gone[s] || comp[s] >= 0) continue;
    comp[s] = 1;
    queue.assign(1, s);
    std::size_t size = 0;
    while (!queue.empty()) {
      std::uint32_t u = queue.back();
      queue.pop_back();
      ++size;
      for (const auto& [v, w] : adj.nbrs[u]) {
        if (!gone[v] && comp[v] < 0) {
          comp[v] = 1;
          queue.push_back(v);
        }
      }
    }
    best = std::max(best, size);
  }
  return best;
}

}  // namespace

MetricValue robustness_ratio(const Adjacency& adj, double fraction, int trials,
                             std::uint64_t seed) {
  if (adj.n < 3 || adj.edge_count == 0) return {};
  auto r = static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(adj.n)));
  if (r == 0 || r >= adj.n) return {};

  // targeted: top-r by degree, ties to the smaller index (= smaller id)
  std::vector<std::uint32_t> order(adj.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (adj.degree[a] != adj.degree[b]) return adj.degree[a] > adj.degree[b];
    return a < b;
  });
  std::vector<char> gone(adj.n, 0);
  for (std::size_t i = 0; i < r; ++i) gone[order[i]] = 1;
  double s_targeted = static_cast<double>(lcc_size_after_removal(adj, gone));

  double s_random_sum = 0.0;
  std::vector<std::uint32_t> pool(adj.n);
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    std::iota(pool.begin(), pool.end(), 0);
    std::fill(gone.begin(), gone.end(), 0);
    for (std::size_t i = 0; i < r; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
      gone[pool[i]] = 1;
    }
    s_random_sum += static_cast<double>(lcc_size_after_removal(adj, gone));
  }
  double s_random = s_random_sum / static_cast<double>(trials);
  if (s_random <= 0.0) return {};
  return {s_targeted / s_random, true};
}

namespace {

double edge_weight(const Adjacency& adj, std::uint32_t u, std::uint32_t v) {
  const auto& row = adj.nbrs[u];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(v, 0.0),
                             [](const auto& p, const auto& q) { return p.first < q.first; });
  if (it != row.end() && it->first == v) return it->second;
  return 0.0;
}

}  // namespace

MetricValue avg_constraint(const Adjacency& adj) {
  if (adj.n == 0 || adj.edge_count == 0) return {};
  double sum = 0.0;
  std::size_t counted = 0;
  for (std::uint32_t i = 0; i < adj.n; ++i) {
    if (adj.degree[i] == 0) continue;
    double c_i = 0.0;
    for (const auto& [j, w_ij] : adj.nbrs[i]) {
      double p_ij = w_ij / adj.strength[i];
      double indirect = 0.0;
      for (const auto& [q, w_iq] : adj.nbrs[i]) {
        if (q == j) continue;
        double w_qj = edge_weight(adj, q, j);
        if (w_qj <= 0.0) continue;
        indirect += (w_iq / adj.strength[i]) * (w_qj / adj.strength[q]);
      }
      double term = p_ij + indirect;
      c_i += term * term;
    }
    sum += c_i;
    ++counted;
  }
  if (counted == 0) return {};
  return {sum / static_cast<double>(counted), true};
}

MetricValue avg_effective_size(const Adjacency& adj) {
  if (adj.n == 0 || adj.edge_count == 0) return {};
  std::vector<double> max_w(adj.n, 0.0);
  for (std::uint32_t u = 0; u < adj.n; ++u)
    for (const auto& [v, w] : adj.nbrs[u]) max_w[u] = std::max(max_w[u], w);
  double sum = 0.0;
  std::size_t counted = 0;
  for (std::uint32_t i = 0; i < adj.n; ++i) {
    if (adj.degree[i] == 0) continue;
    double e_i = 0.0;
    for (const auto& [j, w_ij] : adj.nbrs[i]) {
      double redundancy = 0.0;
      for (const auto& [q, w_iq] : adj.nbrs[i]) {
        if (q == j) continue;
        double w_jq = edge_weight(adj, j, q);
        if (w_jq <= 0.0) continue;
        redundancy += (w_iq / adj.strength[i]) * (w_jq / max_w[j]);
      }
      e_i += 1.0 - redundancy;
    }
    sum += e_i;
    ++counted;
  }
  if (counted == 0) return {};
  return {sum / static_cast<double>(counted), true};
}

MetricVector compute_all(const netbuild::TopicNetwork& net, const MetricsOptions& opts) {
  MetricVector v;
  v.topic_id = net.topic_id;
  v.n_authors = static_cast<std::int64_t>(net.size());
  v.n_papers = net.papers();
  Adjacency adj = Adjacency::from(net);
  std::uint64_t topic_seed =
      derive_seed(opts.seed, static_cast<std::uint64_t>(net.topic_id));

  v.collaboration_rate = collaboration_rate(net);
  v.repeated_collab_rate = repeated_collab_rate(net);
  v.degree_centralization = degree_centralization(adj);
  v.degree_assortativity = degree_assortativity(adj);
  v.modularity = modularity(adj);
  v.small_world = small_world_coefficient(adj, derive_seed(topic_seed, 1),
                                          opts.sample_threshold, opts.sample_sources);
  v.coreness_ratio = coreness_ratio(adj);
  v.robustness_ratio = robustness_ratio(adj, opts.robust_fraction, opts.robust_trials,
                                        derive_seed(topic_seed, 2));
  v.avg_constraint = avg_constraint(adj);
  v.avg_effective_size = avg_effective_size(adj);
  return v;
}

std::vector<MetricVector> compute_batch(const std::vector<netbuild::TopicNetwork>& nets,
                                        const MetricsOptions& opts) {
  opts.validate();
  std::vector<MetricVector> rows(nets.size());
  unsigned n_threads = opts.threads > 0
                           ? static_cast<unsigned>(opts.threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, nets.empty() ? 1 : nets.size());
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < nets.size(); ++i) rows[i] = compute_all(nets[i], opts);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < n_threads; ++t) {
      workers.emplace_back([&] {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= nets.size()) break;
          rows[i] = compute_all(nets[i], opts);
        }
      });
    }
    for (auto& w : workers) w.join();
  }
  return rows;
}

void write_metrics_csv(const std::string& path, const std::vector<MetricVector>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write metrics csv: " + path);
  out << "topic_id,n_authors,n_papers";
  for (std::size_t i = 0; i < kMetricCount; ++i) out << ',' << kMetricNames[i];
  out << '\n';
  for (const auto& v : rows) {
    out << v.topic_id << ',' << v.n_authors << ',' << v.n_papers;
    for (std::size_t i = 0; i < kMetricCount; ++i) {
      const auto& m = metric_value(v, i);
      out << ',';
      if (m.valid) out << format_double(m.value);
    }
    out << '\n';
  }
  if (!out) throw DataError("write failed: " + path);
}

std::vector<MetricVector> read_metrics_csv(const std::string& path) {
  auto table = csv::read_file(path);
  std::vector<std::string> expected = {"topic_id", "n_authors", "n_papers"};
  for (std::size_t i = 0; i < kMetricCount; ++i) expected.push_back(kMetricNames[i]);
  if (table.header != expected)
    throw DataError(path + ": unexpected metrics csv header");
  std::vector<MetricVector> rows;
  for (const auto& row : table.rows) {
    MetricVector v;
    v.topic_id = std::stoi(row[0]);
    v.n_authors = std::stoll(row[1]);
    v.n_papers = std::stoll(row[2]);
    for (std::size_t i = 0; i < kMetricCount; ++i) {
      const std::string& cell = row[3 + i];
      if (cell.empty()) continue;
      char* end = nullptr;
      double val = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0')
        throw DataError(path + ": bad numeric cell '" + cell + "'");
      metric_value(v, i) = {val, true};
    }
    rows.push_back(v);
  }
  return rows;
}

}  // namespace coanet::metrics
