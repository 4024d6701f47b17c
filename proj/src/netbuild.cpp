#include "coanet/netbuild.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "coanet/csv.hpp"
#include "coanet/names.hpp"
#include "coanet/util.hpp"

namespace coanet::netbuild {

namespace fs = std::filesystem;

disambig::MappingEntry NameMapping::resolve(const std::string& raw) const {
  auto it = entries_.find(raw);
  if (it != entries_.end()) return it->second;
  fallbacks_.push_back(raw);
  auto nn = names::normalize_name(raw);
  if (nn) return {nn->normalized, raw};
  return {raw, raw};
}

TopicNetwork build_topic_network(int topic_id,
                                 const std::vector<const PaperRecord*>& papers,
                                 const NameMapping& mapping) {
  TopicNetwork net;
  net.topic_id = topic_id;

  std::unordered_map<std::string, std::string> cache;  // raw -> canonical id
  auto canon = [&](const std::string& raw) -> const std::string& {
    auto it = cache.find(raw);
    if (it != cache.end()) return it->second;
    return cache.emplace(raw, mapping.resolve(raw).canonical_id).first->second;
  };

  std::vector<std::vector<std::string>> paper_authors;
  paper_authors.reserve(papers.size());
  std::set<std::string> id_set;
  for (const auto* rec : papers) {
    std::set<std::string> ids;
    for (const auto& raw : rec->authors) ids.insert(canon(raw));
    id_set.insert(ids.begin(), ids.end());
    paper_authors.emplace_back(ids.begin(), ids.end());
  }

  net.node_ids.assign(id_set.begin(), id_set.end());
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < net.node_ids.size(); ++i) index[net.node_ids[i]] = i;
  net.paper_counts.assign(net.node_ids.size(), 0);

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> weights;
  for (const auto& authors : paper_authors) {
    for (const auto& id : authors) ++net.paper_counts[index[id]];
    if (authors.size() < 2) {
      ++net.single_author_papers;
      continue;
    }
    ++net.multi_author_papers;
    for (std::size_t i = 0; i < authors.size(); ++i) {
      for (std::size_t j = i + 1; j < authors.size(); ++j) {
        std::uint32_t a = index[authors[i]], b = index[authors[j]];
        if (b < a) std::swap(a, b);
        ++weights[{a, b}];
      }
    }
  }
  net.edges.reserve(weights.size());
  for (const auto& [key, w] : weights) net.edges.push_back({key.first, key.second, w});
  return net;
}

std::vector<TopicNetwork> build_all(const std::vector<PaperRecord>& records,
                                    const NameMapping& mapping) {
  std::map<int, std::vector<const PaperRecord*>> by_topic;
  for (const auto& rec : records)
    if (rec.topic_id) by_topic[*rec.topic_id].push_back(&rec);
  std::vector<TopicNetwork> nets;
  nets.reserve(by_topic.size());
  for (const auto& [topic_id, papers] : by_topic)
    nets.push_back(build_topic_network(topic_id, papers, mapping));
  return nets;
}

TopicNetwork largest_connected_component(const TopicNetwork& net) {
  const std::size_t n = net.size();
  if (n == 0) return net;
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : net.edges) {
    auto ra = find(e.a), rb = find(e.b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::uint32_t, std::vector<std::uint32_t>> comps;
  for (std::uint32_t i = 0; i < n; ++i) comps[find(i)].push_back(i);
  // node ids are sorted, so among equally large components the one with
  // the smallest root holds the lexicographically smallest id
  const std::vector<std::uint32_t>* best = nullptr;
  for (const auto& [root, members] : comps)
    if (!best || members.size() > best->size()) best = &members;

  TopicNetwork out;
  out.topic_id = net.topic_id;
  out.single_author_papers = net.single_author_papers;
  out.multi_author_papers = net.multi_author_papers;
  std::vector<std::int64_t> remap(n, -1);
  for (std::uint32_t i = 0; i < best->size(); ++i) {
    remap[(*best)[i]] = i;
    out.node_ids.push_back(net.node_ids[(*best)[i]]);
    out.paper_counts.push_back(net.paper_counts[(*best)[i]]);
  }
  for (const auto& e : net.edges)
    if (remap[e.a] >= 0 && remap[e.b] >= 0)
      out.edges.push_back({static_cast<std::uint32_t>(remap[e.a]),
                           static_cast<std::uint32_t>(remap[e.b]), e.weight});
  return out;
}

namespace {

std::string nodes_name(int topic_id) {
  return "topic_" + std::to_string(topic_id) + "_nodes.csv";
}
std::string edges_name(int topic_id) {
  return "topic_" + std::to_string(topic_id) + "_edges.csv";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_network_csvs(const std::string& dir, const TopicNetwork& net) {
  fs::create_directories(dir);
  {
    std::ofstream out(fs::path(dir) / nodes_name(net.topic_id), std::ios::binary);
    if (!out) throw DataError("cannot write nodes file in " + dir);
    out << "node_id,paper_count\n";
    for (std::size_t i = 0; i < net.node_ids.size(); ++i)
      out << csv::join_row({net.node_ids[i], std::to_string(net.paper_counts[i])})
          << '\n';
  }
  {
    std::ofstream out(fs::path(dir) / edges_name(net.topic_id), std::ios::binary);
    if (!out) throw DataError("cannot write edges file in " + dir);
    out << "source,target,weight\n";
    for (const auto& e : net.edges)
      out << csv::join_row({net.node_ids[e.a], net.node_ids[e.b],
                            std::to_string(e.weight)})
          << '\n';
  }
}

void write_graphml(const std::string& dir, const TopicNetwork& net) {
  fs::create_directories(dir);
  std::ofstream out(fs::path(dir) / ("topic_" + std::to_string(net.topic_id) + ".graphml"),
                    std::ios::binary);
  if (!out) throw DataError("cannot write graphml in " + dir);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"d0\" for=\"node\" attr.name=\"paper_count\" attr.type=\"long\"/>\n"
      << "  <key id=\"d1\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
      << "  <graph id=\"topic_" << net.topic_id << "\" edgedefault=\"undirected\">\n";
  for (std::size_t i = 0; i < net.node_ids.size(); ++i) {
    out << "    <node id=\"" << xml_escape(net.node_ids[i]) << "\"><data key=\"d0\">"
        << net.paper_counts[i] << "</data></node>\n";
  }
  for (const auto& e : net.edges) {
    out << "    <edge source=\"" << xml_escape(net.node_ids[e.a]) << "\" target=\""
        << xml_escape(net.node_ids[e.b]) << "\"><data key=\"d1\">" << e.weight
        << "</data></edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void write_topics_index(const std::string& dir, const std::vector<TopicNetwork>& nets) {
  fs::create_directories(dir);
  std::ofstream out(fs::path(dir) / "topics.csv", std::ios::binary);
  if (!out) throw DataError("cannot write topics index in " + dir);
  out << "topic_id,n_authors,n_edges,single_author_papers,multi_author_papers\n";
  for (const auto& net : nets) {
    out << net.topic_id << ',' << net.size() << ',' << net.edges.size() << ','
        << net.single_author_papers << ',' << net.multi_author_papers << '\n';
  }
}

std::vector<TopicNetwork> read_networks_dir(const std::string& dir) {
  fs::path index = fs::path(dir) / "topics.csv";
  if (!fs::exists(index)) throw DataError("missing topics.csv in " + dir);
  auto table = csv::read_file(index.string());
  std::vector<TopicNetwork> nets;
  for (const auto& row : table.rows) {
    TopicNetwork net;
    net.topic_id = std::stoi(row[0]);
    net.single_author_papers = std::stoll(row[3]);
    net.multi_author_papers = std::stoll(row[4]);

    auto nodes = csv::read_file((fs::path(dir) / nodes_name(net.topic_id)).string());
    std::unordered_map<std::string, std::uint32_t> index_of;
    for (const auto& nrow : nodes.rows) {
      index_of[nrow[0]] = static_cast<std::uint32_t>(net.node_ids.size());
      net.node_ids.push_back(nrow[0]);
      net.paper_counts.push_back(std::stoll(nrow[1]));
    }
    auto edges = csv::read_file((fs::path(dir) / edges_name(net.topic_id)).string());
    for (const auto& erow : edges.rows) {
      auto sa = index_of.find(erow[0]);
      auto sb = index_of.find(erow[1]);
      if (sa == index_of.end() || sb == index_of.end())
        throw DataError("edge endpoint missing from nodes file for topic " +
                        std::to_string(net.topic_id));
      std::uint32_t a = sa->second, b = sb->second;
      if (b < a) std::swap(a, b);
      net.edges.push_back({a, b, std::stoll(erow[2])});
    }
    std::sort(net.edges.begin(), net.edges.end(), [](const auto& x, const auto& y) {
      return std::make_pair(x.a, x.b) < std::make_pair(y.a, y.b);
    });
    nets.push_back(std::move(net));
  }
  std::sort(nets.begin(), nets.end(),
            [](const auto& a, const auto& b) { return a.topic_id < b.topic_id; });
  return nets;
}

}  // namespace coanet::netbuild
