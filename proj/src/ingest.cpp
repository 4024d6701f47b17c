#include "coanet/ingest.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "coanet/csv.hpp"
#include "coanet/util.hpp"

namespace coanet::ingest {

std::vector<std::string> split_author_field(const std::string& joined) {
  std::vector<std::string> parts;
  if (joined.find(';') != std::string::npos) {
    parts = split(joined, ';');
  } else {
    std::string s = joined;
    std::size_t pos;
    while ((pos = s.find(" and ")) != std::string::npos) s.replace(pos, 5, ",");
    parts = split(s, ',');
  }
  std::vector<std::string> out;
  for (auto& p : parts) {
    std::string name = trim(p);
    if (!name.empty()) out.push_back(std::move(name));
  }
  return out;
}

namespace {

struct Assignment {
  int topic_id;
  double probability;
};

// Returns paper_id -> assignment, first occurrence wins.
std::unordered_map<std::string, Assignment> parse_assignments(std::istream& in,
                                                              ParseReport& report) {
  std::unordered_map<std::string, Assignment> out;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  int col_paper = -1, col_topic = -1, col_prob = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto fields = csv::parse_line(line);
    if (header.empty()) {
      header = fields;
      for (int i = 0; i < static_cast<int>(header.size()); ++i) {
        std::string h = to_lower(trim(header[i]));
        if (h == "paper_id" || h == "id") col_paper = i;
        else if (h == "topic_id" || h == "topic") col_topic = i;
        else if (h == "probability" || h == "prob") col_prob = i;
      }
      if (col_paper < 0 || col_topic < 0)
        throw DataError("assignments: header must name paper_id and topic_id columns");
      continue;
    }
    auto warn = [&](const std::string& msg) {
      report.warnings.push_back("assignments line " + std::to_string(lineno) + ": " + msg);
    };
    if (static_cast<int>(fields.size()) <= std::max(col_paper, col_topic)) {
      warn("too few fields");
      continue;
    }
    std::string paper_id = trim(fields[col_paper]);
    if (paper_id.empty()) {
      warn("empty paper_id");
      continue;
    }
    char* end = nullptr;
    std::string topic_str = trim(fields[col_topic]);
    long topic = std::strtol(topic_str.c_str(), &end, 10);
    if (topic_str.empty() || *end != '\0' || topic < 0) {
      warn("invalid topic_id '" + topic_str + "'");
      continue;
    }
    double prob = 1.0;
    if (col_prob >= 0 && col_prob < static_cast<int>(fields.size())) {
      std::string prob_str = trim(fields[col_prob]);
      prob = std::strtod(prob_str.c_str(), &end);
      if (prob_str.empty() || *end != '\0' || prob < 0.0 || prob > 1.0) {
        warn("invalid probability '" + prob_str + "'");
        continue;
      }
    }
    auto [it, inserted] = out.emplace(paper_id, Assignment{static_cast<int>(topic), prob});
    if (!inserted) warn("duplicate assignment for paper '" + paper_id + "', keeping first");
  }
  return out;
}

}  // namespace

Corpus parse_corpus(std::istream& metadata, std::istream& assignments) {
  Corpus corpus;
  ParseReport& report = corpus.report;

  auto assigned = parse_assignments(assignments, report);

  std::unordered_map<std::string, std::size_t> first_line_of;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(metadata, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    ++report.metadata_lines;
    PaperRecord rec;
    if (auto err = parse_record_line(line, rec)) {
      report.skipped.push_back({lineno, *err});
      continue;
    }
    auto [it, inserted] = first_line_of.emplace(rec.paper_id, lineno);
    if (!inserted) {
      report.skipped.push_back({lineno, "duplicate paper id '" + rec.paper_id +
                                            "' (first seen on line " +
                                            std::to_string(it->second) + ")"});
      continue;
    }
    ++report.parsed;
    corpus.records.push_back(std::move(rec));
  }

  std::unordered_set<std::string> known;
  for (auto& rec : corpus.records) {
    known.insert(rec.paper_id);
    auto it = assigned.find(rec.paper_id);
    if (it != assigned.end()) {
      rec.topic_id = it->second.topic_id;
      ++report.assignments_applied;
    } else {
      ++report.unassigned_papers;
    }
  }
  std::vector<std::string> orphaned;
  for (const auto& [paper_id, a] : assigned)
    if (!known.count(paper_id)) orphaned.push_back(paper_id);
  std::sort(orphaned.begin(), orphaned.end());
  for (const auto& paper_id : orphaned)
    report.warnings.push_back("assignment for unknown paper '" + paper_id + "'");
  return corpus;
}

Corpus parse_corpus_files(const std::string& metadata_path, const std::string& assignments_path) {
  std::ifstream meta(metadata_path, std::ios::binary);
  if (!meta) throw DataError("cannot open metadata file: " + metadata_path);
  std::ifstream assign(assignments_path, std::ios::binary);
  if (!assign) throw DataError("cannot open assignments file: " + assignments_path);
  return parse_corpus(meta, assign);
}

std::vector<PaperRecord> filter_by_date(const std::vector<PaperRecord>& records,
                                        const std::optional<Date>& from,
                                        const std::optional<Date>& to) {
  if (from && to && *from > *to)
    throw ValidationError("date window start " + format_date(*from) + " is after end " +
                          format_date(*to));
  std::vector<PaperRecord> out;
  for (const auto& rec : records) {
    if (from && rec.date < *from) continue;
    if (to && rec.date > *to) continue;
    out.push_back(rec);
  }
  return out;
}

std::optional<std::string> primary_category(const std::vector<PaperRecord>& records) {
  std::map<std::string, std::size_t> counts;
  for (const auto& rec : records)
    for (const auto& cat : rec.categories) ++counts[cat];
  if (counts.empty()) return std::nullopt;
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it)
    if (it->second > best->second) best = it;  // map order breaks ties lexicographically
  return best->first;
}

}  // namespace coanet::ingest
