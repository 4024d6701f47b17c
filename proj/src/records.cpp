#include "coanet/records.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coanet/ingest.hpp"
#include "coanet/util.hpp"

namespace coanet {

using nlohmann::json;

std::string serialize_record(const PaperRecord& rec) {
  json j;
  j["id"] = rec.paper_id;
  j["title"] = rec.title;
  j["abstract"] = rec.abstract_text;
  j["authors"] = rec.authors;
  j["categories"] = rec.categories;
  j["date"] = format_date(rec.date);
  if (rec.topic_id) j["topic_id"] = *rec.topic_id;
  return j.dump();
}

std::optional<std::string> parse_record_line(const std::string& line, PaperRecord& rec) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded()) return "invalid JSON";
  if (!j.is_object()) return "not a JSON object";

  const json* id = j.contains("id") ? &j["id"] : (j.contains("paper_id") ? &j["paper_id"] : nullptr);
  if (!id || !id->is_string() || id->get<std::string>().empty()) return "missing or invalid id";
  rec.paper_id = id->get<std::string>();

  rec.title.clear();
  if (j.contains("title")) {
    if (!j["title"].is_string()) return "title is not a string";
    rec.title = j["title"].get<std::string>();
  }
  rec.abstract_text.clear();
  if (j.contains("abstract")) {
    if (!j["abstract"].is_string()) return "abstract is not a string";
    rec.abstract_text = j["abstract"].get<std::string>();
  }

  rec.authors.clear();
  if (!j.contains("authors")) return "missing authors";
  const json& a = j["authors"];
  if (a.is_array()) {
    for (const auto& item : a) {
      if (!item.is_string()) return "authors array contains a non-string";
      std::string name = trim(item.get<std::string>());
      if (!name.empty()) rec.authors.push_back(name);
    }
  } else if (a.is_string()) {
    rec.authors = ingest::split_author_field(a.get<std::string>());
  } else {
    return "authors is neither array nor string";
  }
  // exact duplicate strings on one paper are a data artifact, keep the first
  std::vector<std::string> dedup;
  for (auto& name : rec.authors) {
    bool seen = false;
    for (const auto& d : dedup)
      if (d == name) { seen = true; break; }
    if (!seen) dedup.push_back(std::move(name));
  }
  rec.authors = std::move(dedup);
  if (rec.authors.empty()) return "empty author list";

  rec.categories.clear();
  if (j.contains("categories")) {
    const json& c = j["categories"];
    if (c.is_array()) {
      for (const auto& item : c) {
        if (!item.is_string()) return "categories array contains a non-string";
        std::string cat = trim(item.get<std::string>());
        if (!cat.empty()) rec.categories.push_back(cat);
      }
    } else if (c.is_string()) {
      std::string s = c.get<std::string>();
      for (char& ch : s)
        if (ch == ',') ch = ' ';
      std::istringstream ss(s);
      std::string tok;
      while (ss >> tok) rec.categories.push_back(tok);
    } else {
      return "categories is neither array nor string";
    }
  }

  if (!j.contains("date") || !j["date"].is_string()) return "missing date";
  auto d = parse_date(j["date"].get<std::string>());
  if (!d) return "unparseable date: " + j["date"].get<std::string>();
  rec.date = *d;

  rec.topic_id.reset();
  if (j.contains("topic_id")) {
    if (!j["topic_id"].is_number_integer()) return "topic_id is not an integer";
    rec.topic_id = j["topic_id"].get<int>();
  }
  return std::nullopt;
}

std::vector<PaperRecord> load_records(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::vector<PaperRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    PaperRecord rec;
    if (auto err = parse_record_line(line, rec))
      throw DataError(path + ":" + std::to_string(lineno) + ": " + *err);
    out.push_back(std::move(rec));
  }
  return out;
}

void save_records(const std::string& path, const std::vector<PaperRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  for (const auto& rec : records) out << serialize_record(rec) << '\n';
  if (!out) throw DataError("write failed: " + path);
}

}  // namespace coanet
