#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coanet/date.hpp"

namespace coanet {

struct PaperRecord {
  std::string paper_id;
  std::string title;
  std::string abstract_text;
  std::vector<std::string> authors;  // raw author strings, order preserved
  std::vector<std::string> categories;
  Date date;
  std::optional<int> topic_id;

  bool operator==(const PaperRecord&) const = default;
};

// One JSON object per record; keys emitted in a fixed order.
std::string serialize_record(const PaperRecord& rec);

// Parses one metadata line. Returns nullopt on success, otherwise a short
// error description. Accepts authors/categories either as arrays or as
// single delimiter-joined strings, as found in common corpus exports.
std::optional<std::string> parse_record_line(const std::string& line, PaperRecord& rec);

// Strict loader for pipeline-internal record files: any malformed line
// raises DataError with the line number.
std::vector<PaperRecord> load_records(const std::string& path);

void save_records(const std::string& path, const std::vector<PaperRecord>& records);

}  // namespace coanet
