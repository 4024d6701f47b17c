#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coanet/records.hpp"

namespace coanet::ingest {

struct ParseIssue {
  std::size_t line = 0;
  std::string message;
};

struct ParseReport {
  std::size_t metadata_lines = 0;
  std::size_t parsed = 0;
  std::vector<ParseIssue> skipped;    // malformed metadata lines
  std::vector<std::string> warnings;  // assignment anomalies
  std::size_t assignments_applied = 0;
  std::size_t unassigned_papers = 0;
};

struct Corpus {
  std::vector<PaperRecord> records;
  ParseReport report;
};

// Splits a joined author string. Semicolons win if present, otherwise
// " and " plus commas. Comma-inverted names inside a comma-joined list are
// ambiguous by construction; array-form inputs avoid the issue entirely.
std::vector<std::string> split_author_field(const std::string& joined);

// Reads metadata (JSON lines) and topic assignments (CSV with header
// paper_id,topic_id,probability). Malformed metadata lines are skipped and
// reported; assignment anomalies (unknown paper, duplicate, bad values)
// become warnings. Records keep metadata file order.
Corpus parse_corpus(std::istream& metadata, std::istream& assignments);
Corpus parse_corpus_files(const std::string& metadata_path, const std::string& assignments_path);

// Inclusive date window. from > to raises ValidationError.
std::vector<PaperRecord> filter_by_date(const std::vector<PaperRecord>& records,
                                        const std::optional<Date>& from,
                                        const std::optional<Date>& to);

// Most frequent category over the given records; ties resolve to the
// lexicographically smallest code. nullopt when no record has categories.
std::optional<std::string> primary_category(const std::vector<PaperRecord>& records);

}  // namespace coanet::ingest
