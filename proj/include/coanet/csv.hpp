#pragma once

#include <string>
#include <vector>

namespace coanet::csv {

// Quotes a field only when it contains a comma, quote or newline.
std::string escape(const std::string& field);

std::string join_row(const std::vector<std::string>& fields);

// Parses one physical line. Embedded newlines inside quoted fields are not
// supported; none of the formats written here produce them.
std::vector<std::string> parse_line(const std::string& line);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Reads a CSV file with a mandatory header row. Rows whose width differs
// from the header raise DataError mentioning the line number.
Table read_file(const std::string& path);

std::string serialize(const Table& table);

}  // namespace coanet::csv
