#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coanet {

// Maps to exit code 2 (bad arguments / config out of range).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maps to exit code 3 (unreadable or inconsistent input data).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// splitmix64 step; the basis for all sub-seed derivation so that results
// are independent of scheduling order.
std::uint64_t splitmix64(std::uint64_t x);

// Sub-seed for a named stream, e.g. (global seed, topic_id) or
// (topic seed, trial index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// FNV-1a 64-bit content digests for the run manifest.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64_str(const std::string& s);
std::uint64_t fnv1a64_file(const std::string& path);
std::string hex64(std::uint64_t v);

// Shortest decimal form that round-trips through strtod.
std::string format_double(double v);

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);
std::string to_lower(std::string s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace coanet
