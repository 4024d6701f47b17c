#include "coanet/config.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

#include "coanet/util.hpp"

namespace coanet::config {

namespace {

double parse_real(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end != begin + value.size() || value.empty())
    throw ValidationError("config key '" + key + "': not a number: " + value);
  return v;
}

long long parse_integer(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  long long v = std::strtoll(begin, &end, 10);
  if (end != begin + value.size() || value.empty())
    throw ValidationError("config key '" + key + "': not an integer: " + value);
  return v;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
  if (!value.empty() && value[0] == '-')
    throw ValidationError("config key '" + key + "': must be non-negative: " + value);
  const char* begin = value.c_str();
  char* end = nullptr;
  unsigned long long v = std::strtoull(begin, &end, 10);
  if (end != begin + value.size() || value.empty())
    throw ValidationError("config key '" + key + "': not an integer: " + value);
  return v;
}

std::vector<double> parse_real_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const auto& piece : split(value, ',')) {
    auto item = trim(piece);
    if (item.empty())
      throw ValidationError("config key '" + key + "': empty list entry");
    out.push_back(parse_real(key, item));
  }
  if (out.empty()) throw ValidationError("config key '" + key + "': empty list");
  return out;
}

std::string join_reals(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += format_double(values[i]);
  }
  return out;
}

Date parse_date_or_throw(const std::string& value) {
  auto d = parse_date(value);
  if (!d) throw ValidationError("invalid date '" + value + "' (expect YYYY-MM-DD or YYYY-MM)");
  return *d;
}

}  // namespace

void apply(PipelineConfig& c, const std::string& section, const std::string& key,
           const std::string& value) {
  if (section == "input") {
    if (key == "metadata") { c.metadata_path = value; return; }
    if (key == "topics") { c.topics_path = value; return; }
    if (key == "from") { c.from_date = parse_date_or_throw(value); return; }
    if (key == "to") { c.to_date = parse_date_or_throw(value); return; }
  } else if (section == "output") {
    if (key == "dir") { c.out_dir = value; return; }
  } else if (section == "run") {
    if (key == "seed") { c.seed = parse_unsigned(key, value); return; }
    if (key == "threads") { c.threads = static_cast<int>(parse_integer(key, value)); return; }
  } else if (section == "disambig") {
    if (key == "similarity") { c.disambig.similarity_threshold = parse_real(key, value); return; }
    if (key == "pinyin-similarity") { c.disambig.pinyin_similarity = parse_real(key, value); return; }
    if (key == "western-similarity") { c.disambig.western_similarity = parse_real(key, value); return; }
    if (key == "jaccard") { c.disambig.jaccard_threshold = parse_real(key, value); return; }
    if (key == "coauthor-weight") { c.disambig.coauthor_weight = parse_real(key, value); return; }
    if (key == "max-cluster") {
      c.disambig.max_cluster = static_cast<std::size_t>(parse_unsigned(key, value));
      return;
    }
    if (key == "min-papers") {
      c.disambig.min_papers = static_cast<std::size_t>(parse_unsigned(key, value));
      return;
    }
    if (key == "diminutives") { c.disambig.diminutives_path = value; return; }
    if (key == "pinyin-lexicon") { c.disambig.pinyin_path = value; return; }
  } else if (section == "metrics") {
    if (key == "robust-trials") {
      c.metrics.robust_trials = static_cast<int>(parse_integer(key, value));
      return;
    }
    if (key == "robust-fraction") { c.metrics.robust_fraction = parse_real(key, value); return; }
    if (key == "sample-threshold") {
      c.metrics.sample_threshold = static_cast<std::size_t>(parse_unsigned(key, value));
      return;
    }
  } else if (section == "analysis") {
    if (key == "cutoff") { c.analysis.cutoff = parse_real(key, value); return; }
    if (key == "alpha") { c.analysis.alpha = parse_real(key, value); return; }
    if (key == "bootstrap") {
      c.analysis.bootstrap_iterations = static_cast<int>(parse_integer(key, value));
      return;
    }
    if (key == "cutoffs") { c.analysis.sensitivity_cutoffs = parse_real_list(key, value); return; }
  } else {
    throw ValidationError("unknown config section '" + section + "'");
  }
  throw ValidationError("unknown config key '" + section + "." + key + "'");
}

PipelineConfig parse(const std::string& text) {
  PipelineConfig c;
  std::string section;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ValidationError("config line " + std::to_string(lineno) + ": unterminated section");
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty())
        throw ValidationError("config line " + std::to_string(lineno) + ": empty section name");
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ValidationError("config line " + std::to_string(lineno) + ": expected key = value");
    if (section.empty())
      throw ValidationError("config line " + std::to_string(lineno) + ": key outside any section");
    auto key = trim(t.substr(0, eq));
    auto value = trim(t.substr(eq + 1));
    if (key.empty())
      throw ValidationError("config line " + std::to_string(lineno) + ": empty key");
    auto qualified = section + "." + key;
    if (!seen.insert(qualified).second)
      throw ValidationError("config line " + std::to_string(lineno) + ": duplicate key '" +
                            qualified + "'");
    try {
      apply(c, section, key, value);
    } catch (const ValidationError& e) {
      throw ValidationError("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return c;
}

PipelineConfig load(const std::string& path) { return parse(read_text_file(path)); }

std::string serialize(const PipelineConfig& c) {
  std::string out;
  out += "[input]\n";
  out += "metadata = " + c.metadata_path + "\n";
  out += "topics = " + c.topics_path + "\n";
  if (c.from_date) out += "from = " + format_date(*c.from_date) + "\n";
  if (c.to_date) out += "to = " + format_date(*c.to_date) + "\n";
  out += "\n[output]\n";
  out += "dir = " + c.out_dir + "\n";
  out += "\n[run]\n";
  out += "seed = " + std::to_string(c.seed) + "\n";
  out += "threads = " + std::to_string(c.threads) + "\n";
  out += "\n[disambig]\n";
  out += "similarity = " + format_double(c.disambig.similarity_threshold) + "\n";
  out += "pinyin-similarity = " + format_double(c.disambig.pinyin_similarity) + "\n";
  out += "western-similarity = " + format_double(c.disambig.western_similarity) + "\n";
  out += "jaccard = " + format_double(c.disambig.jaccard_threshold) + "\n";
  out += "coauthor-weight = " + format_double(c.disambig.coauthor_weight) + "\n";
  out += "max-cluster = " + std::to_string(c.disambig.max_cluster) + "\n";
  out += "min-papers = " + std::to_string(c.disambig.min_papers) + "\n";
  if (!c.disambig.diminutives_path.empty())
    out += "diminutives = " + c.disambig.diminutives_path + "\n";
  if (!c.disambig.pinyin_path.empty())
    out += "pinyin-lexicon = " + c.disambig.pinyin_path + "\n";
  out += "\n[metrics]\n";
  out += "robust-trials = " + std::to_string(c.metrics.robust_trials) + "\n";
  out += "robust-fraction = " + format_double(c.metrics.robust_fraction) + "\n";
  out += "sample-threshold = " + std::to_string(c.metrics.sample_threshold) + "\n";
  out += "\n[analysis]\n";
  out += "cutoff = " + format_double(c.analysis.cutoff) + "\n";
  out += "alpha = " + format_double(c.analysis.alpha) + "\n";
  out += "bootstrap = " + std::to_string(c.analysis.bootstrap_iterations) + "\n";
  out += "cutoffs = " + join_reals(c.analysis.sensitivity_cutoffs) + "\n";
  return out;
}

void save(const std::string& path, const PipelineConfig& c) {
  write_text_file(path, serialize(c));
}

disambig::DisambigOptions PipelineConfig::disambig_options() const {
  auto opts = disambig;
  opts.threads = threads;
  return opts;
}

metrics::MetricsOptions PipelineConfig::metrics_options() const {
  auto opts = metrics;
  opts.seed = derive_seed(seed, 1);
  opts.threads = threads;
  return opts;
}

report::AnalysisOptions PipelineConfig::analysis_options() const {
  auto opts = analysis;
  opts.seed = derive_seed(seed, 2);
  return opts;
}

void PipelineConfig::validate() const {
  if (metadata_path.empty()) throw ValidationError("config: input.metadata is required");
  if (topics_path.empty()) throw ValidationError("config: input.topics is required");
  if (out_dir.empty()) throw ValidationError("config: output.dir is required");
  if (from_date && to_date && *to_date < *from_date)
    throw ValidationError("config: input.from is after input.to");
  if (threads < 0) throw ValidationError("config: run.threads must be >= 0");
  disambig.validate();
  metrics.validate();
  analysis.validate();
}

}  // namespace coanet::config
