#include "coanet/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coanet/ingest.hpp"
#include "coanet/netbuild.hpp"
#include "coanet/util.hpp"

namespace coanet::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

const char* const kStageNames[5] = {"ingest", "disambiguate", "networks", "metrics",
                                    "analyze"};

namespace {

std::string digest_file(const std::string& path) { return hex64(fnv1a64_file(path)); }

std::map<std::string, std::string> digest_tree(const std::string& dir) {
  std::map<std::string, std::string> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::recursive_directory_iterator(dir))
    if (entry.is_regular_file()) out[entry.path().string()] = digest_file(entry.path().string());
  return out;
}

bool all_match(const std::map<std::string, std::string>& recorded) {
  for (const auto& [path, digest] : recorded) {
    if (!fs::is_regular_file(path)) return false;
    if (digest_file(path) != digest) return false;
  }
  return true;
}

struct Stage {
  std::string name;
  std::string params;
  std::map<std::string, std::string> inputs;                   // digested before run
  std::function<std::map<std::string, std::string>()> execute; // returns output digests
};

std::string params_digest(const std::string& text) { return hex64(fnv1a64_str(text)); }

json to_json(const StageRecord& rec) {
  json j;
  j["params"] = rec.params;
  j["inputs"] = rec.inputs;
  j["outputs"] = rec.outputs;
  j["seconds"] = rec.seconds;
  return j;
}

StageRecord record_from_json(const json& j) {
  StageRecord rec;
  rec.params = j.value("params", "");
  if (j.contains("inputs"))
    for (const auto& [k, v] : j.at("inputs").items()) rec.inputs[k] = v.get<std::string>();
  if (j.contains("outputs"))
    for (const auto& [k, v] : j.at("outputs").items()) rec.outputs[k] = v.get<std::string>();
  rec.seconds = j.value("seconds", 0.0);
  return rec;
}

}  // namespace

std::map<std::string, StageRecord> load_manifest(const std::string& path) {
  std::map<std::string, StageRecord> out;
  if (!fs::is_regular_file(path)) return out;
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::exception&) {
    return out;  // unreadable manifest just disables resume
  }
  if (!j.contains("stages") || !j.at("stages").is_object()) return out;
  for (const auto& [name, entry] : j.at("stages").items())
    out[name] = record_from_json(entry);
  return out;
}

void save_manifest(const std::string& path, const std::map<std::string, StageRecord>& stages) {
  json j;
  j["version"] = 1;
  j["stages"] = json::object();
  for (const auto& [name, rec] : stages) j["stages"][name] = to_json(rec);
  write_text_file(path, j.dump(2) + "\n");
}

RunResult run(const config::PipelineConfig& config, bool force) {
  config.validate();
  fs::create_directories(config.out_dir);
  const fs::path out_dir(config.out_dir);
  const std::string records_path = (out_dir / "records.jsonl").string();
  const std::string ingest_report_path = (out_dir / "ingest_report.json").string();
  const std::string mapping_path = (out_dir / "mapping.csv").string();
  const std::string audit_path = (out_dir / "audit.jsonl").string();
  const std::string disambig_summary_path = (out_dir / "disambig_summary.json").string();
  const std::string networks_dir = (out_dir / "networks").string();
  const std::string metrics_path = (out_dir / "metrics.csv").string();
  const std::string report_json_path = (out_dir / "report.json").string();
  const std::string report_text_path = (out_dir / "report.txt").string();
  const std::string manifest_path = (out_dir / "manifest.json").string();

  auto manifest = load_manifest(manifest_path);
  RunResult result;
  result.out_dir = config.out_dir;

  auto run_stage = [&](Stage stage) {
    auto it = manifest.find(stage.name);
    if (!force && it != manifest.end() && it->second.params == stage.params &&
        it->second.inputs == stage.inputs && all_match(it->second.outputs)) {
      result.stages.push_back({stage.name, true, it->second.seconds});
      return;
    }
    auto start = std::chrono::steady_clock::now();
    auto outputs = stage.execute();
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    manifest[stage.name] = {stage.params, stage.inputs, outputs, seconds};
    save_manifest(manifest_path, manifest);
    result.stages.push_back({stage.name, false, seconds});
  };

  {
    std::ostringstream params;
    params << "from=" << (config.from_date ? format_date(*config.from_date) : "")
           << ";to=" << (config.to_date ? format_date(*config.to_date) : "");
    Stage stage;
    stage.name = kStageNames[0];
    stage.params = params_digest(params.str());
    stage.inputs = {{config.metadata_path, digest_file(config.metadata_path)},
                    {config.topics_path, digest_file(config.topics_path)}};
    stage.execute = [&]() {
      auto corpus = ingest::parse_corpus_files(config.metadata_path, config.topics_path);
      auto records = ingest::filter_by_date(corpus.records, config.from_date, config.to_date);
      save_records(records_path, records);
      json rep;
      rep["metadata_lines"] = corpus.report.metadata_lines;
      rep["parsed"] = corpus.report.parsed;
      rep["assignments_applied"] = corpus.report.assignments_applied;
      rep["unassigned_papers"] = corpus.report.unassigned_papers;
      rep["records_in_window"] = records.size();
      rep["skipped"] = json::array();
      for (const auto& s : corpus.report.skipped)
        rep["skipped"].push_back({{"line", s.line}, {"reason", s.message}});
      rep["warnings"] = corpus.report.warnings;
      auto primary = ingest::primary_category(records);
      rep["primary_category"] = primary ? json(*primary) : json(nullptr);
      write_text_file(ingest_report_path, rep.dump(2) + "\n");
      return std::map<std::string, std::string>{
          {records_path, digest_file(records_path)},
          {ingest_report_path, digest_file(ingest_report_path)}};
    };
    run_stage(std::move(stage));
  }

  {
    auto opts = config.disambig_options();
    std::ostringstream params;
    params << "sim=" << format_double(opts.similarity_threshold)
           << ";pinyin=" << format_double(opts.pinyin_similarity)
           << ";western=" << format_double(opts.western_similarity)
           << ";jaccard=" << format_double(opts.jaccard_threshold)
           << ";coauthor=" << format_double(opts.coauthor_weight)
           << ";max-cluster=" << opts.max_cluster << ";min-papers=" << opts.min_papers
           << ";diminutives=" << opts.diminutives_path << ";pinyin-lexicon=" << opts.pinyin_path;
    Stage stage;
    stage.name = kStageNames[1];
    stage.params = params_digest(params.str());
    stage.inputs = {{records_path, digest_file(records_path)}};
    stage.execute = [&]() {
      auto records = load_records(records_path);
      auto result = disambig::disambiguate(records, opts);
      disambig::write_mapping_csv(mapping_path, result);
      disambig::write_audit_jsonl(audit_path, result.audit);
      json sum;
      sum["raw_names"] = result.summary.raw_names;
      sum["parsed_names"] = result.summary.parsed_names;
      sum["stage1_edges"] = result.summary.stage1_edges;
      sum["stage2_clusters"] = result.summary.stage2_clusters;
      sum["stage3_merges"] = result.summary.stage3_merges;
      sum["profiles"] = result.summary.profiles;
      write_text_file(disambig_summary_path, sum.dump(2) + "\n");
      return std::map<std::string, std::string>{
          {mapping_path, digest_file(mapping_path)},
          {audit_path, digest_file(audit_path)},
          {disambig_summary_path, digest_file(disambig_summary_path)}};
    };
    run_stage(std::move(stage));
  }

  {
    Stage stage;
    stage.name = kStageNames[2];
    stage.params = params_digest("clique-expansion");
    stage.inputs = {{records_path, digest_file(records_path)},
                    {mapping_path, digest_file(mapping_path)}};
    stage.execute = [&]() {
      auto records = load_records(records_path);
      netbuild::NameMapping mapping(disambig::load_mapping(mapping_path));
      auto nets = netbuild::build_all(records, mapping);
      fs::remove_all(networks_dir);
      fs::create_directories(networks_dir);
      for (const auto& net : nets) netbuild::write_network_csvs(networks_dir, net);
      netbuild::write_topics_index(networks_dir, nets);
      return digest_tree(networks_dir);
    };
    run_stage(std::move(stage));
  }

  {
    auto opts = config.metrics_options();
    std::ostringstream params;
    params << "seed=" << opts.seed << ";trials=" << opts.robust_trials
           << ";fraction=" << format_double(opts.robust_fraction)
           << ";sample-threshold=" << opts.sample_threshold
           << ";sample-sources=" << opts.sample_sources;
    Stage stage;
    stage.name = kStageNames[3];
    stage.params = params_digest(params.str());
    stage.inputs = digest_tree(networks_dir);
    stage.execute = [&]() {
      auto nets = netbuild::read_networks_dir(networks_dir);
      auto rows = metrics::compute_batch(nets, opts);
      metrics::write_metrics_csv(metrics_path, rows);
      return std::map<std::string, std::string>{{metrics_path, digest_file(metrics_path)}};
    };
    run_stage(std::move(stage));
  }

  {
    auto opts = config.analysis_options();
    std::ostringstream params;
    params << "cutoff=" << format_double(opts.cutoff) << ";alpha=" << format_double(opts.alpha)
           << ";bootstrap=" << opts.bootstrap_iterations << ";seed=" << opts.seed
           << ";cutoffs=";
    for (double c : opts.sensitivity_cutoffs) params << format_double(c) << ',';
    Stage stage;
    stage.name = kStageNames[4];
    stage.params = params_digest(params.str());
    stage.inputs = {{metrics_path, digest_file(metrics_path)}};
    stage.execute = [&]() {
      auto rows = metrics::read_metrics_csv(metrics_path);
      auto report = report::analyze(rows, opts);
      write_text_file(report_json_path, report::to_json(report));
      write_text_file(report_text_path, report::render_text(report));
      return std::map<std::string, std::string>{
          {report_json_path, digest_file(report_json_path)},
          {report_text_path, digest_file(report_text_path)}};
    };
    run_stage(std::move(stage));
  }

  return result;
}

}  // namespace coanet::pipeline
