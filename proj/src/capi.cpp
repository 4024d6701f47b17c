#include "coanet/coanet.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "coanet/config.hpp"
#include "coanet/ingest.hpp"
#include "coanet/netbuild.hpp"
#include "coanet/pipeline.hpp"
#include "coanet/synthetic.hpp"
#include "coanet/util.hpp"

using namespace coanet;

struct coanet_config {
  config::PipelineConfig cfg;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename F>
coanet_status guarded(F&& f) {
  try {
    f();
    return COANET_OK;
  } catch (const ValidationError& e) {
    set_error(e.what());
    return COANET_ERR_VALIDATION;
  } catch (const DataError& e) {
    set_error(e.what());
    return COANET_ERR_DATA;
  } catch (const std::exception& e) {
    set_error(e.what());
    return COANET_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return COANET_ERR_INTERNAL;
  }
}

std::string require(const char* arg, const char* what) {
  if (!arg || !*arg) throw ValidationError(std::string(what) + " is required");
  return arg;
}

config::PipelineConfig effective(const coanet_config* cfg) {
  return cfg ? cfg->cfg : config::PipelineConfig{};
}

}  // namespace

extern "C" {

const char* coanet_version(void) { return "1.0.0"; }

const char* coanet_last_error(void) { return g_last_error.c_str(); }

void coanet_free(void* p) { std::free(p); }

coanet_config* coanet_config_new(void) { return new (std::nothrow) coanet_config{}; }

void coanet_config_free(coanet_config* cfg) { delete cfg; }

coanet_status coanet_config_set(coanet_config* cfg, const char* section, const char* key,
                                const char* value) {
  return guarded([&] {
    if (!cfg) throw ValidationError("config handle is null");
    config::apply(cfg->cfg, require(section, "section"), require(key, "key"),
                  value ? value : "");
  });
}

coanet_status coanet_config_load(coanet_config* cfg, const char* path) {
  return guarded([&] {
    if (!cfg) throw ValidationError("config handle is null");
    cfg->cfg = config::load(require(path, "path"));
  });
}

coanet_status coanet_config_save(const coanet_config* cfg, const char* path) {
  return guarded([&] {
    if (!cfg) throw ValidationError("config handle is null");
    config::save(require(path, "path"), cfg->cfg);
  });
}

coanet_status coanet_ingest(const coanet_config* cfg, const char* metadata_path,
                            const char* topics_path, const char* out_records_path,
                            const char* out_report_path) {
  return guarded([&] {
    auto c = effective(cfg);
    auto corpus = ingest::parse_corpus_files(require(metadata_path, "metadata path"),
                                             require(topics_path, "topics path"));
    auto records = ingest::filter_by_date(corpus.records, c.from_date, c.to_date);
    save_records(require(out_records_path, "output records path"), records);
    if (out_report_path && *out_report_path) {
      nlohmann::json rep;
      rep["metadata_lines"] = corpus.report.metadata_lines;
      rep["parsed"] = corpus.report.parsed;
      rep["assignments_applied"] = corpus.report.assignments_applied;
      rep["unassigned_papers"] = corpus.report.unassigned_papers;
      rep["records_in_window"] = records.size();
      rep["skipped"] = nlohmann::json::array();
      for (const auto& s : corpus.report.skipped)
        rep["skipped"].push_back({{"line", s.line}, {"reason", s.message}});
      rep["warnings"] = corpus.report.warnings;
      write_text_file(out_report_path, rep.dump(2) + "\n");
    }
  });
}

coanet_status coanet_disambiguate(const coanet_config* cfg, const char* records_path,
                                  const char* out_mapping_path, const char* out_audit_path,
                                  const char* out_summary_path) {
  return guarded([&] {
    auto c = effective(cfg);
    auto records = load_records(require(records_path, "records path"));
    auto result = disambig::disambiguate(records, c.disambig_options());
    disambig::write_mapping_csv(require(out_mapping_path, "output mapping path"), result);
    if (out_audit_path && *out_audit_path)
      disambig::write_audit_jsonl(out_audit_path, result.audit);
    if (out_summary_path && *out_summary_path) {
      nlohmann::json sum;
      sum["raw_names"] = result.summary.raw_names;
      sum["parsed_names"] = result.summary.parsed_names;
      sum["stage1_edges"] = result.summary.stage1_edges;
      sum["stage2_clusters"] = result.summary.stage2_clusters;
      sum["stage3_merges"] = result.summary.stage3_merges;
      sum["profiles"] = result.summary.profiles;
      write_text_file(out_summary_path, sum.dump(2) + "\n");
    }
  });
}

coanet_status coanet_build_networks(const coanet_config* cfg, const char* records_path,
                                    const char* mapping_path, const char* out_dir) {
  return guarded([&] {
    (void)cfg;
    auto records = load_records(require(records_path, "records path"));
    netbuild::NameMapping mapping(
        disambig::load_mapping(require(mapping_path, "mapping path")));
    auto nets = netbuild::build_all(records, mapping);
    std::string dir = require(out_dir, "output directory");
    for (const auto& net : nets) netbuild::write_network_csvs(dir, net);
    netbuild::write_topics_index(dir, nets);
  });
}

coanet_status coanet_metrics(const coanet_config* cfg, const char* networks_dir,
                             const char* out_csv_path) {
  return guarded([&] {
    auto c = effective(cfg);
    auto nets = netbuild::read_networks_dir(require(networks_dir, "networks directory"));
    auto rows = metrics::compute_batch(nets, c.metrics_options());
    metrics::write_metrics_csv(require(out_csv_path, "output csv path"), rows);
  });
}

coanet_status coanet_analyze(const coanet_config* cfg, const char* metrics_csv_path,
                             const char* out_json_path, const char* out_text_path) {
  return guarded([&] {
    auto c = effective(cfg);
    auto rows = metrics::read_metrics_csv(require(metrics_csv_path, "metrics csv path"));
    auto rep = report::analyze(rows, c.analysis_options());
    write_text_file(require(out_json_path, "output json path"), report::to_json(rep));
    if (out_text_path && *out_text_path)
      write_text_file(out_text_path, report::render_text(rep));
  });
}

char* coanet_render_report(const char* report_json_path) {
  char* out = nullptr;
  auto status = guarded([&] {
    auto rep = report::from_json(read_text_file(require(report_json_path, "report path")));
    std::string text = report::render_text(rep);
    out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
  });
  return status == COANET_OK ? out : nullptr;
}

coanet_status coanet_run(const coanet_config* cfg, int force, coanet_stage_fn on_stage,
                         void* user) {
  return guarded([&] {
    if (!cfg) throw ValidationError("config handle is null");
    auto result = pipeline::run(cfg->cfg, force != 0);
    if (on_stage)
      for (const auto& s : result.stages)
        on_stage(s.name.c_str(), s.cached ? 1 : 0, s.seconds, user);
  });
}

coanet_status coanet_synth_modular(const char* out_dir, int topics, int first_topic_id,
                                   unsigned long long seed) {
  return guarded([&] {
    synth::ModularSpec spec;
    spec.topics = topics;
    spec.first_topic_id = first_topic_id;
    spec.seed = seed;
    synth::write_corpus_files(require(out_dir, "output directory"),
                              synth::generate_modular(spec));
  });
}

coanet_status coanet_synth_core_periphery(const char* out_dir, int topics, int first_topic_id,
                                          unsigned long long seed) {
  return guarded([&] {
    synth::CorePeripherySpec spec;
    spec.topics = topics;
    spec.first_topic_id = first_topic_id;
    spec.seed = seed;
    synth::write_corpus_files(require(out_dir, "output directory"),
                              synth::generate_core_periphery(spec));
  });
}

coanet_status coanet_synth_mixed(const char* out_dir, int topics_each,
                                 unsigned long long seed) {
  return guarded([&] {
    if (topics_each < 1) throw ValidationError("topics per structure must be >= 1");
    synth::ModularSpec mod;
    mod.topics = topics_each;
    mod.first_topic_id = 1;
    mod.seed = seed;
    synth::CorePeripherySpec cp;
    cp.topics = topics_each;
    cp.first_topic_id = 1 + topics_each;
    cp.seed = seed;
    auto corpus = synth::generate_modular(mod);
    auto rest = synth::generate_core_periphery(cp);
    corpus.records.insert(corpus.records.end(), rest.records.begin(), rest.records.end());
    corpus.truth.insert(corpus.truth.end(), rest.truth.begin(), rest.truth.end());
    synth::write_corpus_files(require(out_dir, "output directory"), corpus);
  });
}

coanet_status coanet_synth_names(const char* out_dir, int identities, int target_raws,
                                 int surname_pool, unsigned long long seed) {
  return guarded([&] {
    synth::NameCorpusSpec spec;
    spec.identities = identities;
    spec.target_raws = target_raws;
    spec.surname_pool = surname_pool;
    spec.seed = seed;
    synth::write_name_corpus_files(require(out_dir, "output directory"),
                                   synth::generate_name_corpus(spec));
  });
}

}  // extern "C"
