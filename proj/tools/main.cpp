#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coanet/coanet.h"

namespace {

struct ConfigHandle {
  coanet_config* cfg = coanet_config_new();
  ~ConfigHandle() { coanet_config_free(cfg); }
  ConfigHandle() = default;
  ConfigHandle(const ConfigHandle&) = delete;
  ConfigHandle& operator=(const ConfigHandle&) = delete;
};

int fail(coanet_status status) {
  std::fprintf(stderr, "error: %s\n", coanet_last_error());
  return static_cast<int>(status);
}

// Applies only the options the user actually passed, so built-in defaults
// stay in one place.
int apply_option(coanet_config* cfg, const CLI::Option* opt, const char* section,
                 const char* key, const std::string& value) {
  if (!opt->count()) return 0;
  auto status = coanet_config_set(cfg, section, key, value.c_str());
  return status == COANET_OK ? 0 : fail(status);
}

void print_stage(const char* stage, int cached, double seconds, void*) {
  if (cached)
    std::printf("stage %-12s cached\n", stage);
  else
    std::printf("stage %-12s %.2fs\n", stage, seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"co-authorship network pipeline"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(coanet_version()));

  auto* ingest = app.add_subcommand("ingest", "parse metadata and topic assignments");
  std::string in_metadata, in_topics, in_from, in_to, in_out, in_report;
  ingest->add_option("--metadata", in_metadata, "paper metadata JSONL")->required();
  ingest->add_option("--topics", in_topics, "topic assignments CSV")->required();
  auto* opt_from = ingest->add_option("--from", in_from, "window start YYYY-MM-DD");
  auto* opt_to = ingest->add_option("--to", in_to, "window end YYYY-MM-DD");
  ingest->add_option("--out", in_out, "output records JSONL")->required();
  ingest->add_option("--report", in_report, "output parse report JSON");

  auto* disambig = app.add_subcommand("disambiguate", "resolve author name variants");
  std::string d_in, d_map, d_audit, d_summary;
  std::string d_sim, d_pinyin, d_western, d_jaccard, d_coauthor, d_max, d_min, d_threads;
  disambig->add_option("--in", d_in, "records JSONL")->required();
  disambig->add_option("--out-map", d_map, "output mapping CSV")->required();
  disambig->add_option("--audit", d_audit, "output audit JSONL");
  disambig->add_option("--summary", d_summary, "output summary JSON");
  auto* opt_sim = disambig->add_option("--sim", d_sim, "name similarity threshold");
  auto* opt_pinyin = disambig->add_option("--pinyin-sim", d_pinyin,
                                          "given-name threshold, romanized names");
  auto* opt_western = disambig->add_option("--western-sim", d_western,
                                           "given-name threshold, other names");
  auto* opt_jaccard = disambig->add_option("--jaccard", d_jaccard, "profile merge threshold");
  auto* opt_coauthor =
      disambig->add_option("--coauthor-weight", d_coauthor, "co-author overlap weight");
  auto* opt_max = disambig->add_option("--max-cluster", d_max, "component merge size cap");
  auto* opt_min = disambig->add_option("--min-papers", d_min, "papers needed for merging");
  auto* opt_dthreads = disambig->add_option("--threads", d_threads, "worker threads");

  auto* networks = app.add_subcommand("build-networks", "build per-topic networks");
  std::string n_records, n_map, n_dir;
  networks->add_option("--records", n_records, "records JSONL")->required();
  networks->add_option("--map", n_map, "author mapping CSV")->required();
  networks->add_option("--out-dir", n_dir, "output directory")->required();

  auto* metrics = app.add_subcommand("metrics", "compute structural metrics");
  std::string m_networks, m_out, m_seed, m_trials, m_threshold, m_threads;
  metrics->add_option("--networks", m_networks, "networks directory")->required();
  metrics->add_option("--out", m_out, "output metrics CSV")->required();
  auto* opt_mseed = metrics->add_option("--seed", m_seed, "random seed");
  auto* opt_trials = metrics->add_option("--robust-trials", m_trials, "random removal trials");
  auto* opt_threshold =
      metrics->add_option("--sample-threshold", m_threshold, "path sampling threshold");
  auto* opt_mthreads = metrics->add_option("--threads", m_threads, "worker threads");

  auto* analyze = app.add_subcommand("analyze", "popularity group and regression analysis");
  std::string a_metrics, a_out, a_text, a_cutoff, a_alpha, a_bootstrap, a_seed, a_cutoffs;
  analyze->add_option("--metrics", a_metrics, "metrics CSV")->required();
  analyze->add_option("--out", a_out, "output report JSON")->required();
  analyze->add_option("--text", a_text, "output report text");
  auto* opt_cutoff = analyze->add_option("--cutoff", a_cutoff, "popularity cutoff share");
  auto* opt_alpha = analyze->add_option("--alpha", a_alpha, "per-test significance level");
  auto* opt_bootstrap =
      analyze->add_option("--bootstrap", a_bootstrap, "bootstrap iterations");
  auto* opt_aseed = analyze->add_option("--seed", a_seed, "random seed");
  auto* opt_cutoffs =
      analyze->add_option("--cutoffs", a_cutoffs, "sensitivity cutoffs, comma separated");

  auto* run = app.add_subcommand("run", "run the full pipeline");
  std::string r_config, r_metadata, r_topics, r_out, r_seed, r_from, r_to, r_threads;
  bool r_force = false;
  auto* opt_rconfig = run->add_option("--config", r_config, "pipeline config file");
  auto* opt_rmeta = run->add_option("--metadata", r_metadata, "paper metadata JSONL");
  auto* opt_rtopics = run->add_option("--topics", r_topics, "topic assignments CSV");
  auto* opt_rout = run->add_option("--out", r_out, "output directory");
  auto* opt_rseed = run->add_option("--seed", r_seed, "random seed");
  auto* opt_rfrom = run->add_option("--from", r_from, "window start YYYY-MM-DD");
  auto* opt_rto = run->add_option("--to", r_to, "window end YYYY-MM-DD");
  auto* opt_rthreads = run->add_option("--threads", r_threads, "worker threads");
  run->add_flag("--force", r_force, "rerun every stage");

  auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
  std::string s_kind, s_out, s_seed = "0";
  int s_topics = 10, s_first = 1, s_identities = 1000, s_target = 0, s_pool = 0;
  synth->add_option("--kind", s_kind, "modular | core-periphery | mixed | names")
      ->required()
      ->check(CLI::IsMember({"modular", "core-periphery", "mixed", "names"}));
  synth->add_option("--out", s_out, "output directory")->required();
  synth->add_option("--topics", s_topics, "topics to generate");
  synth->add_option("--first-id", s_first, "first topic id");
  synth->add_option("--identities", s_identities, "author identities (names)");
  synth->add_option("--target-raws", s_target, "grow to this many raw names (names)");
  synth->add_option("--surname-pool", s_pool, "shared surname pool size (names)");
  synth->add_option("--seed", s_seed, "random seed");

  auto* report = app.add_subcommand("report", "render a report JSON as text");
  std::string p_in, p_out;
  report->add_option("--in", p_in, "report JSON")->required();
  report->add_option("--out", p_out, "output text file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ConfigHandle handle;
  coanet_status status = COANET_OK;

  if (app.got_subcommand(ingest)) {
    if (apply_option(handle.cfg, opt_from, "input", "from", in_from)) return 2;
    if (apply_option(handle.cfg, opt_to, "input", "to", in_to)) return 2;
    status = coanet_ingest(handle.cfg, in_metadata.c_str(), in_topics.c_str(),
                           in_out.c_str(), in_report.empty() ? nullptr : in_report.c_str());
    if (status != COANET_OK) return fail(status);
    std::printf("wrote %s\n", in_out.c_str());
  } else if (app.got_subcommand(disambig)) {
    if (apply_option(handle.cfg, opt_sim, "disambig", "similarity", d_sim)) return 2;
    if (apply_option(handle.cfg, opt_pinyin, "disambig", "pinyin-similarity", d_pinyin))
      return 2;
    if (apply_option(handle.cfg, opt_western, "disambig", "western-similarity", d_western))
      return 2;
    if (apply_option(handle.cfg, opt_jaccard, "disambig", "jaccard", d_jaccard)) return 2;
    if (apply_option(handle.cfg, opt_coauthor, "disambig", "coauthor-weight", d_coauthor))
      return 2;
    if (apply_option(handle.cfg, opt_max, "disambig", "max-cluster", d_max)) return 2;
    if (apply_option(handle.cfg, opt_min, "disambig", "min-papers", d_min)) return 2;
    if (apply_option(handle.cfg, opt_dthreads, "run", "threads", d_threads)) return 2;
    status = coanet_disambiguate(handle.cfg, d_in.c_str(), d_map.c_str(),
                                 d_audit.empty() ? nullptr : d_audit.c_str(),
                                 d_summary.empty() ? nullptr : d_summary.c_str());
    if (status != COANET_OK) return fail(status);
    std::printf("wrote %s\n", d_map.c_str());
  } else if (app.got_subcommand(networks)) {
    status = coanet_build_networks(handle.cfg, n_records.c_str(), n_map.c_str(),
                                   n_dir.c_str());
    if (status != COANET_OK) return fail(status);
    std::printf("wrote %s\n", n_dir.c_str());
  } else if (app.got_subcommand(metrics)) {
    if (apply_option(handle.cfg, opt_mseed, "run", "seed", m_seed)) return 2;
    if (apply_option(handle.cfg, opt_trials, "metrics", "robust-trials", m_trials)) return 2;
    if (apply_option(handle.cfg, opt_threshold, "metrics", "sample-threshold", m_threshold))
      return 2;
    if (apply_option(handle.cfg, opt_mthreads, "run", "threads", m_threads)) return 2;
    status = coanet_metrics(handle.cfg, m_networks.c_str(), m_out.c_str());
    if (status != COANET_OK) return fail(status);
    std::printf("wrote %s\n", m_out.c_str());
  } else if (app.got_subcommand(analyze)) {
    if (apply_option(handle.cfg, opt_cutoff, "analysis", "cutoff", a_cutoff)) return 2;
    if (apply_option(handle.cfg, opt_alpha, "analysis", "alpha", a_alpha)) return 2;
    if (apply_option(handle.cfg, opt_bootstrap, "analysis", "bootstrap", a_bootstrap))
      return 2;
    if (apply_option(handle.cfg, opt_aseed, "run", "seed", a_seed)) return 2;
    if (apply_option(handle.cfg, opt_cutoffs, "analysis", "cutoffs", a_cutoffs)) return 2;
    status = coanet_analyze(handle.cfg, a_metrics.c_str(), a_out.c_str(),
                            a_text.empty() ? nullptr : a_text.c_str());
    if (status != COANET_OK) return fail(status);
    std::printf("wrote %s\n", a_out.c_str());
  } else if (app.got_subcommand(run)) {
    if (opt_rconfig->count()) {
      status = coanet_config_load(handle.cfg, r_config.c_str());
      if (status != COANET_OK) return fail(status);
    }
    if (apply_option(handle.cfg, opt_rmeta, "input", "metadata", r_metadata)) return 2;
    if (apply_option(handle.cfg, opt_rtopics, "input", "topics", r_topics)) return 2;
    if (apply_option(handle.cfg, opt_rout, "output", "dir", r_out)) return 2;
    if (apply_option(handle.cfg, opt_rseed, "run", "seed", r_seed)) return 2;
    if (apply_option(handle.cfg, opt_rfrom, "input", "from", r_from)) return 2;
    if (apply_option(handle.cfg, opt_rto, "input", "to", r_to)) return 2;
    if (apply_option(handle.cfg, opt_rthreads, "run", "threads", r_threads)) return 2;
    status = coanet_run(handle.cfg, r_force ? 1 : 0, print_stage, nullptr);
    if (status != COANET_OK) return fail(status);
  } else if (app.got_subcommand(synth)) {
    unsigned long long seed = 0;
    try {
      seed = std::stoull(s_seed);
    } catch (const std::exception&) {
      std::fprintf(stderr, "error: invalid seed '%s'\n", s_seed.c_str());
      return 2;
    }
    if (s_kind == "modular")
      status = coanet_synth_modular(s_out.c_str(), s_topics, s_first, seed);
    else if (s_kind == "core-periphery")
      status = coanet_synth_core_periphery(s_out.c_str(), s_topics, s_first, seed);
    else if (s_kind == "mixed")
      status = coanet_synth_mixed(s_out.c_str(), s_topics, seed);
    else
      status = coanet_synth_names(s_out.c_str(), s_identities, s_target, s_pool, seed);
    if (status != COANET_OK) return fail(status);
    std::printf("wrote %s\n", s_out.c_str());
  } else if (app.got_subcommand(report)) {
    char* text = coanet_render_report(p_in.c_str());
    if (!text) return fail(COANET_ERR_DATA);
    if (p_out.empty()) {
      std::fputs(text, stdout);
    } else {
      std::FILE* f = std::fopen(p_out.c_str(), "wb");
      if (!f) {
        coanet_free(text);
        std::fprintf(stderr, "error: cannot write %s\n", p_out.c_str());
        return 3;
      }
      std::fputs(text, f);
      std::fclose(f);
      std::printf("wrote %s\n", p_out.c_str());
    }
    coanet_free(text);
  }
  return 0;
}
