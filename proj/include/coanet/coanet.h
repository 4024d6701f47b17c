#ifndef COANET_H
#define COANET_H

/* C interface to the co-authorship network pipeline. All functions return
 * a coanet_status; on failure coanet_last_error() describes the problem
 * for the calling thread. Paths are UTF-8. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define COANET_API __declspec(dllexport)
#else
#define COANET_API __attribute__((visibility("default")))
#endif

typedef enum coanet_status {
  COANET_OK = 0,
  COANET_ERR_VALIDATION = 2, /* arguments or configuration out of range */
  COANET_ERR_DATA = 3,       /* unreadable or inconsistent input data */
  COANET_ERR_INTERNAL = 4
} coanet_status;

COANET_API const char* coanet_version(void);

/* Message from the most recent failing call on this thread. */
COANET_API const char* coanet_last_error(void);

/* Frees strings returned by this library. */
COANET_API void coanet_free(void* p);

/* Pipeline configuration: sectioned key-value settings, the same keys the
 * config file format uses. */
typedef struct coanet_config coanet_config;

COANET_API coanet_config* coanet_config_new(void);
COANET_API void coanet_config_free(coanet_config* cfg);
COANET_API coanet_status coanet_config_set(coanet_config* cfg, const char* section,
                                           const char* key, const char* value);
COANET_API coanet_status coanet_config_load(coanet_config* cfg, const char* path);
COANET_API coanet_status coanet_config_save(const coanet_config* cfg, const char* path);

/* Stage entry points. Explicit paths override any paths in cfg; cfg
 * supplies stage options and may be NULL for defaults. */

/* metadata JSONL + assignments CSV -> records JSONL + ingest report JSON.
 * out_report_path may be NULL. */
COANET_API coanet_status coanet_ingest(const coanet_config* cfg, const char* metadata_path,
                                       const char* topics_path, const char* out_records_path,
                                       const char* out_report_path);

/* records JSONL -> mapping CSV; audit JSONL and summary JSON are optional. */
COANET_API coanet_status coanet_disambiguate(const coanet_config* cfg,
                                             const char* records_path,
                                             const char* out_mapping_path,
                                             const char* out_audit_path,
                                             const char* out_summary_path);

/* records JSONL + mapping CSV -> per-topic network CSVs under out_dir. */
COANET_API coanet_status coanet_build_networks(const coanet_config* cfg,
                                               const char* records_path,
                                               const char* mapping_path, const char* out_dir);

/* networks dir -> structural metrics CSV, one row per topic. */
COANET_API coanet_status coanet_metrics(const coanet_config* cfg, const char* networks_dir,
                                        const char* out_csv_path);

/* metrics CSV -> analysis report JSON; the text rendering is optional. */
COANET_API coanet_status coanet_analyze(const coanet_config* cfg, const char* metrics_csv_path,
                                        const char* out_json_path, const char* out_text_path);

/* Re-renders a report JSON as text. Returns a malloc'd string to free with
 * coanet_free, or NULL on failure. */
COANET_API char* coanet_render_report(const char* report_json_path);

/* Full pipeline under the configured output directory, resuming unchanged
 * stages from the manifest unless force is nonzero. on_stage, when given,
 * is called per stage with cached=1 when the stage was skipped. */
typedef void (*coanet_stage_fn)(const char* stage, int cached, double seconds, void* user);
COANET_API coanet_status coanet_run(const coanet_config* cfg, int force,
                                    coanet_stage_fn on_stage, void* user);

/* Synthetic corpora (metadata.jsonl, assignments.csv, ground_truth.json). */
COANET_API coanet_status coanet_synth_modular(const char* out_dir, int topics,
                                              int first_topic_id, unsigned long long seed);
COANET_API coanet_status coanet_synth_core_periphery(const char* out_dir, int topics,
                                                     int first_topic_id,
                                                     unsigned long long seed);
/* Half planted-modular, half core-periphery topics with ids 1..2*topics_each. */
COANET_API coanet_status coanet_synth_mixed(const char* out_dir, int topics_each,
                                            unsigned long long seed);
/* Identity corpus with gold_map.csv, true_pairs.csv and trap_pairs.csv.
 * target_raws > 0 grows the corpus to that many raw names; surname_pool > 0
 * draws surnames from a shared Zipf pool instead of unique ones. */
COANET_API coanet_status coanet_synth_names(const char* out_dir, int identities,
                                            int target_raws, int surname_pool,
                                            unsigned long long seed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COANET_H */
