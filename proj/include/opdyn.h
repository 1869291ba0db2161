/* opdyn — core-periphery 2-Choices dynamics toolkit, C interface.
 *
 * All functions return OPDYN_OK (0) on success or a nonzero status; the
 * message for the most recent failure on the calling thread is available
 * via opdyn_last_error().  Objects are opaque handles released with their
 * matching _free function.  Strings returned through char** out-params are
 * owned by the caller and released with opdyn_string_free().
 */
#ifndef OPDYN_H
#define OPDYN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum opdyn_status {
  OPDYN_OK = 0,
  OPDYN_ERR_INVALID_ARGUMENT = 1, /* bad parameter or constraint violation */
  OPDYN_ERR_PARSE = 2,            /* malformed input text */
  OPDYN_ERR_IO = 3,               /* file could not be read or written */
  OPDYN_ERR_RUNTIME = 4,          /* operation failed (e.g. no extractable core) */
  OPDYN_ERR_NOMEM = 5
} opdyn_status;

typedef struct opdyn_graph opdyn_graph;
typedef struct opdyn_partition opdyn_partition;

const char* opdyn_version(void);

/* Message for the most recent error on this thread ("" if none). */
const char* opdyn_last_error(void);

void opdyn_string_free(char* s);

/* ---- graphs ------------------------------------------------------- */

/* Parse + normalize + keep the largest component. */
opdyn_status opdyn_graph_load(const char* path, opdyn_graph** out);
opdyn_status opdyn_graph_from_text(const char* text, opdyn_graph** out);
void opdyn_graph_free(opdyn_graph* g);

opdyn_status opdyn_graph_counts(const opdyn_graph* g, uint64_t* nodes,
                                uint64_t* edges);
/* Canonical serialization: "u v\n" per edge, u < v, sorted. */
opdyn_status opdyn_graph_write_canonical(const opdyn_graph* g,
                                         const char* path);

/* ---- partitions and metrics --------------------------------------- */

/* method: "densest" (iterated volume-capped peel) or "krich" (top-degree
 * agents at the volume symmetry point). */
opdyn_status opdyn_extract_core(const opdyn_graph* g, const char* method,
                                opdyn_partition** out);
/* One core agent label per line, labels as in the loaded file. */
opdyn_status opdyn_partition_from_core_file(const opdyn_graph* g,
                                            const char* path,
                                            opdyn_partition** out);
void opdyn_partition_free(opdyn_partition* p);

opdyn_status opdyn_partition_core_size(const opdyn_partition* p,
                                       uint64_t* out);
opdyn_status opdyn_partition_write_core(const opdyn_graph* g,
                                        const opdyn_partition* p,
                                        const char* path);
/* Flat JSON record: sizes, volumes, robustness, dominance, per-agent ratio
 * stats, densities.  Infinite ratios appear as the string "inf". */
opdyn_status opdyn_metrics_json(const opdyn_graph* g,
                                const opdyn_partition* p, char** out_json);

/* ---- synthetic generator ------------------------------------------ */

typedef struct opdyn_synth_spec {
  uint64_t n_periphery;
  double epsilon;      /* core size = round(n_periphery^epsilon) */
  uint32_t d_core_out; /* periphery neighbors per core agent */
  uint32_t d_peri_in;  /* periphery neighbors per periphery agent */
  int64_t cr_num, cr_den; /* target robustness, exact rational */
  int64_t cd_num, cd_den; /* target dominance, exact rational */
  uint64_t seed;
} opdyn_synth_spec;

/* Accepts "7/20", "0.35" or "2". */
opdyn_status opdyn_parse_rational(const char* text, int64_t* num,
                                  int64_t* den);

/* Builds the graph (agents 0..|C|-1 are the core) and its planted
 * partition.  warning_out (optional) receives a degree-scale warning or
 * NULL.  Deterministic in spec->seed. */
opdyn_status opdyn_synth_generate(const opdyn_synth_spec* spec,
                                  opdyn_graph** graph_out,
                                  opdyn_partition** partition_out,
                                  char** warning_out);

/* ---- experiments --------------------------------------------------- */

typedef struct opdyn_experiment_config {
  const char* dataset;     /* name for the report; NULL = "dataset" */
  const char* core_method; /* "densest" or "krich"; NULL = "densest" */
  /* Optional planted partition; overrides extraction for the dynamics and
   * the primary metrics. */
  const opdyn_partition* core_override;
  const char* mode; /* "plain" or "stubborn-core"; NULL = "plain" */
  uint32_t trials;  /* 0 = 50 */
  uint64_t max_rounds; /* 0 = agent count */
  double consensus_fraction; /* 0 = 0.95 */
  uint64_t base_seed;
  uint64_t stats_every; /* 0 = no rounds_<trial>.csv */
  const char* out_dir;  /* NULL = write no files */
  uint32_t threads;     /* 0 = hardware concurrency */
} opdyn_experiment_config;

/* Runs trials of the dynamics from the core-blue start and returns the
 * report JSON; writes report.json/trials.csv/core.txt (+ rounds CSVs) when
 * out_dir is set. */
opdyn_status opdyn_run_experiment(const opdyn_graph* g,
                                  const opdyn_experiment_config* cfg,
                                  char** report_json_out);

/* Scatter table over report.json files; returns CSV text. */
opdyn_status opdyn_scatter_csv(const char* const* report_paths, size_t count,
                               char** csv_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* OPDYN_H */
