// Copyright 2026 The gcmi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/*
 * gcmi: glass-ceiling mutual information for attributed networks.
 *
 * Every function returns a gcmi_status. On failure the calling thread's
 * gcmi_last_error() holds a human-readable message until its next call into
 * the library. Handles are opaque and owned by the caller; destroy functions
 * accept NULL. Output pointers are written only on success.
 */

#ifndef GCMI_GCMI_H_
#define GCMI_GCMI_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GCMI_BUILDING_LIBRARY)
#    define GCMI_API __declspec(dllexport)
#  else
#    define GCMI_API __declspec(dllimport)
#  endif
#else
#  define GCMI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcmi_status {
  GCMI_OK = 0,
  GCMI_INVALID_ARGUMENT = 1,
  GCMI_SELF_LOOP_REJECTED = 2,
  GCMI_UNKNOWN_NODE = 3,
  GCMI_PARSE_ERROR = 4,
  GCMI_MISSING_ATTRIBUTE = 5,
  GCMI_EMPTY_GRAPH = 6,
  GCMI_DEGENERATE_DISTRIBUTION = 7,
  GCMI_EMPTY_JDAM = 8,
  GCMI_NOT_NORMALIZED = 9,
  GCMI_SUM_RULE_VIOLATION = 10,
  GCMI_DEGENERATE_SERIES = 11,
  GCMI_CONNECTIVITY_RETRIES_EXHAUSTED = 12,
  GCMI_INVALID_CONFIG = 13,
  GCMI_NON_FINITE_THETA = 14,
  GCMI_EMPTY_GROUP = 15,
  GCMI_NEGATIVE_CELL = 16,
  GCMI_EXHAUSTED_CLASSES = 17,
  GCMI_TOO_FEW_VALID_REPLICATES = 18,
  GCMI_IO_ERROR = 19,
  GCMI_INTERNAL = 20
} gcmi_status;

GCMI_API const char* gcmi_status_name(gcmi_status status);
GCMI_API const char* gcmi_last_error(void);
GCMI_API const char* gcmi_version(void);

/* Nonzero when the status reflects degenerate input rather than misuse. */
GCMI_API int gcmi_status_is_degenerate(gcmi_status status);

/* ----- Graphs ------------------------------------------------------------ */

typedef struct gcmi_graph gcmi_graph;

GCMI_API gcmi_status gcmi_graph_create(gcmi_graph** out);
GCMI_API void gcmi_graph_destroy(gcmi_graph* g);

/* attribute is +1 or -1. */
GCMI_API gcmi_status gcmi_graph_add_node(gcmi_graph* g, int attribute,
                                         uint32_t* id_out);
GCMI_API gcmi_status gcmi_graph_add_edge(gcmi_graph* g, uint32_t u, uint32_t v,
                                         uint64_t count);
GCMI_API gcmi_status gcmi_graph_num_nodes(const gcmi_graph* g, uint64_t* out);
GCMI_API gcmi_status gcmi_graph_num_edges(const gcmi_graph* g, uint64_t* out);
GCMI_API gcmi_status gcmi_graph_degree(const gcmi_graph* g, uint32_t v,
                                       uint64_t* out);

GCMI_API gcmi_status gcmi_graph_load(const char* edge_path,
                                     const char* attribute_path,
                                     gcmi_graph** out);
GCMI_API gcmi_status gcmi_graph_save(const gcmi_graph* g, const char* edge_path,
                                     const char* attribute_path);

/* ----- Measures ---------------------------------------------------------- */

typedef struct gcmi_measure_report {
  double alpha;
  double shannon_h;   /* entropy of the remaining-degree distribution, bits */
  double degree_mi;
  double joint_mi;
  double delta_i;
  double gamma_deg;   /* valid when gamma_deg_defined */
  double gamma_att;   /* valid when gamma_att_defined */
  int gamma_deg_defined;
  int gamma_att_defined;
} gcmi_measure_report;

/* degree_cap = 0 disables the cap. */
GCMI_API gcmi_status gcmi_measure(const gcmi_graph* g, double alpha,
                                  uint64_t degree_cap,
                                  gcmi_measure_report* out);

/* Writes the JDAM as CSV with `k:c` row and column labels; counts, or
 * probabilities when `normalized` is nonzero. */
GCMI_API gcmi_status gcmi_jdam_export_csv(const gcmi_graph* g, int normalized,
                                          uint64_t degree_cap,
                                          const char* path);

/* ----- Generators -------------------------------------------------------- */

typedef struct gcmi_sbm_config {
  uint32_t n1;
  uint32_t n2;
  double p_in;
  double p_out;
  uint64_t seed;
  uint32_t max_retries;
} gcmi_sbm_config;

typedef struct gcmi_dmpa_config {
  double p_f;
  double rho_att;
  double p_event;
  double q_event;
  double delta;
  uint64_t target_edges;
  uint64_t seed;
  int swap_pa_degrees;
  /* Nonzero: a rejected newcomer proposal discards the whole step instead of
   * redrawing the existing partner. */
  int reject_whole_event;
} gcmi_dmpa_config;

GCMI_API void gcmi_sbm_config_default(gcmi_sbm_config* cfg);
GCMI_API void gcmi_dmpa_config_default(gcmi_dmpa_config* cfg);

GCMI_API gcmi_status gcmi_generate_sbm(const gcmi_sbm_config* cfg,
                                       gcmi_graph** out);
/* Undirected projection of the grown network. */
GCMI_API gcmi_status gcmi_generate_dmpa(const gcmi_dmpa_config* cfg,
                                        gcmi_graph** out);

/* ----- Edge-class distributions and SPSA --------------------------------- */

typedef enum gcmi_direction { GCMI_MINIMIZE = 0, GCMI_MAXIMIZE = 1 } gcmi_direction;
typedef enum gcmi_objective_mode {
  GCMI_GRAPH_EXACT = 0,
  GCMI_JDAM_MOVE = 1
} gcmi_objective_mode;
typedef enum gcmi_gain_schedule {
  GCMI_GAIN_CONSTANT = 0,
  GCMI_GAIN_DECAYING = 1
} gcmi_gain_schedule;

typedef struct gcmi_spsa_config {
  double delta;
  double epsilon;
  uint64_t iterations;
  gcmi_direction direction;
  uint64_t seed;
  uint32_t samples_per_eval;
  gcmi_objective_mode mode;
  gcmi_gain_schedule schedule;
} gcmi_spsa_config;

GCMI_API void gcmi_spsa_config_default(gcmi_spsa_config* cfg);

/* A probability mass function over ordered pairs of degree-attribute groups. */
typedef struct gcmi_logit gcmi_logit;

GCMI_API void gcmi_logit_destroy(gcmi_logit* p);
GCMI_API gcmi_status gcmi_optimize(const gcmi_graph* g, double alpha,
                                   const gcmi_spsa_config* cfg,
                                   gcmi_logit** out);
/* Uniform pmf over the group space of g. */
GCMI_API gcmi_status gcmi_logit_uniform(const gcmi_graph* g, gcmi_logit** out);
GCMI_API gcmi_status gcmi_logit_read_csv(const char* path, gcmi_logit** out);
/* Columns: class,k,c,k_prime,c_prime,theta,prob. */
GCMI_API gcmi_status gcmi_logit_write_csv(const gcmi_logit* p, const char* path);
GCMI_API gcmi_status gcmi_logit_num_classes(const gcmi_logit* p, uint64_t* out);

/* Adds `count` edges drawn from p. Writes the metric trace to trace_path
 * (edges_added,gamma_att,gamma_deg,delta_i) at 0 added edges, powers of ten,
 * and `count`. `out` may be NULL; otherwise it receives the grown graph. */
GCMI_API gcmi_status gcmi_add_edges(const gcmi_graph* g, const gcmi_logit* p,
                                    uint64_t count, uint64_t seed, double alpha,
                                    const char* trace_path, gcmi_graph** out);

/* ----- Experiments ------------------------------------------------------- */
/* Each experiment writes its CSV files into an existing directory. */

typedef struct gcmi_sweep_alpha_config {
  gcmi_sbm_config sbm; /* seed ignored */
  const double* alphas;
  size_t num_alphas;
  uint32_t replicates;
  uint64_t master_seed;
  int shuffle_attributes;
} gcmi_sweep_alpha_config;

typedef struct gcmi_sweep_alpha_summary {
  double argmax_alpha;
  double max_r;
  uint32_t n_skipped_degenerate;
} gcmi_sweep_alpha_summary;

GCMI_API gcmi_status gcmi_sweep_alpha(const gcmi_sweep_alpha_config* cfg,
                                      const char* out_dir,
                                      gcmi_sweep_alpha_summary* out);

typedef struct gcmi_sweep_dmpa_config {
  const double* p_f_values;
  size_t num_p_f;
  const double* rho_values;
  size_t num_rho;
  gcmi_dmpa_config base; /* p_f, rho_att and seed ignored */
  double alpha;
  uint64_t master_seed;
} gcmi_sweep_dmpa_config;

typedef struct gcmi_sweep_dmpa_summary {
  double pooled_r;
  uint64_t num_points;
} gcmi_sweep_dmpa_summary;

GCMI_API gcmi_status gcmi_sweep_dmpa(const gcmi_sweep_dmpa_config* cfg,
                                     const char* out_dir,
                                     gcmi_sweep_dmpa_summary* out);

typedef struct gcmi_intervention_config {
  double alpha;
  gcmi_spsa_config spsa; /* seed ignored */
  const uint64_t* edge_counts;
  size_t num_edge_counts;
  uint32_t trials;
  uint64_t master_seed;
  int uniform_both_arms;
} gcmi_intervention_config;

typedef struct gcmi_intervention_summary {
  /* Trial-mean increase from the base graph at the largest milestone. */
  double d_gamma_att_optimized;
  double d_gamma_att_uniform;
  double d_gamma_deg_optimized;
  double d_gamma_deg_uniform;
  /* Nonzero when some coefficient was undefined in some trial. */
  int any_undefined;
} gcmi_intervention_summary;

GCMI_API gcmi_status gcmi_intervention(const gcmi_graph* g,
                                       const gcmi_intervention_config* cfg,
                                       const char* out_dir,
                                       gcmi_intervention_summary* out);

typedef struct gcmi_temporal_summary {
  uint64_t num_snapshots;
  double kendall_tau;  /* valid when tau_defined */
  int tau_defined;
  int any_undefined;   /* some snapshot had an undefined coefficient */
} gcmi_temporal_summary;

GCMI_API gcmi_status gcmi_temporal(const char* snapshot_dir, double alpha,
                                   const char* out_dir,
                                   gcmi_temporal_summary* out);

#ifdef __cplusplus
}
#endif

#endif /* GCMI_GCMI_H_ */
