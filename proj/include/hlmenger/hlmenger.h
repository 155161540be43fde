/*
 * C interface to the hlmenger library.
 *
 * Objects are opaque handles released with their matching *_free function.
 * Every fallible call returns an hlm_status; on failure hlm_last_error()
 * describes the problem (per thread, valid until the next call on that
 * thread). Strings handed out through char** parameters are owned by the
 * caller and released with hlm_string_free().
 */
#ifndef HLMENGER_H
#define HLMENGER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HLM_API __declspec(dllexport)
#else
#define HLM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hlm_status {
  HLM_OK = 0,
  HLM_ERR_INVALID_ARGUMENT = 1,
  HLM_ERR_VERTEX_OUT_OF_RANGE = 2,
  HLM_ERR_DUPLICATE_EDGE = 3,
  HLM_ERR_SELF_LOOP = 4,
  HLM_ERR_FOREIGN_EDGE = 5,
  HLM_ERR_DIMENSION_MISMATCH = 6,
  HLM_ERR_INVALID_BIJECTION = 7,
  HLM_ERR_PARSE = 8,
  HLM_ERR_BUDGET_EXCEEDED = 9,
  HLM_ERR_INTEGRITY = 10,
  HLM_ERR_INTERNAL = 11
} hlm_status;

typedef struct hlm_graph hlm_graph;
typedef struct hlm_network hlm_network;
typedef struct hlm_line_graph hlm_line_graph;

HLM_API const char* hlm_version(void);
HLM_API const char* hlm_status_string(hlm_status status);
HLM_API const char* hlm_last_error(void);
HLM_API void hlm_string_free(char* s);

/* Graphs. `pairs` holds edge_count (u, v) pairs back to back. */
HLM_API hlm_status hlm_graph_create(size_t n_vertices, const uint32_t* pairs, size_t edge_count, hlm_graph** out);
HLM_API hlm_status hlm_graph_parse(const char* edge_list, hlm_graph** out);
HLM_API void hlm_graph_free(hlm_graph* g);
HLM_API size_t hlm_graph_vertex_count(const hlm_graph* g);
HLM_API size_t hlm_graph_edge_count(const hlm_graph* g);
HLM_API hlm_status hlm_graph_degree(const hlm_graph* g, uint32_t v, size_t* out);
HLM_API hlm_status hlm_graph_min_degree(const hlm_graph* g, size_t* out);
HLM_API hlm_status hlm_graph_to_edgelist(const hlm_graph* g, char** out);
HLM_API hlm_status hlm_graph_edge_disjoint_paths(const hlm_graph* g, uint32_t u, uint32_t v, size_t* out);
HLM_API hlm_status hlm_graph_edge_connectivity(const hlm_graph* g, size_t* out);
HLM_API hlm_status hlm_graph_vertex_connectivity(const hlm_graph* g, size_t* out);
HLM_API hlm_status hlm_graph_largest_component(const hlm_graph* g, size_t* out);
HLM_API hlm_status hlm_graph_is_smec(const hlm_graph* g, int* holds);

/* Hypercube-like networks. family: hypercube, crossed, mobius0, mobius1,
 * ltq or random (seed only used by random). */
HLM_API hlm_status hlm_network_generate(const char* family, int n, uint64_t seed, hlm_network** out);
/* Recovers the construction record of a coded graph on 2^n vertices. */
HLM_API hlm_status hlm_network_from_graph(const hlm_graph* g, hlm_network** out);
HLM_API void hlm_network_free(hlm_network* h);
HLM_API int hlm_network_dimension(const hlm_network* h);
/* Copy of the underlying graph. */
HLM_API hlm_status hlm_network_graph(const hlm_network* h, hlm_graph** out);
HLM_API hlm_status hlm_network_construction_json(const hlm_network* h, char** out);

/* Line graphs. */
HLM_API hlm_status hlm_line_graph_create(const hlm_graph* base, hlm_line_graph** out);
HLM_API hlm_status hlm_line_graph_from_network(const hlm_network* h, hlm_line_graph** out);
HLM_API void hlm_line_graph_free(hlm_line_graph* lg);
HLM_API hlm_status hlm_line_graph_graph(const hlm_line_graph* lg, hlm_graph** out);
HLM_API hlm_status hlm_line_graph_f_vertex_count(const hlm_line_graph* lg, size_t* out);
/* {"vertices": [{"id", "edge": [a, b], "label"?, "f"?}], "f_vertices"?: [...]} */
HLM_API hlm_status hlm_line_graph_provenance_json(const hlm_line_graph* lg, char** out);

/* BCDC pair on the crossed cube CQ_n: A_n and B_n = L(CQ_n). */
HLM_API hlm_status hlm_bcdc_create(int n, hlm_graph** original, hlm_line_graph** logical);

/* Verification. Negative m/floor/budget mean "use the check's default". */
typedef struct hlm_verify_options {
  const char* check;
  int64_t m;
  int64_t floor;
  int64_t budget;
  int sampled;
  uint64_t samples;
  uint64_t seed;
  int adversarial;
  int all_witnesses;
  uint64_t enumeration_budget;
  unsigned jobs;
} hlm_verify_options;

HLM_API void hlm_verify_options_init(hlm_verify_options* options);

/* Runs the check on the line graph of `h` (or on `g` itself, smec checks
 * only). `target_json` is copied into the report's target field and may be
 * NULL. On HLM_OK, *report_json holds the JSON report and *outcome is 0
 * (pass), 1 (counterexample) or 2 (the check could not run; see the report's
 * error field). */
HLM_API hlm_status hlm_verify_network(const hlm_network* h, const hlm_verify_options* options,
                                      const char* target_json, char** report_json, int* outcome);
HLM_API hlm_status hlm_verify_graph(const hlm_graph* g, const hlm_verify_options* options,
                                    const char* target_json, char** report_json, int* outcome);

/* A report carrying only an error message, for failures before a check runs. */
HLM_API hlm_status hlm_error_report(const char* check, const char* message, char** report_json);

#ifdef __cplusplus
}
#endif

#endif
