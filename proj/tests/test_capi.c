/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "hlmenger/hlmenger.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static void graphs(void) {
  const uint32_t c4[] = {0, 1, 1, 2, 2, 3, 3, 0};
  hlm_graph* g = NULL;
  EXPECT(hlm_graph_create(4, c4, 4, &g) == HLM_OK);
  EXPECT(hlm_graph_vertex_count(g) == 4);
  EXPECT(hlm_graph_edge_count(g) == 4);

  size_t value = 0;
  EXPECT(hlm_graph_edge_disjoint_paths(g, 0, 2, &value) == HLM_OK && value == 2);
  EXPECT(hlm_graph_edge_connectivity(g, &value) == HLM_OK && value == 2);
  EXPECT(hlm_graph_vertex_connectivity(g, &value) == HLM_OK && value == 2);
  EXPECT(hlm_graph_degree(g, 3, &value) == HLM_OK && value == 2);
  EXPECT(hlm_graph_degree(g, 9, &value) == HLM_ERR_VERTEX_OUT_OF_RANGE);
  EXPECT(strlen(hlm_last_error()) > 0);
  EXPECT(hlm_graph_edge_disjoint_paths(g, 1, 1, &value) == HLM_ERR_INVALID_ARGUMENT);

  char* text = NULL;
  EXPECT(hlm_graph_to_edgelist(g, &text) == HLM_OK);
  EXPECT(text && strncmp(text, "p 4 4\ne 0 1\n", 12) == 0);
  hlm_graph* again = NULL;
  EXPECT(hlm_graph_parse(text, &again) == HLM_OK);
  EXPECT(hlm_graph_edge_count(again) == 4);
  hlm_string_free(text);
  hlm_graph_free(again);
  hlm_graph_free(g);

  const uint32_t dup[] = {0, 1, 1, 0};
  EXPECT(hlm_graph_create(2, dup, 2, &g) == HLM_ERR_DUPLICATE_EDGE);
  const uint32_t loop[] = {1, 1};
  EXPECT(hlm_graph_create(2, loop, 1, &g) == HLM_ERR_SELF_LOOP);
  EXPECT(hlm_graph_parse("p 2 1\ne 0\n", &g) == HLM_ERR_PARSE);
  EXPECT(hlm_graph_create(2, dup, 1, NULL) == HLM_ERR_INVALID_ARGUMENT);
}

static void networks(void) {
  hlm_network* h = NULL;
  EXPECT(hlm_network_generate("crossed", 4, 0, &h) == HLM_OK);
  EXPECT(hlm_network_dimension(h) == 4);
  EXPECT(hlm_network_generate("torus", 4, 0, &h) == HLM_ERR_INVALID_ARGUMENT);

  hlm_line_graph* lg = NULL;
  EXPECT(hlm_line_graph_from_network(h, &lg) == HLM_OK);
  size_t count = 0;
  EXPECT(hlm_line_graph_f_vertex_count(lg, &count) == HLM_OK && count == 8);
  hlm_graph* lgg = NULL;
  EXPECT(hlm_line_graph_graph(lg, &lgg) == HLM_OK);
  EXPECT(hlm_graph_vertex_count(lgg) == 32);
  int holds = 0;
  EXPECT(hlm_graph_is_smec(lgg, &holds) == HLM_OK && holds == 1);
  char* prov = NULL;
  EXPECT(hlm_line_graph_provenance_json(lg, &prov) == HLM_OK);
  EXPECT(prov && strstr(prov, "\"f_vertices\"") != NULL);
  hlm_string_free(prov);

  char* construction = NULL;
  EXPECT(hlm_network_construction_json(h, &construction) == HLM_OK);
  EXPECT(construction && strstr(construction, "\"bijection\"") != NULL);
  hlm_string_free(construction);

  hlm_graph* base = NULL;
  hlm_network* back = NULL;
  EXPECT(hlm_network_graph(h, &base) == HLM_OK);
  EXPECT(hlm_network_from_graph(base, &back) == HLM_OK);
  EXPECT(hlm_network_dimension(back) == 4);

  hlm_graph_free(base);
  hlm_network_free(back);
  hlm_graph_free(lgg);
  hlm_line_graph_free(lg);
  hlm_network_free(h);
}

static void bcdc(void) {
  hlm_graph* a = NULL;
  hlm_line_graph* b = NULL;
  EXPECT(hlm_bcdc_create(3, &a, &b) == HLM_OK);
  EXPECT(hlm_graph_vertex_count(a) == 20);
  hlm_graph* bg = NULL;
  EXPECT(hlm_line_graph_graph(b, &bg) == HLM_OK);
  EXPECT(hlm_graph_vertex_count(bg) == 12);
  hlm_graph_free(bg);
  hlm_graph_free(a);
  hlm_line_graph_free(b);
  EXPECT(hlm_bcdc_create(1, &a, &b) == HLM_ERR_INVALID_ARGUMENT);
}

static void verify(void) {
  hlm_network* h = NULL;
  EXPECT(hlm_network_generate("ltq", 4, 0, &h) == HLM_OK);
  hlm_verify_options o;
  hlm_verify_options_init(&o);

  char* report = NULL;
  int outcome = -1;
  o.check = "tight-uncond";
  EXPECT(hlm_verify_network(h, &o, "{\"family\":\"ltq\",\"n\":4}", &report, &outcome) == HLM_OK);
  EXPECT(outcome == 1);
  EXPECT(report && strstr(report, "\"family\": \"ltq\"") != NULL);
  hlm_string_free(report);

  o.check = "lemma41";
  o.sampled = 1;
  o.samples = 200;
  o.seed = 9;
  EXPECT(hlm_verify_network(h, &o, NULL, &report, &outcome) == HLM_OK);
  EXPECT(outcome == 0);
  hlm_string_free(report);

  o.check = "appendixA";
  o.floor = 33;
  EXPECT(hlm_verify_network(h, &o, NULL, &report, &outcome) == HLM_OK);
  EXPECT(outcome == 2);
  EXPECT(report && strstr(report, "\"error\"") != NULL);
  hlm_string_free(report);

  o.check = "bogus";
  EXPECT(hlm_verify_network(h, &o, NULL, &report, &outcome) == HLM_ERR_INVALID_ARGUMENT);
  EXPECT(hlm_error_report("bogus", "unknown check", &report) == HLM_OK);
  EXPECT(report && strstr(report, "unknown check") != NULL);
  hlm_string_free(report);
  hlm_network_free(h);
}

int main(void) {
  graphs();
  networks();
  bcdc();
  verify();
  EXPECT(strcmp(hlm_status_string(HLM_OK), "ok") == 0);
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("c api: all checks passed\n");
  return 0;
}
