/*
 * C interface to the crepant screening library.
 *
 * All geometry handles are opaque; every fallible call returns a crp_status
 * and reports details through an error string that the caller frees with
 * crp_string_free. Output documents are deterministic JSON, newline
 * terminated; integers that do not fit in 64 bits appear as decimal strings.
 */

#ifndef CREPANT_H
#define CREPANT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum crp_status {
  CRP_OK = 0,
  CRP_ERR_ARGUMENT = 1,  /* bad arguments / malformed geometry */
  CRP_ERR_PARSE = 2,     /* input document does not parse or violates schema */
  CRP_ERR_GEOMETRY = 3,  /* degenerate input, non-Gorenstein cone, ... */
  CRP_ERR_BUDGET = 4,    /* a point/search budget guard fired */
  CRP_ERR_INTERNAL = 5
} crp_status;

typedef struct crp_polytope crp_polytope;
typedef struct crp_cone crp_cone;
typedef struct crp_report crp_report;

const char* crp_version(void);

void crp_string_free(char* s);
void crp_polytope_free(crp_polytope* p);
void crp_cone_free(crp_cone* c);
void crp_report_free(crp_report* r);

/* Vertex/ray coordinates are row-major int64 arrays: count rows of dim
 * entries each. */
crp_status crp_polytope_new(int32_t dim, int32_t count, const int64_t* coords,
                            crp_polytope** out, char** errmsg);
crp_status crp_cone_new(int32_t dim, int32_t count, const int64_t* coords,
                        crp_cone** out, char** errmsg);

/* Parses an input document (JSON text). Exactly one of *poly_out / *cone_out
 * is set on success; *budget_out receives the document's options.budget or -1. */
crp_status crp_input_parse(const char* text, crp_polytope** poly_out,
                           crp_cone** cone_out, int64_t* budget_out,
                           char** errmsg);

/* Gorenstein slice of a cone; CRP_ERR_GEOMETRY when no certificate exists. */
crp_status crp_cone_support_polytope(const crp_cone* c, crp_polytope** out,
                                     char** errmsg);

/* One-call command runner mirroring the CLI subcommands: "screen", "points",
 * "volume", "bound", "fvector", "triangulate". Budgets < 0 fall back to the
 * document's options.budget, then to the library defaults (10^6 search nodes,
 * 10^7 box points). *budget_limited_out (optional) is set to 1 when the
 * produced document records a budget-capped outcome. */
crp_status crp_run(const char* command, const char* input_text,
                   int64_t search_budget, int64_t point_budget, int verbose,
                   int exhaustive, char** document_out, int* budget_limited_out,
                   char** errmsg);

/* Screening. */
crp_status crp_screen_polytope(const crp_polytope* p, int64_t search_budget,
                               int64_t point_budget, crp_report** out,
                               char** errmsg);
crp_status crp_screen_cone(const crp_cone* c, int64_t search_budget,
                           int64_t point_budget, crp_report** out, char** errmsg);

/* Report accessors. Strings returned by crp_report_verdict and
 * crp_report_search_status are static; do not free them. */
crp_status crp_report_document(const crp_report* r, int verbose, char** json_out,
                               char** errmsg);
const char* crp_report_verdict(const crp_report* r);
const char* crp_report_search_status(const crp_report* r); /* NULL if no search */

/* Numeric evidence; CRP_ERR_ARGUMENT when the field is absent or does not fit
 * in int64. bound_holds: 1/0, -1 when absent. */
crp_status crp_report_volume(const crp_report* r, int64_t* out);
crp_status crp_report_bound_rhs(const crp_report* r, int64_t* out);
crp_status crp_report_points(const crp_report* r, int64_t* total_out,
                             int64_t* boundary_out);
int crp_report_bound_holds(const crp_report* r);

/* Stage queries on a polytope; each returns the same JSON document as the
 * matching CLI subcommand. */
crp_status crp_polytope_points_json(const crp_polytope* p, int64_t point_budget,
                                    char** json_out, char** errmsg);
crp_status crp_polytope_volume_json(const crp_polytope* p, char** json_out,
                                    char** errmsg);
crp_status crp_polytope_bound_json(const crp_polytope* p, int64_t point_budget,
                                   char** json_out, char** errmsg);
crp_status crp_polytope_fvector_json(const crp_polytope* p, int64_t point_budget,
                                     char** json_out, char** errmsg);
crp_status crp_polytope_triangulate_json(const crp_polytope* p, int exhaustive,
                                         int64_t search_budget,
                                         int64_t point_budget, char** json_out,
                                         char** errmsg);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CREPANT_H */
