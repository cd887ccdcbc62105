#ifndef RCHECK_RCHECK_H
#define RCHECK_RCHECK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define RC_API __attribute__((visibility("default")))
#else
#define RC_API
#endif

/* Status codes double as CLI exit codes. */
typedef enum rc_status {
  RC_OK = 0,
  RC_VERIFY_FAILED = 1,
  RC_USAGE = 2, /* bad argument, missing file or unparsable fixture */
  RC_BUDGET = 3,
  RC_INTERNAL = 4
} rc_status;

typedef enum rc_format { RC_FORMAT_TEXT = 0, RC_FORMAT_RECORD = 1 } rc_format;

typedef struct rc_report rc_report;
typedef struct rc_graph rc_graph;
typedef struct rc_catalog rc_catalog;

/* 0 means the default node budget. */
typedef uint64_t rc_budget;

RC_API const char* rc_version(void);
/* Message of the last failing call on this thread, "" if none. */
RC_API const char* rc_last_error(void);

/* Suites. On RC_OK, RC_VERIFY_FAILED and per-item budget stops (RC_BUDGET)
   *out receives a report the caller frees; on other codes *out is NULL. */
RC_API rc_status rc_verify_catalog(const char* const* paths, size_t n_paths,
                                   const char* orientations_path, rc_budget budget,
                                   rc_report** out);
/* names == NULL or n_names == 0 selects the default entry set. */
RC_API rc_status rc_verify_merges(const char* catalog_path, const char* const* names,
                                  size_t n_names, int forbidden_len, rc_budget budget,
                                  rc_report** out);
/* variant is "c5", "cc6", "dcc67", "cc7" or NULL for all four. */
RC_API rc_status rc_audit_discharging(const char* fixtures_dir, const char* variant,
                                      rc_report** out);
/* f_spec: "2", "2,3,2,..." or NULL/"" for a config block's list sizes. */
RC_API rc_status rc_find_at(const char* path, const char* name, const char* f_spec,
                            rc_report** out);

RC_API int rc_report_passed(const rc_report* r);
RC_API size_t rc_report_item_count(const rc_report* r);
/* Item fields: 0 suite, 1 item, 2 verdict, 3 value, 4 detail. NULL when out
   of range. Valid until the report is freed. */
RC_API const char* rc_report_field(const rc_report* r, size_t index, int field);
RC_API int rc_report_item_passed(const rc_report* r, size_t index);
/* Rendered report, owned by the report and valid until the next render or
   free. */
RC_API const char* rc_report_render(rc_report* r, rc_format format);
RC_API void rc_report_free(rc_report* r);

/* Graph or config block `name` of a fixture file. */
RC_API rc_status rc_graph_load(const char* path, const char* name, rc_graph** out);
RC_API int rc_graph_vertex_count(const rc_graph* g);
RC_API int rc_graph_edge_count(const rc_graph* g);
/* -1 for a bad vertex. */
RC_API int rc_graph_degree(const rc_graph* g, int v);
RC_API rc_status rc_graph_contains_chorded_cycle(const rc_graph* g, int len, int* out);
RC_API void rc_graph_free(rc_graph* g);

RC_API rc_status rc_catalog_load(const char* path, rc_catalog** out);
RC_API size_t rc_catalog_size(const rc_catalog* c);
RC_API const char* rc_catalog_name(const rc_catalog* c, size_t index);
RC_API rc_status rc_catalog_is_reducible(const rc_catalog* c, size_t index, rc_budget budget,
                                         int* out);
RC_API void rc_catalog_free(rc_catalog* c);

#ifdef __cplusplus
}
#endif

#endif
