#ifndef CHARTAB_CHARTAB_H
#define CHARTAB_CHARTAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CHARTAB_API __declspec(dllexport)
#else
#define CHARTAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct chartab_group chartab_group;
typedef struct chartab_table chartab_table;

typedef enum chartab_status {
  CHARTAB_OK = 0,
  CHARTAB_E_PARSE = 1,    /* malformed fixture, literal, partition or JSON */
  CHARTAB_E_IO = 2,       /* file could not be read or written */
  CHARTAB_E_VERIFY = 3,   /* a mathematical check or a golden comparison failed */
  CHARTAB_E_CAPACITY = 4, /* group closure exceeded its element cap */
  CHARTAB_E_ARGUMENT = 5, /* null handle, unknown group or format, bad prime */
  CHARTAB_E_INTERNAL = 6
} chartab_status;

typedef enum chartab_format {
  CHARTAB_FORMAT_TEXT = 0,
  CHARTAB_FORMAT_JSON = 1,
  CHARTAB_FORMAT_CSV = 2
} chartab_format;

/* Message for the last non-OK status on the calling thread; never NULL. */
CHARTAB_API const char* chartab_last_error(void);
CHARTAB_API const char* chartab_status_name(chartab_status status);

/* Every char* handed out by this library is released with this. */
CHARTAB_API void chartab_string_free(char* s);

/* Groups. A fixture is a "degree: n" line followed by one permutation per
 * line in cycle notation. */
CHARTAB_API chartab_status chartab_group_load(const char* fixture_path, chartab_group** out);
CHARTAB_API chartab_status chartab_group_from_text(const char* fixture_text, chartab_group** out);
CHARTAB_API void chartab_group_free(chartab_group* g);
CHARTAB_API int chartab_group_degree(const chartab_group* g);
CHARTAB_API uint64_t chartab_group_order(const chartab_group* g);
CHARTAB_API size_t chartab_group_class_count(const chartab_group* g);

/* CHARTAB_E_VERIFY when the group is not sharply k-transitive with even
 * generators; *detail (may be NULL) receives the reason either way. */
CHARTAB_API chartab_status chartab_group_check_sharp(const chartab_group* g, int k, char** detail);

CHARTAB_API chartab_status chartab_group_render_classes(const chartab_group* g, const char* name,
                                                        chartab_format format, char** out);

/* Labels, sizes and realness against a golden JSON file. CHARTAB_E_VERIFY
 * on mismatch, with one line per difference in *diff. */
CHARTAB_API chartab_status chartab_group_compare_classes(const chartab_group* g, const char* golden_path,
                                                         char** diff);

/* Seeded Sylow p-subgroup probe. */
CHARTAB_API chartab_status chartab_group_sylow(const chartab_group* g, int p, uint64_t seed,
                                               chartab_format format, char** out);

/* Runs the derivation for "g9".."g12". references_path may be NULL; when
 * given, printed intermediate values are replayed against it. On
 * CHARTAB_E_VERIFY the partial log is stored in *failure_log if non-NULL. */
CHARTAB_API chartab_status chartab_derive(const chartab_group* g, const char* name, const char* references_path,
                                          chartab_table** out, char** failure_log);
CHARTAB_API void chartab_table_free(chartab_table* t);
CHARTAB_API size_t chartab_table_size(const chartab_table* t);

CHARTAB_API chartab_status chartab_table_render(const chartab_table* t, chartab_format format, char** out);
/* Text or JSON. */
CHARTAB_API chartab_status chartab_table_log(const chartab_table* t, chartab_format format, char** out);

/* Divergences between recomputed and printed values. kind is one of
 * "inner_product", "row", "decomposition", "equation", "value", "label" or
 * NULL for all; documented is 0, 1 or -1 for either. */
CHARTAB_API size_t chartab_table_divergences(const chartab_table* t, const char* kind, int documented);

/* Orthogonality on all pairs and the central-character check on the default
 * pair sample. CHARTAB_E_VERIFY on failure; *report is always filled. */
CHARTAB_API chartab_status chartab_table_check(const chartab_table* t, char** report);

CHARTAB_API chartab_status chartab_table_structure(const chartab_table* t, chartab_format format, char** out);

/* Entry-for-entry comparison with a golden JSON table. CHARTAB_E_VERIFY on
 * mismatch, with one line per differing entry in *diff. */
CHARTAB_API chartab_status chartab_table_compare_golden(const chartab_table* t, const char* golden_path,
                                                        char** diff);

/* Symmetric-group character value; partitions as comma-separated parts.
 * CHARTAB_E_ARGUMENT on a weight mismatch. */
CHARTAB_API chartab_status chartab_mn_value(const char* lambda, const char* mu, long* out);

#ifdef __cplusplus
}
#endif

#endif
