#ifndef CTCODES_CTCODES_H
#define CTCODES_CTCODES_H

/* C interface to the completely transitive code toolkit.
 *
 * Every function returns a ct_status. On failure a message describing the
 * error is available from ct_last_error_message() on the same thread.
 * Strings handed out through char** parameters are owned by the caller and
 * must be released with ct_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#define CT_API __declspec(dllexport)
#else
#define CT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ct_status {
  CT_OK = 0,
  CT_INVALID_ARGUMENT = 1,
  CT_OUT_OF_RANGE = 2,
  CT_CAPACITY = 3,
  CT_IO = 4,
  CT_INTERNAL = 5
} ct_status;

typedef struct ct_code ct_code_t;
typedef struct ct_graph ct_graph_t;

typedef struct ct_code_params {
  size_t length;
  size_t dimension;
  int min_distance;
  int min_distance_is_bound;
  size_t redundancy;
} ct_code_params;

typedef struct ct_verify_options {
  int m;
  int heavy;
  int skip_group;
  int threads;
} ct_verify_options;

CT_API const char* ct_last_error_message(void);
CT_API const char* ct_status_name(ct_status status);
CT_API void ct_string_free(char* s);

/* Codes. A pair is given by its two residues mod 4. */
CT_API ct_status ct_code_create_hamming(int m, ct_code_t** out);
CT_API ct_status ct_code_create_augmented(int m, int i1, int i2, ct_code_t** out);
CT_API ct_status ct_code_create_extended_hamming(int m, ct_code_t** out);
CT_API ct_status ct_code_create_star(int m, int j1, int j2, ct_code_t** out);
/* Parity matrix in the "rows cols" header plus 0/1 rows text format. */
CT_API ct_status ct_code_create_from_text(const char* text, ct_code_t** out);
CT_API ct_status ct_code_extend(const ct_code_t* code, ct_code_t** out);
CT_API void ct_code_destroy(ct_code_t* code);

CT_API ct_status ct_code_get_params(const ct_code_t* code, ct_code_params* out);
/* "[n,k,d]" */
CT_API ct_status ct_code_summary(const ct_code_t* code, char** out);
CT_API ct_status ct_code_equal(const ct_code_t* a, const ct_code_t* b, int* out);
CT_API ct_status ct_code_parity_text(const ct_code_t* code, char** out);
CT_API ct_status ct_code_profile_json(const ct_code_t* code, int threads, char** out);

/* Coset graphs. */
CT_API ct_status ct_graph_create(const ct_code_t* code, ct_graph_t** out);
CT_API void ct_graph_destroy(ct_graph_t* graph);
/* format: "dot", "adjacency-list" (or "text"), "json". */
CT_API ct_status ct_graph_export(const ct_graph_t* graph, const char* format, char** out);
CT_API ct_status ct_graph_classification_json(const ct_graph_t* graph, int threads, char** out);

/* Groups. pair_i1 < 0 selects every odd-difference pair. */
CT_API ct_status ct_group_report_json(int m, int pair_i1, int pair_i2, int heavy, char** out);
CT_API ct_status ct_group_dump_hex(int m, int heavy, char** out);

/* Full verification report. *all_passed is set to 1 when no claim failed. */
CT_API ct_status ct_verify_all_json(const ct_verify_options* options, char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
