/* C interface to the heptaknot library.
 *
 * All entry points return hk_status; results come back through out
 * parameters. Strings returned through char** are heap-allocated and
 * must be released with hk_string_free(). Point sets are opaque handles
 * released with hk_points_free(). On any failure, hk_error_message()
 * returns a thread-local human-readable detail string.
 */
#ifndef HEPTAKNOT_H
#define HEPTAKNOT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hk_status {
  HK_OK = 0,
  HK_ERR_ARGUMENT = 1,     /* bad call arguments (null pointers, ranges) */
  HK_ERR_PARSE = 2,        /* malformed input text */
  HK_ERR_VALIDATION = 3,   /* points fail the selected command's rules */
  HK_ERR_DEGENERATE = 4,   /* geometric degeneracy in the input */
  HK_ERR_DISAGREEMENT = 5, /* the two classifiers disagree (library bug) */
  HK_ERR_SAMPLING = 6,     /* sampling failed to reach general position */
  HK_ERR_INTERNAL = 7
} hk_status;

/* Opaque list of exact rational 3D points, used both as a polygonal
 * knot (in vertex-cycle order) and as a K_n embedding. */
typedef struct hk_points hk_points;

/* Parses {"points": [[x,y,z], ...]}; coordinates are integers, strings
 * ("123", "-4.5", "7/3"), or floats (converted exactly). */
hk_status hk_points_parse_json(const char* text, hk_points** out);

/* coords holds 3*count strings in x,y,z row order. */
hk_status hk_points_from_strings(const char* const* coords, size_t count,
                                 hk_points** out);

size_t hk_points_count(const hk_points* points);
hk_status hk_points_to_json(const hk_points* points, char** out_json);
void hk_points_free(hk_points* points);

typedef enum hk_classify_mode {
  HK_CLASSIFY_FULL = 0,   /* invariant oracle + sign tables; 6 or 7 points */
  HK_CLASSIFY_ORACLE = 1, /* invariant oracle only; 3..12 points */
  HK_CLASSIFY_RADON = 2   /* sign tables only; exactly 7 points */
} hk_classify_mode;

/* JSON result with knot_class, determinant, alexander, rs_match and
 * penetration_table (fields are null where the mode or size does not
 * produce them). In full mode the two classifiers cross-check each
 * other and a mismatch returns HK_ERR_DISAGREEMENT. */
hk_status hk_classify(const hk_points* points, hk_classify_mode mode,
                      uint64_t seed, char** out_json);

/* Rendered 7x3 penetration table (7 lines over {+,-,x}) for the given
 * labeling: base in 0..6, direction +1 or -1. */
hk_status hk_table_text(const hk_points* points, int base, int direction,
                        char** out_text);

/* Table plus match data as JSON. */
hk_status hk_table(const hk_points* points, int base, int direction,
                   char** out_json);

/* Full Hamiltonian-cycle census of a 6- or 7-point embedding. */
hk_status hk_census(const hk_points* points, int jobs, char** out_json);

/* Seeded general-position embedding on the integer lattice. n = 6 or 7. */
hk_status hk_sample(int n, uint64_t seed, hk_points** out);

/* Censuses `count` embeddings seeded seed, seed+1, ... and reports the
 * best stick-knot count, its embedding fingerprint, and the histogram. */
hk_status hk_max_search(int n, int count, uint64_t seed, int jobs,
                        char** out_json);

const char* hk_status_name(hk_status status);

/* Thread-local message describing the most recent failure. */
const char* hk_error_message(void);

void hk_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HEPTAKNOT_H */
