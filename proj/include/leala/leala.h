/* C interface to the graded-algebra toolkit. All functions return a
 * status code; every out-parameter is written only on LEALA_OK. Strings
 * handed out by the library are heap-allocated and must be released with
 * leala_string_free. Handles are opaque and freed with leala_algebra_free.
 */
#ifndef LEALA_H
#define LEALA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct leala_algebra leala_algebra;

typedef enum {
  LEALA_OK = 0,
  LEALA_ERR_PARSE = 1,    /* malformed JSON or scalar text */
  LEALA_ERR_INVALID = 2,  /* bad arguments or unknown schema */
  LEALA_ERR_REFUSED = 3,  /* a builder precondition rejected the request */
  LEALA_ERR_INTERNAL = 4  /* unexpected failure; see leala_last_error */
} leala_status;

/* Builds a factory algebra from a JSON spec:
 *   {"builder": "split", "type": "A2"}
 *   {"builder": "loop", "type": "A1", "phi": ["1"], "window": 3}
 *   {"builder": "heisenberg", "phi": ["1"], "window": 1,
 *    "S": [[0],[1],[-1]], "dims": [{"degree": [1], "dim": 2}]}
 *   {"builder": "witt", "n": 2, "window": 2, "cocycle": "trivial"}
 *   {"builder": "tower", "series": "A", "ranks": [2,3],
 *    "patterns": [{"head": [], "intercept": "0", "slope": "1"}],
 *    "z_dim": 0, "u": "1", "psi": [["0"]], "level": 0}
 *   {"builder": "glued", "loop_window": 2, "null_bound": 1}
 * Scalar-valued fields use the exact textual encoding.
 */
leala_status leala_build(const char* spec_json, leala_algebra** out);

/* leala-algebra v1 interchange. */
leala_status leala_load_json(const char* text, leala_algebra** out);
leala_status leala_save_json(const leala_algebra* a, char** out_text);

/* JSON summary: dimension, field, window, root counts. */
leala_status leala_summary(const leala_algebra* a, char** out_json);

/* Runs a check suite ("axioms", "lemmas", "kac", "structure" or "all")
 * in dependency order and renders one deterministic JSON report.
 * fail/inconclusive counts are also returned directly so callers can
 * set exit codes without parsing.
 */
leala_status leala_run_checks(const leala_algebra* a, const char* suite,
                              char** out_report_json, int* out_fail_count,
                              int* out_inconclusive_count);

/* Message for the most recent non-OK status on this thread. */
const char* leala_last_error(void);

void leala_string_free(char* s);
void leala_algebra_free(leala_algebra* a);

#ifdef __cplusplus
}
#endif

#endif /* LEALA_H */
