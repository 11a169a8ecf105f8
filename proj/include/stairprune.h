/* stairprune: exact pruning and distance computations for staircase
 * upset-decomposable persistence modules.
 *
 * All functions return a status code from the sp_status list; on error a
 * human-readable message is available from sp_last_error() (thread-local).
 * Modules are opaque handles; JSON documents, rationals and distances cross
 * the boundary as strings. Strings returned through out-parameters are owned
 * by the caller and must be released with sp_string_free().
 *
 * Rational syntax: "n" or "n/d" with d nonzero, e.g. "3", "-7/2". Distances
 * print as a canonical rational, "inf", or a bracket approximation.
 */
#ifndef STAIRPRUNE_H
#define STAIRPRUNE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sp_module sp_module;

typedef enum sp_status {
  SP_OK = 0,
  SP_ERROR_PARSE = 2,      /* malformed rational or module document */
  SP_ERROR_VALIDATION = 3, /* dimension mismatch, bad argument, cap exceeded */
  SP_ERROR_INTERNAL = 5
} sp_status;

const char* sp_version(void);

/* empty string if no error has occurred on this thread yet */
const char* sp_last_error(void);

void sp_string_free(char* s);
void sp_module_free(sp_module* m);

/* ---- module lifecycle ---- */

int sp_module_parse_json(const char* json_text, sp_module** out);
int sp_module_to_json(const sp_module* m, char** out);

int sp_module_dim(const sp_module* m, int* out);
int sp_module_supdim(const sp_module* m, int* out);

/* deterministic generator; see the CLI `gen` command for the same knobs */
int sp_module_generate(uint64_t seed, int r, int dim, int gens_per_summand, int coord_bound,
                       sp_module** out);

int sp_module_shift(const sp_module* m, const char* eps, sp_module** out);
int sp_module_iso(const sp_module* a, const sp_module* b, int* isomorphic);

/* ---- pruning and graphs ---- */

int sp_prune(const sp_module* m, const char* alpha, sp_module** out);
int sp_graph_dot(const sp_module* m, const char* alpha, char** out);
int sp_plot_svg(const sp_module* m, char** out); /* dimension 2 only */

/* ---- distances; results are formatted strings ---- */

/* bisection to within tol (a positive rational); exact=1 snaps the bracket to
 * a verified candidate value when possible */
int sp_distance_pruning(const sp_module* a, const sp_module* b, const char* tol, int exact,
                        char** out);
int sp_distance_bottleneck(const sp_module* a, const sp_module* b, char** out);
/* field is "f2" or "f3"; max_r caps the exhaustive search */
int sp_distance_interleaving(const sp_module* a, const sp_module* b, const char* field, int max_r,
                             char** out);

/* ---- built-in verification ---- */

/* report: one "ok <name>" or "FAIL <name>" line per check */
int sp_verify(char** report, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* STAIRPRUNE_H */
