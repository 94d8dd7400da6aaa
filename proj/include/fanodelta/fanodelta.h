#ifndef FANODELTA_H
#define FANODELTA_H

/* C interface to the fanodelta library.
 *
 * Rationals are passed as strings ("p/q", "p" or an exact decimal such as
 * "0.5"); delta knowledge is "ge1" or an exact fraction. Every entry point
 * stores a result handle in *out, also on failure, so the diagnostic can be
 * read with fd_result_error. Release handles with fd_result_free. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FD_API __declspec(dllexport)
#else
#define FD_API __attribute__((visibility("default")))
#endif

typedef struct fd_result fd_result;

typedef enum fd_status {
  FD_OK = 0,
  FD_ERR_INTERNAL = 1,
  FD_ERR_PARSE = 2,
  FD_ERR_DOMAIN = 3,
  FD_ERR_ORACLE = 4
} fd_status;

FD_API fd_status fd_bundle(int n, const char* r, const char* delta_v, const char* a, const char* b, fd_result** out);

FD_API fd_status fd_cone(int n, const char* r, const char* delta_v, const char* c, fd_result** out);

FD_API fd_status fd_cone_iterate(int n, int d, int i, const char* delta_v0, fd_result** out);

/* delta_pair may be NULL when n+1 <= d <= n+2. */
FD_API fd_status fd_branched_cone(int n, int k, int d, int l, const char* delta_pair, fd_result** out);

/* a may be NULL. The four flags are booleans (0 or 1). */
FD_API fd_status fd_angle(int n, const char* lambda, const char* a, int base_semistable, int divisor_semistable,
                          int base_polystable, int divisor_polystable, fd_result** out);

/* beta may be NULL for beta_0. csv_samples = 0 skips CSV output. */
FD_API fd_status fd_calabi(int n, const char* r, const char* beta, const char* mu, int csv_samples,
                           fd_result** out);

/* grid is a preset name ("default", "smoke") or, when grid_is_json is
 * nonzero, the text of a grid JSON document. Returns FD_ERR_ORACLE when any
 * oracle check fails; the report is still available. */
FD_API fd_status fd_verify(int deep, const char* grid, int grid_is_json, fd_result** out);

/* Re-runs the command recorded in a JSON document produced by this library
 * and requires byte-identical output. */
FD_API fd_status fd_check(const char* json_text, fd_result** out);

/* Accessors return "" for a NULL handle or an absent part. */
FD_API const char* fd_result_json(const fd_result* result);
FD_API const char* fd_result_text(const fd_result* result);
FD_API const char* fd_result_csv(const fd_result* result);
FD_API const char* fd_result_error(const fd_result* result);
FD_API void fd_result_free(fd_result* result);

FD_API const char* fd_status_name(fd_status status);
FD_API const char* fd_version(void);

#ifdef __cplusplus
}
#endif

#endif
