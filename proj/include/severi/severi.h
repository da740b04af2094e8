/* C interface of the severi-lab exact-arithmetic library.
 *
 * Every computation takes an opaque context handle and returns a status
 * code; results are NUL-terminated JSON strings allocated by the library
 * and released with severi_string_free. On failure the output pointer is
 * left untouched and severi_last_error / severi_last_error_code describe
 * what went wrong. All numbers inside result JSON are exact (integers or
 * "p/q" strings); the library never emits floating point.
 */
#ifndef SEVERI_H
#define SEVERI_H

#ifdef __cplusplus
extern "C" {
#endif

/* status codes (also the CLI exit codes) */
#define SEVERI_OK 0
#define SEVERI_ERR_DOMAIN 1 /* well-formed request, mathematical/domain failure */
#define SEVERI_ERR_USAGE 2  /* malformed request: bad syntax, bad JSON, bad flags */

typedef struct severi_ctx severi_ctx;

severi_ctx* severi_ctx_new(void);
void severi_ctx_free(severi_ctx* ctx);

/* Human-readable message and stable machine code ("non_isolated", ...)
 * for the most recent failing call on this context. Pointers are valid
 * until the next call on the same context. */
const char* severi_last_error(const severi_ctx* ctx);
const char* severi_last_error_code(const severi_ctx* ctx);

const char* severi_version(void);
void severi_string_free(char* s);

/* Local invariants of a plane curve germ f(x, y) in the shared
 * polynomial grammar, e.g. "y^2 - x^3". */
int severi_germ_analyze(severi_ctx* ctx, const char* poly, char** out_json);

/* Fiber classification along a family y^2 = p_s(x); family_json is
 * {"coeffs": ["...", ...]} (polynomials in s, index = power of x) and
 * samples is a comma-separated list of rationals. */
int severi_family_scan(severi_ctx* ctx, const char* family_json, const char* samples,
                       char** out_json);

/* Stratum of y^2 = x^3 + a x + b. */
int severi_family_stratify(severi_ctx* ctx, const char* a, const char* b, char** out_json);

/* Stratification along (a, b) = (-3t^2, 2t^3) for a comma-separated list
 * of rational t values. */
int severi_family_scan_discriminant(severi_ctx* ctx, const char* t_values, char** out_json);

/* Expected-dimension report; query_json is
 * {"surface":"p2"|"k3"|"hirzebruch", "d"/"g"/"n","a","b":..., "delta":..., "kappa":...}. */
int severi_strata_expdim(severi_ctx* ctx, const char* query_json, char** out_json);

/* Rank of a global-to-local deformation matrix; spec_json is
 * {"budgets": ["cusp_surface", ...], "matrix": [[...], ...]}. */
int severi_defmap_rank(severi_ctx* ctx, const char* spec_json, char** out_json);

/* Solve M xi = target (target: comma-separated rationals). Unrealizable
 * targets fail with code "unrealizable". */
int severi_defmap_realize(severi_ctx* ctx, const char* spec_json, const char* target,
                          char** out_json);

/* Tropical Severi degree; algorithm is "paths", "floor" or "both". */
int severi_tropical_count(severi_ctx* ctx, int d, int delta, const char* algorithm,
                          char** out_json);

/* Contract bounded edges (comma-separated indices) of a curve given in
 * the TropicalCurve JSON schema. */
int severi_tropical_contract(severi_ctx* ctx, const char* curve_json, const char* edges,
                             char** out_json);

/* Boundary-event report for simultaneously vanishing edge lengths. */
int severi_tropical_cusp_signature(severi_ctx* ctx, const char* curve_json, const char* edges,
                                   char** out_json);

/* Flatten a result object into CSV (header row; one row per record of
 * the first array-of-objects field, scalars repeated). */
int severi_json_to_csv(severi_ctx* ctx, const char* result_json, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* SEVERI_H */
