#ifndef ORBINT_CAPI_H
#define ORBINT_CAPI_H

/* C interface of the shared library.
 *
 * Curves are opaque handles; every computed value crosses the boundary as
 * a heap-allocated string (a "p/q" rational or a JSON document) that the
 * caller releases with orbint_string_free.  Functions return ORBINT_OK on
 * success; on failure *errmsg (when non-NULL) receives a diagnostic that
 * must also be freed.  The error codes double as process exit codes:
 * usage/schema problems are distinct from genuine mathematical failures
 * such as a non-removable pole.
 */

#ifdef __cplusplus
extern "C" {
#endif

enum {
    ORBINT_OK = 0,
    ORBINT_MATH_ERROR = 1, /* pole, nonrational limit, broken invariant */
    ORBINT_USAGE_ERROR = 2 /* bad parameters or malformed input */
};

typedef struct orbint_curve orbint_curve;

/* parse {"q", "genus", "counts"|"numerator"} JSON text; the functional
 * equation of the zeta numerator is enforced */
int orbint_curve_parse_json(const char* text, orbint_curve** out, char** errmsg);
void orbint_curve_free(orbint_curve* c);

long orbint_curve_q(const orbint_curve* c);
int orbint_curve_genus(const orbint_curve* c);

/* Z_C(t) at the rational t = "p/q" */
int orbint_zeta_at(const orbint_curve* c, const char* t, char** value, char** errmsg);

/* the rank-n volume q^{n^2(g-1)} Z*(1/q) Z(1/q^2) ... Z(1/q^n) */
int orbint_volume(const orbint_curve* c, int n, char** value, char** errmsg);

/* the exact value at 1 of the symmetrized block-zeta average, along the
 * deterministic generic direction selected by salt */
int orbint_psi(const orbint_curve* c, long deg_d, int n, int d, long e, unsigned salt,
               char** value, char** errmsg);

/* the full product; *result_json receives
 * {"value", "psi", "volume_factor", "q_power", "direction"} */
int orbint_integral(const orbint_curve* c, long deg_d, int n, int d, long e, unsigned salt,
                    char** result_json, char** errmsg);

/* run every identity suite up to rank nmax; *result_json receives
 * {"passed", "suites": [{"name", "passed", "detail", "elapsed_ms"}...]};
 * returns ORBINT_MATH_ERROR when a suite fails */
int orbint_check_identities(int nmax, unsigned seed, char** result_json, char** errmsg);

void orbint_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ORBINT_CAPI_H */
