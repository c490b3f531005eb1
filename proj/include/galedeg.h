#pragma once
/* C interface to the exact discrete-geometry core: degree and codegree of
 * point and vector configurations, Gale duals, oriented-matroid circuits,
 * Cayley decompositions, halfspace depth, Tverberg order, degree-<=1
 * classification, example generators, certificate verification, and the
 * seeded theorem-check suites.
 *
 * Configurations travel as text in the library's file format ("points d n"
 * or "vectors r n" header, then n rows of rationals). Every call returns a
 * status code and, through `out`, a handle owning the produced strings:
 * a human-readable report, a JSON certificate (where the command has one),
 * and the error message (on non-zero status). Handles are released with
 * gd_result_free. Passing a NULL `out` runs the command and returns its
 * status but discards the strings. All functions are thread-safe; handles
 * are not shared.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    GD_OK = 0,           /* success                                          */
    GD_CHECK_FAILED = 1, /* a theorem check or certificate verification failed */
    GD_ERR_INPUT = 2,    /* malformed input text, point, or arguments        */
    GD_ERR_INTERNAL = 3  /* internal assertion                               */
};

typedef struct gd_result gd_result;

/* Library version as "major.minor.patch". */
const char* gd_version(void);

/* Point-configuration summary: shape, multiplicities, pyramid apices,
 * degree, codegree, interior-face witness, facet count. Input must be a
 * points file. */
int gd_analyze(const char* input_text, gd_result** out);

/* Canonical Gale dual of a points file; the report is itself a loadable
 * vectors file. */
int gd_gale(const char* input_text, gd_result** out);

/* Oriented-matroid circuits of a vectors file, or of the canonical Gale
 * dual when given a points file. */
int gd_circuits(const char* input_text, gd_result** out);

/* Maximum weak and combinatorial Cayley decompositions (of the Gale dual
 * when given points, with primal face witnesses in that case). */
int gd_cayley(const char* input_text, gd_result** out);

/* Complete classification of degree-<=1 point configurations; an interior
 * face witness of size d+1-degree otherwise. */
int gd_classify(const char* input_text, gd_result** out);

/* Halfspace depth / Tverberg order of a query point. point_text holds
 * whitespace-separated rationals, exactly dim of them. */
int gd_depth(const char* input_text, const char* point_text, gd_result** out);
int gd_tverberg(const char* input_text, const char* point_text, gd_result** out);

/* Built-in generators: pentagon, pentagon-join k, lifted d, prism d,
 * edge-simplex d, lawrence r n, random n d. args are the numeric arguments
 * as strings; seed feeds the random family. The report is the generated
 * configuration file. */
int gd_generate(const char* name, const char* const* args, int nargs, uint64_t seed,
                gd_result** out);

/* Run one named check suite or "all". trials / max_n / max_dim <= 0 keep
 * the per-suite defaults. corrupt_oracle deliberately mis-sets one oracle
 * value (harness self-test). The report lists per-suite outcomes with any
 * offending instances; the certificate holds the same data as JSON.
 * Returns GD_CHECK_FAILED if any suite failed. */
int gd_check(const char* suites, uint64_t seed, long trials, long max_n, long max_dim,
             int corrupt_oracle, gd_result** out);

/* Verify a certificate against the input text it claims to describe. Checks
 * every witnessed claim by substitution; never re-runs a search. Returns
 * GD_CHECK_FAILED with the first failed property when verification fails. */
int gd_verify(const char* input_text, const char* certificate_json, gd_result** out);

/* Accessors; valid until gd_result_free. Never NULL; empty when absent. */
const char* gd_result_text(const gd_result* r);  /* report / generated file  */
const char* gd_result_cert(const gd_result* r);  /* certificate JSON         */
const char* gd_result_error(const gd_result* r); /* message for status != 0  */

void gd_result_free(gd_result* r);

#ifdef __cplusplus
}
#endif
