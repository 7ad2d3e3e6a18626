/* vertexcalc: exact verification engine for vertex-superalgebra identities.
 *
 * C interface over the C++ core.  Every returned string is heap-allocated
 * and must be released with vc_free.  Status codes mirror the CLI exit
 * codes: 0 pass/ok, 1 check failed, 2 refused (out-of-scope request),
 * 3 usage/input error, 4 internal error.
 */
#ifndef VERTEXCALC_H
#define VERTEXCALC_H

#ifdef __cplusplus
extern "C" {
#endif

enum vc_status {
  VC_OK = 0,
  VC_FAIL = 1,
  VC_REFUSED = 2,
  VC_USAGE = 3,
  VC_ERROR = 4
};

const char* vc_version(void);
void vc_free(char* s);

/* JSON catalog of every named verification suite. */
int vc_list_suites(char** json_out);

/* Runs one suite; params_json is a JSON object of name -> value (exact
 * fractions as strings, integers for orders/bounds), may be NULL or "{}".
 * A JSON report is returned in report_out even on VC_FAIL. */
int vc_run_suite(const char* suite, const char* params_json, char** report_out);

/* Opaque algebra presentations (bundled preset name, or the textual format
 * documented in the project README). */
typedef struct vc_algebra vc_algebra;

vc_algebra* vc_algebra_open_preset(const char* name, char** error_out);
vc_algebra* vc_algebra_open_text(const char* text, char** error_out);
void vc_algebra_close(vc_algebra* a);

/* JSON description: generators, parities, weights, parameters. */
int vc_algebra_describe(const vc_algebra* a, char** json_out);

/* Singular OPE of two field expressions written in the presentation's
 * expression syntax; the poles are returned as a JSON object. */
int vc_ope(const vc_algebra* a, const char* left, const char* right,
           char** json_out, char** error_out);

/* Canonical PBW normal form of a field expression. */
int vc_normal_order(const vc_algebra* a, const char* expr, char** out,
                    char** error_out);

#ifdef __cplusplus
}
#endif

#endif /* VERTEXCALC_H */
