/* braidlevel: exact region/level enumeration for deformed braid arrangements.
 *
 * C interface to the shared library. Handles are opaque; every function that
 * can fail returns a braidlevel error code, with a human-readable message
 * available from braidlevel_last_error() (thread-local). Strings returned
 * through out-parameters are heap-allocated and must be released with
 * braidlevel_string_free(). A parsed spec is immutable, so one handle may be
 * shared by concurrent calls.
 */
#ifndef BRAIDLEVEL_H
#define BRAIDLEVEL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define BRAIDLEVEL_OK 0
#define BRAIDLEVEL_ERR_INVALID 1  /* bad spec string / parameters */
#define BRAIDLEVEL_ERR_CAP 2      /* search space exceeds the configured cap */
#define BRAIDLEVEL_ERR_VERIFY 3   /* verification found a mismatch */
#define BRAIDLEVEL_ERR_INTERNAL 4 /* self-check failure */
#define BRAIDLEVEL_ERR_NULLARG 5

typedef struct braidlevel_spec braidlevel_spec;

const char* braidlevel_version(void);

/* Message for the most recent failure on this thread. */
const char* braidlevel_last_error(void);

void braidlevel_string_free(char* s);

/* Spec grammar: "n=3;A={1,2}" or "n=4;preset=shi;b=2". Presets: braid, shi,
 * catalan, semiorder, linial, interval (interval takes both a and b). */
int braidlevel_spec_parse(const char* text, braidlevel_spec** out);
void braidlevel_spec_free(braidlevel_spec* spec);
/* Canonical expanded "n=...;A={...}" form. */
int braidlevel_spec_to_string(const braidlevel_spec* spec, char** out);
int braidlevel_spec_dimension(const braidlevel_spec* spec);

/* Everywhere below: cap == 0 selects the engine default, jobs <= 0 selects
 * single-threaded. Results are identical across jobs values. */

/* method: "digraph" (default when NULL) or "geometric". */
int braidlevel_census_json(const braidlevel_spec* spec, const char* method, uint64_t cap,
                           int jobs, char** json_out);

/* method: "ff", "whitney", "closed", "census", or NULL for ff with census
 * fallback. */
int braidlevel_charpoly_json(const braidlevel_spec* spec, const char* method, uint64_t cap,
                             int jobs, char** json_out);

/* CSV table n,l,value,method. level < 0 selects all levels; method NULL
 * emits every applicable method (census, closed, formula). strict_441
 * evaluates the printed extended-Linial formula instead of the corrected
 * one (documentation mode; values may be non-integral). */
int braidlevel_levels_csv(const braidlevel_spec* spec, const char* method, int level,
                          uint64_t cap, int jobs, int strict_441, char** csv_out);

/* Exact real-root report for the arrangement's characteristic polynomial. */
int braidlevel_roots_json(const braidlevel_spec* spec, uint64_t cap, int jobs, char** json_out);

/* One interior witness point per region, at most max_regions of them
 * (0 = no limit beyond the cap guard). */
int braidlevel_sample_json(const braidlevel_spec* spec, uint64_t cap, uint64_t max_regions,
                           char** json_out);

/* Cross-method/identity checks for one spec. Returns BRAIDLEVEL_OK when all
 * checks agree, BRAIDLEVEL_ERR_VERIFY otherwise; the line-by-line report is
 * stored either way. */
int braidlevel_verify_spec(const braidlevel_spec* spec, uint64_t cap, int jobs,
                           char** report_out);

/* Identity sweep up to dimension max_n (<= 0 selects the default, 4). */
int braidlevel_verify_sweep(int max_n, uint64_t cap, int jobs, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* BRAIDLEVEL_H */
