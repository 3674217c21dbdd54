/* Pure C client of the shared library: exercises the header from C99 and a
 * couple of end-to-end calls. */
#include <braidlevel.h>

#include <stdio.h>
#include <string.h>

static int fail(const char* what) {
    fprintf(stderr, "capi_client: %s: %s\n", what, braidlevel_last_error());
    return 1;
}

int main(void) {
    braidlevel_spec* spec = NULL;
    if (braidlevel_spec_parse("n=3;A={1,2}", &spec) != BRAIDLEVEL_OK) return fail("parse");

    char* json = NULL;
    if (braidlevel_census_json(spec, NULL, 0, 2, &json) != BRAIDLEVEL_OK) return fail("census");
    int ok = strstr(json, "\"total\":\"18\"") != NULL;
    braidlevel_string_free(json);

    if (braidlevel_charpoly_json(spec, "whitney", 0, 1, &json) != BRAIDLEVEL_OK)
        return fail("charpoly");
    ok &= strstr(json, "\"coeffs\":[\"0\",\"11\",\"-6\",\"1\"]") != NULL;
    braidlevel_string_free(json);
    braidlevel_spec_free(spec);

    if (braidlevel_spec_parse("n=2;A={1,1}", &spec) != BRAIDLEVEL_ERR_INVALID)
        return fail("expected duplicate-offset rejection");

    if (!ok) {
        fprintf(stderr, "capi_client: unexpected payloads\n");
        return 1;
    }
    puts("capi_client: ok");
    return 0;
}
