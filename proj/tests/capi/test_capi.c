/* Exercises the C interface from C. */

#include <stdio.h>
#include <string.h>

#include "isoscope.h"

static int failures = 0;

#define EXPECT(cond)                                          \
  do {                                                        \
    if (!(cond)) {                                            \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                             \
    }                                                         \
  } while (0)

int main(void) {
  isoscope_result* r = NULL;
  isoscope_modpoly* p = NULL;
  int ok = 0;

  EXPECT(isoscope_scan(7, "Q", "2268945/128", 3000, "100", 0, &r) == ISOSCOPE_OK);
  EXPECT(strstr(isoscope_result_json(r), "\"schema_version\": 1") != NULL);
  EXPECT(isoscope_result_pass(r) == 1);
  isoscope_result_free(r);
  r = NULL;

  EXPECT(isoscope_scan(7, "Q", "1728", 1000, "10", 0, &r) == ISOSCOPE_E_SPECIAL_J);
  EXPECT(r == NULL);
  EXPECT(strlen(isoscope_last_error()) > 0);
  EXPECT(strcmp(isoscope_status_name(ISOSCOPE_E_SPECIAL_J), "SpecialJ") == 0);
  EXPECT(isoscope_scan(7, "Q", "2/", 1000, "10", 0, &r) == ISOSCOPE_E_PARSE);
  EXPECT(isoscope_scan(7, "Q", "5", 1000, "abc", 0, &r) == ISOSCOPE_E_PARSE);
  EXPECT(isoscope_scan(7, NULL, "5", 1000, "10", 0, &r) == ISOSCOPE_E_INVALID_ARGUMENT);

  EXPECT(isoscope_xsplit5("3*r5+1", &r) == ISOSCOPE_OK);
  EXPECT(strstr(isoscope_result_json(r), "\"exceptional\"") != NULL);
  isoscope_result_free(r);
  EXPECT(isoscope_xsplit5("1/(r5-r5)", &r) == ISOSCOPE_E_PARSE);

  EXPECT(isoscope_verify("hauptmodul", &r) == ISOSCOPE_OK);
  EXPECT(isoscope_result_pass(r) == 1);
  isoscope_result_free(r);
  EXPECT(isoscope_verify("nonsense", &r) == ISOSCOPE_E_INVALID_ARGUMENT);

  EXPECT(isoscope_modpoly_compute(3, &p) == ISOSCOPE_OK);
  EXPECT(isoscope_modpoly_verify(p, 30, &ok) == ISOSCOPE_OK && ok == 1);
  EXPECT(isoscope_modpoly_json(p, &r) == ISOSCOPE_OK);
  EXPECT(strstr(isoscope_result_json(r), "\"terms\"") != NULL);
  isoscope_result_free(r);
  isoscope_modpoly_free(p);
  EXPECT(isoscope_modpoly_compute(4, &p) != ISOSCOPE_OK);

  EXPECT(isoscope_xsplit11(1, 2, &r) == ISOSCOPE_OK);
  EXPECT(strstr(isoscope_result_json(r), "\"1/2\"") != NULL);
  isoscope_result_free(r);

  EXPECT(isoscope_conj11("{\"entries\": [{\"label\": \"x\", \"field\": \"Q\", \"j\": \"-32768\"}]}", 1500, &r) ==
         ISOSCOPE_OK);
  EXPECT(strstr(isoscope_result_json(r), "\"density_one_like\": true") != NULL);
  isoscope_result_free(r);
  EXPECT(isoscope_conj11("{not json", 1500, &r) == ISOSCOPE_E_PARSE);

  isoscope_result_free(NULL);
  isoscope_modpoly_free(NULL);
  printf("%s\n", failures ? "FAILED" : "ok");
  return failures != 0;
}
