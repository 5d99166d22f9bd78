#ifndef ISOSCOPE_H
#define ISOSCOPE_H

/* C interface to the isoscope library. Every entry point returns a status;
   results come back as opaque handles owned by the caller. Strings are UTF-8
   and NUL-terminated. The last error message is kept per thread. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ISOSCOPE_API __declspec(dllexport)
#else
#define ISOSCOPE_API __attribute__((visibility("default")))
#endif

#define ISOSCOPE_SCHEMA_VERSION 1

typedef enum isoscope_status {
  ISOSCOPE_OK = 0,
  ISOSCOPE_E_INVALID_ARGUMENT = 1,
  ISOSCOPE_E_PARSE = 2,
  ISOSCOPE_E_DIVISION_BY_ZERO = 3,
  ISOSCOPE_E_COMPOSITE_MODULUS = 4,
  ISOSCOPE_E_REDUCIBLE_MODULUS = 5,
  ISOSCOPE_E_ZERO_POLYNOMIAL = 6,
  ISOSCOPE_E_BOUND_EXCEEDED = 7,
  ISOSCOPE_E_UNCLASSIFIABLE = 8,
  ISOSCOPE_E_NOT_FOUND = 9,
  ISOSCOPE_E_WRONG_SHAPE = 10,
  ISOSCOPE_E_SPECIAL_J = 11,
  ISOSCOPE_E_BAD_CHARACTERISTIC = 12,
  ISOSCOPE_E_FIELD_TOO_LARGE = 13,
  ISOSCOPE_E_BAD_REDUCTION = 14,
  ISOSCOPE_E_NOT_INTEGRAL = 15,
  ISOSCOPE_E_RESIDUE_CHARACTERISTIC = 16,
  ISOSCOPE_E_PRECISION_EXHAUSTED = 17,
  ISOSCOPE_E_INSUFFICIENT_SAMPLES = 18,
  ISOSCOPE_E_POLE_AT_S = 19,
  ISOSCOPE_E_POLE_IN_ORBIT = 20,
  ISOSCOPE_E_ZERO_POINT = 21,
  ISOSCOPE_E_SEARCH_FAILED = 22,
  ISOSCOPE_E_IO = 23,
  ISOSCOPE_E_INTERNAL = 100
} isoscope_status;

/* A JSON document plus a pass flag. */
typedef struct isoscope_result isoscope_result;
/* A computed modular polynomial. */
typedef struct isoscope_modpoly isoscope_modpoly;

ISOSCOPE_API const char* isoscope_version(void);
ISOSCOPE_API const char* isoscope_status_name(isoscope_status status);
/* Message of the last failed call on this thread, "" if none. */
ISOSCOPE_API const char* isoscope_last_error(void);

ISOSCOPE_API const char* isoscope_result_json(const isoscope_result* r);
/* 1 when the check passed (or the computation completed), else 0. */
ISOSCOPE_API int isoscope_result_pass(const isoscope_result* r);
ISOSCOPE_API void isoscope_result_free(isoscope_result* r);

/* field: "Q" or "Q(sqrt(d))"; j: e.g. "2268945/128" or "1+3*sqrt(5)";
   height: decimal integer string. */
ISOSCOPE_API isoscope_status isoscope_scan(int ell, const char* field, const char* j, uint64_t prime_bound,
                                           const char* height, uint64_t seed, isoscope_result** out);

/* s in Q(sqrt 5), e.g. "3*r5+1". */
ISOSCOPE_API isoscope_status isoscope_xsplit5(const char* s, isoscope_result** out);

/* name: xs413, points, cusps, zeros, smooth, brauer, prop71, hauptmodul,
   sutherland, xsplit5-family, modpoly, s4-curves, groups. */
ISOSCOPE_API isoscope_status isoscope_verify(const char* name, isoscope_result** out);

ISOSCOPE_API isoscope_status isoscope_modpoly_compute(int ell, isoscope_modpoly** out);
/* Checks Phi(j(q), j(q^l)) = 0 through q^precision and the congruence mod l. */
ISOSCOPE_API isoscope_status isoscope_modpoly_verify(const isoscope_modpoly* p, int precision, int* ok);
ISOSCOPE_API isoscope_status isoscope_modpoly_json(const isoscope_modpoly* p, isoscope_result** out);
ISOSCOPE_API void isoscope_modpoly_free(isoscope_modpoly* p);

/* d = 1 searches over Q. */
ISOSCOPE_API isoscope_status isoscope_xsplit11(int64_t d, int height, isoscope_result** out);

/* json_text: {"entries": [{"label", "field", "j"}, ...]} */
ISOSCOPE_API isoscope_status isoscope_conj11(const char* json_text, uint64_t prime_bound, isoscope_result** out);

#ifdef __cplusplus
}
#endif

#endif
