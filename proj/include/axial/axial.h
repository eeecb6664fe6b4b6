#ifndef AXIAL_AXIAL_H
#define AXIAL_AXIAL_H

/* Exact computations in commutative nonassociative algebras given by
   structure constants: axes, fusion rules, Frobenius forms, identities. */

#include <stddef.h>

#if defined(_WIN32)
#  ifdef AXIAL_BUILDING_LIBRARY
#    define AXIAL_API __declspec(dllexport)
#  else
#    define AXIAL_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) || defined(__clang__)
#  define AXIAL_API __attribute__((visibility("default")))
#else
#  define AXIAL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. AXIAL_CHECK_FAILED means the computation ran and a
   mathematical check came out false; codes >= AXIAL_ERR_INPUT are errors. */
enum {
  AXIAL_OK = 0,
  AXIAL_CHECK_FAILED = 1,
  AXIAL_ERR_INPUT = 2,    /* malformed input, bad parameter, schema error */
  AXIAL_ERR_IO = 3,       /* unreadable or unwritable file */
  AXIAL_ERR_INTERNAL = 4  /* unexpected failure */
};

typedef struct axial_algebra axial_algebra;

AXIAL_API const char* axial_version(void);

/* Message and error-kind name ("Schema", "BadLambda", ...) of the last
   failure on this thread; empty strings when none. */
AXIAL_API const char* axial_last_error(void);
AXIAL_API const char* axial_last_error_kind(void);

/* Frees strings returned through char** out-parameters. */
AXIAL_API void axial_string_free(char* s);

AXIAL_API int axial_algebra_load(const char* path, axial_algebra** out);
AXIAL_API int axial_algebra_save(const axial_algebra* alg, const char* path);
AXIAL_API int axial_algebra_from_json(const char* json, axial_algebra** out);
AXIAL_API int axial_algebra_to_json(const axial_algebra* alg, char** out);
AXIAL_API void axial_algebra_free(axial_algebra* alg);
AXIAL_API size_t axial_algebra_dim(const axial_algebra* alg);

/* Builds one of the stock algebras. options_json:
     {"kind": "toric" | "two-gen" | "matsuo" | "jordan-sym",
      "field": {...}, "lambda": "1/2", "pi": "1/8", "lines": "a,b,c;...",
      "points": ["a", ...], "k": 3, "flatAnnihilating": false}
   On success *out owns the algebra (with form and axes when known) and
   *report, if report is non-null, receives a JSON run report. */
AXIAL_API int axial_construct(const char* options_json, axial_algebra** out, char** report);

/* Runs an analysis: "check-axis", "fusion", "frobenius", "radical",
   "identity", "miyamoto", "solid", "orbit", "audit-trace". Returns
   AXIAL_OK when every check in the report passed, AXIAL_CHECK_FAILED when
   one failed, or an error code (then *report is left NULL). */
AXIAL_API int axial_run(const char* command, const axial_algebra* alg, const char* options_json, char** report);

#ifdef __cplusplus
}
#endif

#endif
