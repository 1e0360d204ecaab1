/*
Copyright 2026 The eulercw Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef EULERCW_H
#define EULERCW_H

/*
 * C interface to libeulercw.
 *
 * Complexes live behind an opaque handle. Every other result is returned as a
 * NUL-terminated JSON (or DOT) string allocated by the library; release it
 * with ecw_string_free. Functions return an ecw_status; on anything but
 * ECW_OK the calling thread's last error (ecw_last_error_name /
 * ecw_last_error_message) describes the failure. Report-producing calls
 * (ecw_validate, ecw_verify_cover, ecw_verify_decomposition) still fill
 * *out when they return ECW_CHECK_FAILED.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EULERCW_BUILDING)
#    define ECW_API __declspec(dllexport)
#  else
#    define ECW_API __declspec(dllimport)
#  endif
#else
#  define ECW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ecw_complex ecw_complex;

typedef enum ecw_status {
  ECW_OK = 0,
  ECW_CHECK_FAILED = 1,   /* input fine, analysis precondition or check failed */
  ECW_INPUT_ERROR = 2,    /* malformed document, complex or parameters */
  ECW_INTERNAL_ERROR = 3
} ecw_status;

typedef enum ecw_strategy {
  ECW_STRATEGY_CANONICAL = 0,
  ECW_STRATEGY_SEEDED = 1
} ecw_strategy;

ECW_API const char* ecw_version(void);

/* Name of the last error on this thread ("NotEven", "ParseError", ...), or "". */
ECW_API const char* ecw_last_error_name(void);
ECW_API const char* ecw_last_error_message(void);

ECW_API void ecw_string_free(char* s);

ECW_API ecw_status ecw_complex_parse(const char* json, ecw_complex** out);
ECW_API ecw_status ecw_complex_generate(const char* family, const long long* params,
                                        size_t param_count, ecw_complex** out);
ECW_API void ecw_complex_free(ecw_complex* complex);

ECW_API int ecw_complex_dimension(const ecw_complex* complex);
/* Number of cells of dimension r; 0 when r is out of range. */
ECW_API size_t ecw_complex_cell_count(const ecw_complex* complex, int r);

ECW_API ecw_status ecw_complex_to_json(const ecw_complex* complex, char** out);

ECW_API ecw_status ecw_validate(const ecw_complex* complex, char** out);
ECW_API ecw_status ecw_analyze(const ecw_complex* complex, char** out);
ECW_API ecw_status ecw_decompose(const ecw_complex* complex, char** out);
ECW_API ecw_status ecw_verify_decomposition(const ecw_complex* complex,
                                            const char* decomposition_json, char** out);
ECW_API ecw_status ecw_cover(const ecw_complex* complex, ecw_strategy strategy, uint64_t seed,
                             char** out);
ECW_API ecw_status ecw_verify_cover(const char* cover_json, char** out);
ECW_API ecw_status ecw_side_tour(const ecw_complex* complex, char** out);
ECW_API ecw_status ecw_export_dual(const ecw_complex* complex, char** out);

#ifdef __cplusplus
}
#endif

#endif /* EULERCW_H */
