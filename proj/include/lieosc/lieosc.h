/* C interface to the lieosc library. All objects are opaque handles owned by
 * the caller and released with the matching *_free function. Functions return
 * a status; on failure lieosc_last_error() describes the problem (per thread).
 * Spectral parameters are rational strings such as "3/2" so that every check
 * stays exact. */
#ifndef LIEOSC_H
#define LIEOSC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(LIEOSC_BUILDING)
#define LIEOSC_API __attribute__((visibility("default")))
#else
#define LIEOSC_API
#endif

typedef enum lieosc_status {
  LIEOSC_OK = 0,
  LIEOSC_INVALID_ARGUMENT = 1,
  LIEOSC_INVALID_SCALAR = 2,
  LIEOSC_INVALID_RANK = 3,
  LIEOSC_CUTOFF_TOO_SMALL = 4,
  LIEOSC_FAMILY_MISMATCH = 5,
  LIEOSC_DIMENSION_MISMATCH = 6,
  LIEOSC_POLE = 7,
  LIEOSC_CONSISTENCY = 8,
  LIEOSC_IO = 9,
  LIEOSC_INTERNAL = 100
} lieosc_status;

typedef enum lieosc_format { LIEOSC_JSON = 0, LIEOSC_CSV = 1 } lieosc_format;

typedef struct lieosc_algebra lieosc_algebra;
typedef struct lieosc_oscillator lieosc_oscillator;
typedef struct lieosc_report lieosc_report;

LIEOSC_API const char* lieosc_version(void);
LIEOSC_API const char* lieosc_status_name(lieosc_status status);
/* Message of the last failed call on this thread; empty after success. */
LIEOSC_API const char* lieosc_last_error(void);
/* Releases strings returned through char** out parameters. */
LIEOSC_API void lieosc_string_free(char* s);

/* Family letter 'a', 'b', 'c' or 'd' (either case). Family a of rank r is su(r+1). */
LIEOSC_API lieosc_status lieosc_algebra_create(char family, int rank, lieosc_algebra** out);
LIEOSC_API void lieosc_algebra_free(lieosc_algebra* alg);
LIEOSC_API lieosc_status lieosc_algebra_info(const lieosc_algebra* alg, int* dim_v, int* dim_g, int* dim_y);
/* 1 when the oscillator representation is a truncated bosonic one (c, a). */
LIEOSC_API int lieosc_algebra_needs_cutoff(const lieosc_algebra* alg);
LIEOSC_API lieosc_status lieosc_algebra_export(const lieosc_algebra* alg, lieosc_format format, char** out);
/* tensor: "c", "d", "h", "dyyy" or "v". */
LIEOSC_API lieosc_status lieosc_tensor_export(const lieosc_algebra* alg, const char* tensor, lieosc_format format,
                                              char** out);

/* Metaplectic (c), spinor (b, d) or su(n) oscillator (a) representation. The
 * cutoff bounds the total occupation for c and a and is ignored for b and d. */
LIEOSC_API lieosc_status lieosc_oscillator_create(const lieosc_algebra* alg, int cutoff, lieosc_oscillator** out);
LIEOSC_API void lieosc_oscillator_free(lieosc_oscillator* osc);
LIEOSC_API lieosc_status lieosc_oscillator_dim(const lieosc_oscillator* osc, size_t* dim);
LIEOSC_API lieosc_status lieosc_oscillator_export(const lieosc_oscillator* osc, lieosc_format format, char** out);

/* Verification suites. Each creates a report. */
LIEOSC_API lieosc_status lieosc_check_algebra(const lieosc_algebra* alg, lieosc_report** out);
LIEOSC_API lieosc_status lieosc_check_oscillator(const lieosc_oscillator* osc, lieosc_report** out);
LIEOSC_API lieosc_status lieosc_check_quadratic(const lieosc_oscillator* osc, lieosc_report** out);
LIEOSC_API lieosc_status lieosc_check_casimir(const lieosc_oscillator* osc, lieosc_report** out);
LIEOSC_API lieosc_status lieosc_spectrum(const lieosc_oscillator* osc, lieosc_report** out);
LIEOSC_API lieosc_status lieosc_check_ybe(const lieosc_algebra* alg, int samples, uint64_t seed, lieosc_report** out);
LIEOSC_API lieosc_status lieosc_check_ybe_at(const lieosc_algebra* alg, const char* u, const char* v, const char* eta,
                                             lieosc_report** out);
/* RTT for a chain of `sites` identical sites (1..3). */
LIEOSC_API lieosc_status lieosc_check_rtt(const lieosc_oscillator* osc, const char* u, const char* v, const char* eta,
                                          int sites, lieosc_report** out);
/* cutoff <= 0 means none (required for c and a). */
LIEOSC_API lieosc_status lieosc_verify_all(char family, int rank, int cutoff, int samples, uint64_t seed,
                                           lieosc_report** out);

LIEOSC_API int lieosc_report_passed(const lieosc_report* report);
LIEOSC_API size_t lieosc_report_count(const lieosc_report* report);
LIEOSC_API lieosc_status lieosc_report_export(const lieosc_report* report, lieosc_format format, char** out);
LIEOSC_API void lieosc_report_free(lieosc_report* report);

#ifdef __cplusplus
}
#endif

#endif /* LIEOSC_H */
