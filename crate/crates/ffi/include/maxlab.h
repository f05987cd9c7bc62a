#ifndef MAXLAB_H
#define MAXLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MaxlabStatus {
  MAXLAB_STATUS_OK = 0,
  MAXLAB_STATUS_NULL_POINTER = 1,
  MAXLAB_STATUS_INVALID_UTF8 = 2,
  MAXLAB_STATUS_PARSE_ERROR = 3,
  MAXLAB_STATUS_INVALID_INPUT = 4,
  MAXLAB_STATUS_PRECONDITION_VIOLATED = 5,
  MAXLAB_STATUS_NO_SOLUTION = 6,
  MAXLAB_STATUS_TAIL_NOT_CERTIFIED = 7,
  MAXLAB_STATUS_ZERO_NORM = 8,
  MAXLAB_STATUS_PANIC = 9,
} MaxlabStatus;

// A compactly supported nonnegative step function.
typedef struct MaxlabFunction MaxlabFunction;

// A measure: finitely many atoms plus a piecewise-constant density.
typedef struct MaxlabMeasure MaxlabMeasure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer is
// valid until the next call on the same thread.
const char *maxlab_last_error(void);

// Parses a measure from JSON into `*out`.
//
// # Safety
// `json` must be a nul-terminated string and `out` a valid pointer.
enum MaxlabStatus maxlab_measure_from_json(const char *json, struct MaxlabMeasure **out);

// # Safety
// `measure` must come from `maxlab_measure_from_json` or be null.
void maxlab_measure_free(struct MaxlabMeasure *measure);

// Parses a step function from JSON into `*out`.
//
// # Safety
// `json` must be a nul-terminated string and `out` a valid pointer.
enum MaxlabStatus maxlab_function_from_json(const char *json, struct MaxlabFunction **out);

// # Safety
// `function` must come from `maxlab_function_from_json` or be null.
void maxlab_function_free(struct MaxlabFunction *function);

// Uncentered maximal function at the rational `x` (e.g. "3/4"). Writes the
// value as a double and, if `exact` is non-null, as a fraction string that
// must be released with `maxlab_string_free`.
//
// # Safety
// Handles must be live, `x` nul-terminated, `value` valid.
enum MaxlabStatus maxlab_maximal_at(const struct MaxlabMeasure *measure,
                                    const struct MaxlabFunction *function,
                                    const char *x,
                                    double *value,
                                    char **exact);

// `||M f||_p / ||f||_p` with `tol` relative to `||f||_p^p`.
//
// # Safety
// Handles must be live; `value` and `error_bound` valid.
enum MaxlabStatus maxlab_ratio(const struct MaxlabMeasure *measure,
                               const struct MaxlabFunction *function,
                               double p,
                               double tol,
                               double *value,
                               double *error_bound);

// Lower-bound constants for exponent `p` and overlap `overlap`.
//
// # Safety
// `lerner` and `besicovitch` must be valid pointers.
enum MaxlabStatus maxlab_constants(double p, uint32_t overlap, double *lerner, double *besicovitch);

// Releases a string returned by this library.
//
// # Safety
// `s` must come from this library or be null.
void maxlab_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MAXLAB_H */
