#ifndef HOPFDEPTH_H
#define HOPFDEPTH_H

/* Generated by cbindgen from hopfdepth-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes mirroring the CLI exit-code contract.
typedef enum HdStatus {
  HD_OK = 0,
  // malformed input, failed validation, unknown builtin
  HD_INVALID = 1,
  // the computation is unsupported (non-semisimple similarity)
  HD_UNSUPPORTED = 2,
  HD_NULL_ARGUMENT = 3,
  HD_INTERNAL = 4,
} HdStatus;

// Opaque handle to a validated Hopf algebra.
typedef struct HdHopf HdHopf;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Version of the underlying engine, as a static string.
const char *hd_version(void);

// Message of the most recent failure on this thread.
const char *hd_last_error(void);

// Releases a string returned through an out-pointer.
//
// # Safety
// `s` must have been produced by this library and not freed before.
void hd_string_free(char *s);

// Builds a Hopf algebra from a builtin spec: `hopf:S3`, `dual:S3`,
// `double:S3`, `tensor:C2`.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be a valid pointer.
enum HdStatus hd_hopf_builtin(const char *spec, struct HdHopf **out);

// Parses and fully validates a Hopf algebra from its JSON form.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be a valid pointer.
enum HdStatus hd_hopf_from_json(const char *json, struct HdHopf **out);

// Dimension of the algebra, or -1 on a null handle.
//
// # Safety
// `h` must be null or a live handle from this library.
int64_t hd_hopf_dim(const struct HdHopf *h);

// Serializes the Hopf algebra to its JSON form.
//
// # Safety
// `h` must be a live handle; `out` must be a valid pointer.
enum HdStatus hd_hopf_to_json(const struct HdHopf *h, char **out);

// Runs the full axiom suite and returns the report as JSON.
//
// # Safety
// `h` must be a live handle; `out` must be a valid pointer.
enum HdStatus hd_hopf_check(const struct HdHopf *h, char **out);

// Releases a Hopf handle.
//
// # Safety
// `h` must have been produced by this library and not freed before.
void hd_hopf_free(struct HdHopf *h);

// Depth report for a builtin extension, as JSON with the fields
// extension/table/min_odd/min_even/min_depth/theorems.
//
// # Safety
// `ambient` and `side` must be NUL-terminated strings; `out` valid.
enum HdStatus hd_depth(const char *ambient, const char *side, uint32_t n_max, char **out);

// Ad-stability report for a builtin Hopf subalgebra pair, as JSON.
//
// # Safety
// `ambient` and `side` must be NUL-terminated strings; `out` valid.
enum HdStatus hd_normality(const char *ambient, const char *side, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFDEPTH_H */
