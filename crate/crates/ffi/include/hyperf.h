#ifndef HYPERF_H
#define HYPERF_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>

// Method for [`hyperf_f`].
typedef enum HyperfMethod {
  HYPERF_METHOD_AUTO = 0,
  HYPERF_METHOD_BRUTE = 1,
  HYPERF_METHOD_VIA_M = 2,
  HYPERF_METHOD_CLOSED_FORM = 3,
  HYPERF_METHOD_COLORING = 4,
} HyperfMethod;

// Outcome of a call.
typedef enum HyperfStatus {
  HYPERF_STATUS_OK = 0,
  HYPERF_STATUS_INVALID_ARGUMENT = 1,
  HYPERF_STATUS_PARSE = 2,
  // No object with the requested property exists.
  HYPERF_STATUS_INFEASIBLE = 3,
  HYPERF_STATUS_BUDGET_EXCEEDED = 4,
  HYPERF_STATUS_INTERNAL = 5,
  HYPERF_STATUS_NULL_POINTER = 6,
} HyperfStatus;

// An r-uniform hypergraph.
typedef struct HyperfHypergraph HyperfHypergraph;

// An orientation of a hypergraph.
typedef struct HyperfOrientation HyperfOrientation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until
// the next call into the library on this thread.
const char *hyperf_last_error_message(void);

// Builds a hypergraph from `edge_count * r` vertex ids laid out edge by
// edge.
//
// # Safety
// `edges` must point to `edge_count * r` values (or be NULL when
// `edge_count` is 0); `out` must be writable.
enum HyperfStatus hyperf_hypergraph_new(size_t n,
                                        size_t r,
                                        const size_t *edges,
                                        size_t edge_count,
                                        struct HyperfHypergraph **out);

// Parses the plain-text format (`hypergraph n=.. r=..` with `e` lines,
// or an oriented file, whose orders are dropped).
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum HyperfStatus hyperf_hypergraph_parse(const char *text, struct HyperfHypergraph **out);

// The complete r-uniform hypergraph on `n` vertices.
//
// # Safety
// `out` must be writable.
enum HyperfStatus hyperf_hypergraph_complete(size_t n, size_t r, struct HyperfHypergraph **out);

// # Safety
// `h` must come from this library and not be used afterwards.
void hyperf_hypergraph_free(struct HyperfHypergraph *h);

// Vertex count, uniformity and edge count.
//
// # Safety
// `h` must be a live handle; each out pointer may be NULL.
enum HyperfStatus hyperf_hypergraph_counts(const struct HyperfHypergraph *h,
                                           size_t *n,
                                           size_t *r,
                                           size_t *edges);

// Maximum average degree as a reduced fraction.
//
// # Safety
// `h` must be a live handle; `num` and `den` must be writable.
enum HyperfStatus hyperf_mad(const struct HyperfHypergraph *h, int64_t *num, int64_t *den);

// # Safety
// `h` must be a live handle; `out` must be writable.
enum HyperfStatus hyperf_degeneracy(const struct HyperfHypergraph *h, size_t *out);

// Orientation in which every vertex is first in at most `k` edges;
// `HYPERF_STATUS_INFEASIBLE` when none exists.
//
// # Safety
// `h` must be a live handle; `out` must be writable.
enum HyperfStatus hyperf_orient_max_outdeg(const struct HyperfHypergraph *h,
                                           uint64_t k,
                                           struct HyperfOrientation **out);

// # Safety
// `d` must come from this library and not be used afterwards.
void hyperf_orientation_free(struct HyperfOrientation *d);

// The orientation in the plain-text `oriented` format. Release the string
// with [`hyperf_string_free`].
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum HyperfStatus hyperf_orientation_to_string(const struct HyperfOrientation *d, char **out);

// # Safety
// `s` must come from this library and not be used afterwards.
void hyperf_string_free(char *s);

// Number of p-sets whose degree vector under `d` has every coordinate at
// least `k`.
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum HyperfStatus hyperf_f_count(const struct HyperfOrientation *d,
                                 size_t p,
                                 uint32_t k,
                                 uint64_t *out);

// `f(H,p,k)`. `budget = 0` uses the library defaults. When `orientation`
// is not NULL it receives an attaining orientation, or NULL when the
// method produces none.
//
// # Safety
// `h` must be a live handle; `value` must be writable; `orientation` may
// be NULL.
enum HyperfStatus hyperf_f(const struct HyperfHypergraph *h,
                           size_t p,
                           uint32_t k,
                           enum HyperfMethod method,
                           uint64_t budget,
                           uint64_t *value,
                           struct HyperfOrientation **orientation);

// Ramsey p-chromatic number. `budget = 0` uses the default node budget.
//
// # Safety
// `h` must be a live handle; `out` must be writable.
enum HyperfStatus hyperf_chi_r(const struct HyperfHypergraph *h,
                               size_t p,
                               uint64_t budget,
                               uint32_t *out);

// Largest family of p-sets colorable with `C(r,p)` colors and no
// monochromatic edge.
//
// # Safety
// `h` must be a live handle; `out` must be writable.
enum HyperfStatus hyperf_b_value(const struct HyperfHypergraph *h,
                                 size_t p,
                                 uint64_t budget,
                                 uint64_t *out);

// `M(H,k)`: the most vertices covered by `r` disjoint classes, each with
// at most `k` edges per vertex in every subset.
//
// # Safety
// `h` must be a live handle; `out` must be writable.
enum HyperfStatus hyperf_m_value(const struct HyperfHypergraph *h,
                                 size_t k,
                                 uint64_t budget,
                                 size_t *out);

// `f` of the complete r-uniform hypergraph on `n` vertices for `p = 1`.
//
// # Safety
// `out` must be writable.
enum HyperfStatus hyperf_closed_form_complete(uint64_t n, size_t r, uint64_t k, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERF_H */
