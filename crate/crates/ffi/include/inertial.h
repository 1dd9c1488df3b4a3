#ifndef INERTIAL_H
#define INERTIAL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum InertialStatus {
  INERTIAL_STATUS_OK = 0,
  INERTIAL_STATUS_NULL_POINTER = 1,
  INERTIAL_STATUS_INVALID_ARGUMENT = 2,
  INERTIAL_STATUS_PARSE = 3,
  INERTIAL_STATUS_BUDGET = 4,
  INERTIAL_STATUS_OVERFLOW = 5,
  INERTIAL_STATUS_INTERNAL = 6,
} InertialStatus;

/**
 * Opaque graph handle.
 */
typedef struct InertialGraph InertialGraph;

typedef struct InertialInertia {
  size_t n_plus;
  size_t n_zero;
  size_t n_minus;
} InertialInertia;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or an empty string. The
 * pointer stays valid until the next call into this library on the thread.
 */
const char *inertial_last_error(void);

/**
 * Parses a NUL-terminated graph6 string.
 *
 * # Safety
 * `text` must be a valid C string and `out` a valid pointer.
 */
enum InertialStatus inertial_graph_from_graph6(const char *text, struct InertialGraph **out);

/**
 * Builds a graph from `edge_count` pairs stored flat in `edges`
 * (`u0, v0, u1, v1, ...`).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` values (or may be null when
 * `edge_count` is 0) and `out` must be valid.
 */
enum InertialStatus inertial_graph_from_edges(size_t order,
                                              const size_t *edges,
                                              size_t edge_count,
                                              struct InertialGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void inertial_graph_free(struct InertialGraph *g);

/**
 * # Safety
 * Pointers must be valid.
 */
enum InertialStatus inertial_graph_order(const struct InertialGraph *g, size_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum InertialStatus inertial_graph_complement(const struct InertialGraph *g,
                                              struct InertialGraph **out);

/**
 * Encodes as graph6. Release the string with `inertial_string_free`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum InertialStatus inertial_graph_to_graph6(const struct InertialGraph *g, char **out);

/**
 * # Safety
 * `s` must come from this library. Null is ignored.
 */
void inertial_string_free(char *s);

/**
 * Exact inertia of the adjacency matrix.
 *
 * # Safety
 * Pointers must be valid.
 */
enum InertialStatus inertial_inertia(const struct InertialGraph *g, struct InertialInertia *out);

/**
 * `1 + max(n+/n-, n-/n+)` as a reduced fraction. Edgeless graphs give
 * `INERTIAL_STATUS_INVALID_ARGUMENT`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum InertialStatus inertial_inertial_bound(const struct InertialGraph *g,
                                            int64_t *num,
                                            int64_t *den);

/**
 * Chromatic number. A `vertex_budget` of 0 selects the default.
 *
 * # Safety
 * Pointers must be valid.
 */
enum InertialStatus inertial_chromatic_number(const struct InertialGraph *g,
                                              size_t vertex_budget,
                                              size_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum InertialStatus inertial_independence_number(const struct InertialGraph *g, size_t *out);

/**
 * Fractional chromatic number as a reduced fraction. A `max_order` of 0
 * selects the default.
 *
 * # Safety
 * Pointers must be valid.
 */
enum InertialStatus inertial_fractional_chromatic(const struct InertialGraph *g,
                                                  size_t max_order,
                                                  int64_t *num,
                                                  int64_t *den);

/**
 * `1 + mu_1/|mu_n|` from the numeric spectrum.
 *
 * # Safety
 * Pointers must be valid.
 */
enum InertialStatus inertial_hoffman_bound(const struct InertialGraph *g, double *out);

/**
 * Eigenvalue multiplicities `(f, g)` of a strongly regular parameter set.
 *
 * # Safety
 * Pointers must be valid.
 */
enum InertialStatus inertial_srg_multiplicities(int64_t n,
                                                int64_t k,
                                                int64_t lambda,
                                                int64_t mu,
                                                int64_t *f,
                                                int64_t *g);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INERTIAL_H */
