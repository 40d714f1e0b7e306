#ifndef HFREE_H
#define HFREE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. `HFREE_STATUS_OK` is zero.
 */
typedef enum HfreeStatus {
  HFREE_STATUS_OK = 0,
  HFREE_STATUS_NULL_POINTER = 1,
  HFREE_STATUS_INVALID_ARGUMENT = 2,
  HFREE_STATUS_PARSE = 3,
  /**
   * The answer exceeds the supplied budget.
   */
  HFREE_STATUS_BUDGET_EXCEEDED = 4,
  /**
   * A search or enumeration limit was hit before an answer was found.
   */
  HFREE_STATUS_LIMIT_REACHED = 5,
  /**
   * The pattern is outside the solver's scope.
   */
  HFREE_STATUS_UNSUPPORTED = 6,
  HFREE_STATUS_PANIC = 7,
} HfreeStatus;

/**
 * Opaque graph handle.
 */
typedef struct HfreeGraph HfreeGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *hfree_last_error_message(void);

/**
 * Creates an edgeless graph on `n` vertices.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum HfreeStatus hfree_graph_new(size_t n, struct HfreeGraph **out);

/**
 * Parses one graph6 string.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` valid for writing.
 */
enum HfreeStatus hfree_graph_from_graph6(const char *text, struct HfreeGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void hfree_graph_free(struct HfreeGraph *g);

/**
 * Adds the edge `uv`. Self-loops, duplicates and out-of-range endpoints
 * give `HFREE_STATUS_INVALID_ARGUMENT`.
 *
 * # Safety
 * `g` must be a live handle.
 */
enum HfreeStatus hfree_graph_add_edge(struct HfreeGraph *g, size_t u, size_t v);

/**
 * # Safety
 * `g` must be a live handle or null (which yields 0).
 */
size_t hfree_graph_vertex_count(const struct HfreeGraph *g);

/**
 * # Safety
 * `g` must be a live handle or null (which yields 0).
 */
size_t hfree_graph_edge_count(const struct HfreeGraph *g);

/**
 * Writes a newly allocated graph6 string to `out`; free it with
 * `hfree_string_free`.
 *
 * # Safety
 * `g` must be a live handle and `out` valid for writing.
 */
enum HfreeStatus hfree_graph_to_graph6(const struct HfreeGraph *g, char **out);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void hfree_string_free(char *s);

/**
 * Exact `rem_H(G)` by bounded search. A negative `budget` means none;
 * otherwise `HFREE_STATUS_BUDGET_EXCEEDED` is returned when the answer is
 * larger.
 *
 * # Safety
 * `g` and `h` must be live handles and `rem` valid for writing.
 */
enum HfreeStatus hfree_rem(const struct HfreeGraph *g,
                           const struct HfreeGraph *h,
                           int64_t budget,
                           size_t *rem);

/**
 * `ex(G, H)` for a star forest `H`, in polynomial time.
 *
 * # Safety
 * `g` and `h` must be live handles and `ex` valid for writing.
 */
enum HfreeStatus hfree_ex_star_forest(const struct HfreeGraph *g,
                                      const struct HfreeGraph *h,
                                      size_t *ex);

/**
 * # Safety
 * `g` must be a live handle and `size` valid for writing.
 */
enum HfreeStatus hfree_matching_number(const struct HfreeGraph *g, size_t *size);

/**
 * Largest subgraph with `d(v) <= f[v]`; `len` must equal the vertex count.
 *
 * # Safety
 * `f` must point to `len` readable values and `m` be valid for writing.
 */
enum HfreeStatus hfree_max_degree_subgraph(const struct HfreeGraph *g,
                                           const size_t *f,
                                           size_t len,
                                           size_t *m);

/**
 * Whether `G` contains `K_{⌊n/2⌋,⌈n/2⌉}`.
 *
 * # Safety
 * `g` must be a live handle and `found` valid for writing.
 */
enum HfreeStatus hfree_contains_balanced_biclique(const struct HfreeGraph *g, bool *found);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HFREE_H */
