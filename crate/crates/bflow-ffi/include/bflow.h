#pragma once

/* Generated with cbindgen:0.29.4 */

/* Generated by cbindgen from bflow-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every API call.
 */
typedef enum BfStatus {
  /**
   * The call succeeded and the out-parameter is set.
   */
  BF_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  BF_STATUS_NULL_ARGUMENT = 1,
  /**
   * The input text is not valid UTF-8 or not a well-formed edge list.
   */
  BF_STATUS_PARSE_ERROR = 2,
  /**
   * The graph is not a connected claw-free block graph (or, for tree
   * input, not a tree).
   */
  BF_STATUS_INVALID_GRAPH = 3,
  /**
   * The requested color count is out of range.
   */
  BF_STATUS_INVALID_K = 4,
  /**
   * An internal panic was caught at the boundary.
   */
  BF_STATUS_PANIC = 5,
} BfStatus;

/**
 * Validated claw-free block graph, opaque to C callers.
 *
 * Create with [`bf_graph_from_edge_list`] or
 * [`bf_graph_from_tree_edge_list`]; release with [`bf_graph_free`].
 */
typedef struct BfGraph BfGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses edge-list text as a claw-free block graph and validates it.
 *
 * On success writes a heap-allocated handle to `*out`. The caller owns the
 * handle and must release it with [`bf_graph_free`].
 *
 * # Safety
 *
 * `text` must be null or point to a NUL-terminated string; `out` must be
 * a valid pointer to writable memory.
 */
enum BfStatus bf_graph_from_edge_list(const char *text, struct BfGraph **out);

/**
 * Parses edge-list text as a tree and validates its line graph.
 *
 * On success writes a heap-allocated handle to `*out`. The caller owns the
 * handle and must release it with [`bf_graph_free`].
 *
 * # Safety
 *
 * `text` must be null or point to a NUL-terminated string; `out` must be
 * a valid pointer to writable memory.
 */
enum BfStatus bf_graph_from_tree_edge_list(const char *text, struct BfGraph **out);

/**
 * Releases a handle returned by one of the constructors. Null is ignored.
 *
 * # Safety
 *
 * `g` must be null or a handle previously returned by this library that
 * has not already been freed.
 */
void bf_graph_free(struct BfGraph *g);

/**
 * Writes the size of the largest clique to `*out`.
 *
 * # Safety
 *
 * `g` must be a live handle from this library; `out` must be writable.
 */
enum BfStatus bf_graph_omega(const struct BfGraph *g, uint32_t *out);

/**
 * Writes the m-degree, the largest k such that at least k vertices have
 * degree at least k - 1, to `*out`.
 *
 * # Safety
 *
 * `g` must be a live handle from this library; `out` must be writable.
 */
enum BfStatus bf_graph_m_degree(const struct BfGraph *g, uint32_t *out);

/**
 * Decides whether the graph has a b-coloring with exactly `k` colors and
 * writes the answer to `*out`. `k` must be at least 1.
 *
 * # Safety
 *
 * `g` must be a live handle from this library; `out` must be writable.
 */
enum BfStatus bf_decide_k(const struct BfGraph *g, uint32_t k, bool *out);

/**
 * Writes the b-chromatic number to `*out`.
 *
 * # Safety
 *
 * `g` must be a live handle from this library; `out` must be writable.
 */
enum BfStatus bf_b_chromatic(const struct BfGraph *g, uint32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
