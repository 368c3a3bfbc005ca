#ifndef SPINED_H
#define SPINED_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Width conventions: the largest clique of an optimal completion, or that value minus one.
 */
typedef enum SpinedConvention {
  SpinedConvention_Paper = 0,
  SpinedConvention_Standard = 1,
} SpinedConvention;

typedef enum SpinedFormat {
  SpinedFormat_EdgeList = 0,
  SpinedFormat_Dimacs = 1,
  SpinedFormat_Json = 2,
} SpinedFormat;

typedef enum SpinedHypergraphFormat {
  SpinedHypergraphFormat_Text = 0,
  SpinedHypergraphFormat_Json = 1,
} SpinedHypergraphFormat;

typedef enum SpinedStatus {
  SpinedStatus_Ok = 0,
  SpinedStatus_NullPointer = 1,
  SpinedStatus_InvalidArgument = 2,
  SpinedStatus_ParseError = 3,
  SpinedStatus_RangeError = 4,
  SpinedStatus_BoundExceeded = 5,
  SpinedStatus_Internal = 6,
} SpinedStatus;

/**
 * Opaque graph handle.
 */
typedef struct SpinedGraph SpinedGraph;

/**
 * Opaque hypergraph handle.
 */
typedef struct SpinedHypergraph SpinedHypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the next failing call.
 */
const char *spined_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *spined_version(void);

/**
 * Builds a graph from `edge_count` pairs stored flat in `edges` (`2 * edge_count` entries).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values unless `edge_count` is 0.
 * `out` must be writable.
 */
enum SpinedStatus spined_graph_new(uintptr_t vertex_count,
                                   const uintptr_t *edges,
                                   uintptr_t edge_count,
                                   struct SpinedGraph **out);

/**
 * Parses a graph from a NUL-terminated string.
 *
 * # Safety
 * `text` must be a valid C string and `out` writable.
 */
enum SpinedStatus spined_graph_parse(const char *text,
                                     enum SpinedFormat format,
                                     struct SpinedGraph **out);

/**
 * # Safety
 * `graph` must be NULL or a handle from this library not yet freed.
 */
void spined_graph_free(struct SpinedGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle; `out` writable.
 */
enum SpinedStatus spined_graph_vertex_count(const struct SpinedGraph *graph, uintptr_t *out);

/**
 * # Safety
 * `graph` must be a live handle; `out` writable.
 */
enum SpinedStatus spined_graph_edge_count(const struct SpinedGraph *graph, uintptr_t *out);

/**
 * Δ of the graph in the requested convention.
 *
 * # Safety
 * `graph` must be a live handle; `out` writable.
 */
enum SpinedStatus spined_graph_delta(const struct SpinedGraph *graph,
                                     enum SpinedConvention convention,
                                     uintptr_t *out);

/**
 * Exact treewidth by dynamic programming; fails with `BoundExceeded` on large graphs.
 *
 * # Safety
 * `graph` must be a live handle; `out` writable.
 */
enum SpinedStatus spined_graph_treewidth_oracle(const struct SpinedGraph *graph,
                                                enum SpinedConvention convention,
                                                uintptr_t *out);

/**
 * # Safety
 * `graph` must be a live handle; `out` writable.
 */
enum SpinedStatus spined_graph_clique_number(const struct SpinedGraph *graph, uintptr_t *out);

/**
 * # Safety
 * `graph` must be a live handle; `out` writable.
 */
enum SpinedStatus spined_graph_is_chordal(const struct SpinedGraph *graph, bool *out);

/**
 * Parses a hypergraph from a NUL-terminated string.
 *
 * # Safety
 * `text` must be a valid C string and `out` writable.
 */
enum SpinedStatus spined_hypergraph_parse(const char *text,
                                          enum SpinedHypergraphFormat format,
                                          struct SpinedHypergraph **out);

/**
 * # Safety
 * `hypergraph` must be NULL or a handle from this library not yet freed.
 */
void spined_hypergraph_free(struct SpinedHypergraph *hypergraph);

/**
 * # Safety
 * `hypergraph` must be a live handle; `out` writable.
 */
enum SpinedStatus spined_hypergraph_vertex_count(const struct SpinedHypergraph *hypergraph,
                                                 uintptr_t *out);

/**
 * # Safety
 * `hypergraph` must be a live handle; `out` writable.
 */
enum SpinedStatus spined_hypergraph_edge_count(const struct SpinedHypergraph *hypergraph,
                                               uintptr_t *out);

/**
 * Δ of the hypergraph, taken on its primal graph.
 *
 * # Safety
 * `hypergraph` must be a live handle; `out` writable.
 */
enum SpinedStatus spined_hypergraph_delta(const struct SpinedHypergraph *hypergraph,
                                          enum SpinedConvention convention,
                                          uintptr_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPINED_H */
