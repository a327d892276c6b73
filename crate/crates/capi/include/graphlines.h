#ifndef GRAPHLINES_H
#define GRAPHLINES_H

/* Generated by cbindgen from the graphlines-capi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes returned by every fallible call.
 */
typedef enum GlStatus {
  /*
   Success.
   */
  GL_STATUS_OK = 0,
  /*
   A required pointer argument was null.
   */
  GL_STATUS_NULL_ARGUMENT = 1,
  /*
   Input text was not valid UTF-8.
   */
  GL_STATUS_INVALID_UTF8 = 2,
  /*
   Malformed graph6 or edge input.
   */
  GL_STATUS_PARSE = 3,
  /*
   Operation precondition violated (bad vertex, too few vertices, ...).
   */
  GL_STATUS_DOMAIN = 4,
  /*
   Request exceeds a built-in bound (vertex cap, analysis bound).
   */
  GL_STATUS_CAPABILITY = 5,
  /*
   The provided buffer is too small; the needed size was written back.
   */
  GL_STATUS_BUFFER_TOO_SMALL = 6,
} GlStatus;

/*
 Opaque graph handle.
 */
typedef struct GlGraph GlGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Detail text for the most recent failure on this thread. The pointer stays
 valid until the next failing call on the same thread.
 */
const char *gl_last_error_message(void);

/*
 Short stable name of a status code.
 */
const char *gl_status_name(enum GlStatus status);

/*
 Parses one graph6 record into a new handle.

 # Safety
 `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum GlStatus gl_graph_parse_g6(const char *text, struct GlGraph **out);

/*
 Builds a graph from `num_edges` unordered pairs, flattened as
 `u0, v0, u1, v1, ...`.

 # Safety
 `endpoints` must point to `2 * num_edges` readable values (may be null
 when `num_edges` is zero) and `out` must be valid.
 */
enum GlStatus gl_graph_from_edges(uint32_t n,
                                  const uint32_t *endpoints,
                                  size_t num_edges,
                                  struct GlGraph **out);

/*
 Releases a handle. Null is a no-op.

 # Safety
 `g` must be a pointer previously returned by a constructor, or null.
 */
void gl_graph_free(struct GlGraph *g);

/*
 # Safety
 `g` must be a live handle.
 */
uint32_t gl_graph_vertex_count(const struct GlGraph *g);

/*
 # Safety
 `g` must be a live handle.
 */
uint32_t gl_graph_edge_count(const struct GlGraph *g);

/*
 # Safety
 `g` must be a live handle.
 */
bool gl_graph_is_connected(const struct GlGraph *g);

/*
 Writes the graph6 record of the graph. `needed` (optional) receives the
 required buffer size including the NUL byte.

 # Safety
 `g` must be a live handle; `buf` must point to `buf_len` writable bytes.
 */
enum GlStatus gl_graph_to_g6(const struct GlGraph *g, char *buf, size_t buf_len, size_t *needed);

/*
 Number of distinct lines (needs at least two vertices).

 # Safety
 `g` must be a live handle and `out` valid.
 */
enum GlStatus gl_graph_line_count(const struct GlGraph *g, uint32_t *out);

/*
 Number of bridges.

 # Safety
 `g` must be a live handle and `out` valid.
 */
enum GlStatus gl_graph_bridge_count(const struct GlGraph *g, uint32_t *out);

/*
 Number of vertex pairs inducing the universal line.

 # Safety
 `g` must be a live handle and `out` valid.
 */
enum GlStatus gl_graph_universal_pair_count(const struct GlGraph *g, uint32_t *out);

/*
 Writes the family label (`F:C4`, `F0:H5`, `B:B6a`, ... or `none`).

 # Safety
 `g` must be a live handle; `buf` must point to `buf_len` writable bytes.
 */
enum GlStatus gl_graph_family(const struct GlGraph *g, char *buf, size_t buf_len, size_t *needed);

/*
 Full analysis plus structure report as a JSON document in a freshly
 allocated string; release it with `gl_string_free`.

 # Safety
 `g` must be a live handle and `out` valid.
 */
enum GlStatus gl_graph_analyze_json(const struct GlGraph *g, char **out);

/*
 Releases a string returned by this library. Null is a no-op.

 # Safety
 `s` must originate from this library, or be null.
 */
void gl_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRAPHLINES_H */
