#ifndef TGCOLOR_H
#define TGCOLOR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TgStatus {
  TG_STATUS_OK = 0,
  TG_STATUS_NULL_POINTER = 1,
  TG_STATUS_PARSE = 2,
  TG_STATUS_INVALID = 3,
  TG_STATUS_BUDGET = 4,
  TG_STATUS_IO = 5,
  TG_STATUS_UTF8 = 6,
  TG_STATUS_PANIC = 7,
} TgStatus;

/**
 * Opaque temporal coloring.
 */
typedef struct TgColoring TgColoring;

/**
 * Opaque temporal graph.
 */
typedef struct TgGraph TgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until
 * the next call into this library on the same thread.
 */
const char *tg_last_error_message(void);

void tg_string_free(char *s);

/**
 * Parses `.tg` text into a new graph handle.
 */
enum TgStatus tg_graph_parse(const char *text_ptr, struct TgGraph **out);

void tg_graph_free(struct TgGraph *g);

/**
 * Canonical `.tg` text of the graph.
 */
enum TgStatus tg_graph_serialize(const struct TgGraph *g, char **out);

/**
 * Vertex count, or 0 for NULL.
 */
size_t tg_graph_vertex_count(const struct TgGraph *g);

/**
 * Lifetime T, or 0 for NULL.
 */
size_t tg_graph_lifetime(const struct TgGraph *g);

/**
 * Number of edges of the underlying graph, or 0 for NULL.
 */
size_t tg_graph_edge_count(const struct TgGraph *g);

/**
 * Decides the instance. `is_yes` receives 1 or 0. If `witness` is not
 * NULL it receives a new coloring handle on yes and NULL on no.
 */
enum TgStatus tg_solve(const struct TgGraph *g,
                       size_t delta,
                       uint32_t k,
                       int *is_yes,
                       struct TgColoring **witness);

/**
 * Smallest number of colors; optionally returns a witness.
 */
enum TgStatus tg_minimize(const struct TgGraph *g,
                          size_t delta,
                          uint32_t *k_out,
                          struct TgColoring **witness);

/**
 * Checks a coloring; `proper` receives 1 or 0. When `violation` is not
 * NULL and the coloring is not proper, it receives the message
 * `VIOLATION t=<t> edge=<u>,<v>` (caller frees).
 */
enum TgStatus tg_verify(const struct TgGraph *g,
                        size_t delta,
                        const struct TgColoring *col,
                        int *proper,
                        char **violation);

/**
 * Kernel for Δ = T as a new graph handle.
 */
enum TgStatus tg_kernelize(const struct TgGraph *g, struct TgGraph **out);

/**
 * Parses `.tc` text into a new coloring handle.
 */
enum TgStatus tg_coloring_parse(const char *text_ptr, struct TgColoring **out);

enum TgStatus tg_coloring_serialize(const struct TgColoring *c, char **out);

/**
 * Color of vertex `v` (0-based) at slot `t` (1-based).
 */
enum TgStatus tg_coloring_get(const struct TgColoring *c, size_t t, size_t v, uint32_t *color);

void tg_coloring_free(struct TgColoring *c);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TGCOLOR_H */
