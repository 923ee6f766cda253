#ifndef TREEDIM_H
#define TREEDIM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TdStatus {
  TD_STATUS_OK = 0,
  TD_STATUS_NULL_POINTER = 1,
  TD_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed edge list, cycle, disconnected input and the like.
   */
  TD_STATUS_PARSE = 3,
  TD_STATUS_INVALID_ARGUMENT = 4,
  /**
   * Vertex not present in the embedding.
   */
  TD_STATUS_UNKNOWN_VERTEX = 5,
  TD_STATUS_BUFFER_TOO_SMALL = 6,
  /**
   * Exhaustive search refused: too many vertices.
   */
  TD_STATUS_TOO_LARGE = 7,
  /**
   * Exhaustive search found nothing within the given dimension.
   */
  TD_STATUS_NOT_FOUND = 8,
  /**
   * Tree and embedding don't match.
   */
  TD_STATUS_MISMATCH = 9,
  TD_STATUS_INTERNAL = 10,
  TD_STATUS_PANIC = 11,
} TdStatus;

/**
 * Opaque embedding handle.
 */
typedef struct TdEmbedding TdEmbedding;

/**
 * Opaque tree handle.
 */
typedef struct TdTree TdTree;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *td_last_error_message(void);

/**
 * Static description of a status code.
 */
const char *td_status_name(enum TdStatus status);

/**
 * Parses a NUL-terminated edge list.
 */
enum TdStatus td_tree_parse(const char *text, struct TdTree **out);

/**
 * Uniformly random labeled tree on `0..vertices`, reproducible from `seed`.
 */
enum TdStatus td_tree_random(size_t vertices, uint64_t seed, struct TdTree **out);

void td_tree_free(struct TdTree *tree);

/**
 * Returns 0 for NULL.
 */
size_t td_tree_vertex_count(const struct TdTree *tree);

/**
 * Returns 0 for NULL.
 */
size_t td_tree_leaf_count(const struct TdTree *tree);

/**
 * ceil(leaves / 2); 0 for NULL.
 */
size_t td_tree_lattice_dimension(const struct TdTree *tree);

enum TdStatus td_embed_tree(const struct TdTree *tree, struct TdEmbedding **out);

void td_embedding_free(struct TdEmbedding *embedding);

/**
 * Returns 0 for NULL.
 */
size_t td_embedding_dimension(const struct TdEmbedding *embedding);

/**
 * New embedding translated so every axis starts at 0.
 */
enum TdStatus td_embedding_normalize(const struct TdEmbedding *embedding, struct TdEmbedding **out);

/**
 * Writes the coordinates of `vertex` into `buf`, which must hold at least
 * `td_embedding_dimension` values.
 */
enum TdStatus td_embedding_coords(const struct TdEmbedding *embedding,
                                  uint64_t vertex,
                                  int64_t *buf,
                                  size_t len);

/**
 * Checks all pairs. `passed` and `checked_pairs` may each be NULL.
 */
enum TdStatus td_verify_isometric(const struct TdTree *tree,
                                  const struct TdEmbedding *embedding,
                                  bool *passed,
                                  uint64_t *checked_pairs);

/**
 * JSON document for the embedding. Release with `td_string_free`.
 */
enum TdStatus td_embedding_to_json(const struct TdEmbedding *embedding, char **out);

void td_string_free(char *s);

/**
 * Smallest dimension admitting an isometric embedding, by exhaustive
 * search up to `max_dim`. Only for small trees.
 */
enum TdStatus td_brute_force_min_dimension(const struct TdTree *tree, size_t max_dim, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TREEDIM_H */
