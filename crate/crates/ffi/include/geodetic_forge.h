#ifndef GEODETIC_FORGE_H
#define GEODETIC_FORGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GfStatus {
  GF_STATUS_OK = 0,
  GF_STATUS_NULL_ARGUMENT = 1,
  GF_STATUS_INVALID_UTF8 = 2,
  GF_STATUS_PARSE = 3,
  GF_STATUS_INVALID_GROUP = 4,
  GF_STATUS_INVALID_SYSTEM = 5,
  GF_STATUS_CAP_EXCEEDED = 6,
  GF_STATUS_IO = 7,
  GF_STATUS_PANIC = 8,
} GfStatus;

/**
 * A finite group together with a generating set.
 */
typedef struct GfGroup GfGroup;

typedef struct GfSystem GfSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library on the same thread.
 */
const char *gf_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void gf_string_free(char *s);

/**
 * Loads a group from a source string (`cyclic:<m>`, `klein`, `s3`, or a
 * JSON file path). The generating set is the file's, or every non-identity
 * element.
 */
enum GfStatus gf_group_load(const char *source, struct GfGroup **group);

/**
 * Replaces the generating set with `len` element indices.
 *
 * # Safety
 * `elements` must point to `len` readable values.
 */
enum GfStatus gf_group_set_generators(struct GfGroup *group, const size_t *elements, size_t len);

/**
 * # Safety
 * `group` must come from [`gf_group_load`] and not have been freed.
 */
void gf_group_free(struct GfGroup *group);

enum GfStatus gf_group_order(const struct GfGroup *group, size_t *order);

/**
 * Whether the Cayley graph has unique shortest paths.
 */
enum GfStatus gf_group_is_geodetic(const struct GfGroup *group, bool *geodetic);

/**
 * Builds the rewriting system of the n-fold subdivision.
 */
enum GfStatus gf_nabla(const struct GfGroup *group, size_t n, struct GfSystem **system);

/**
 * Geodeticity check report as JSON.
 */
enum GfStatus gf_verify_geodeticity(const struct GfGroup *group, size_t n, char **json);

/**
 * Parses a system from its JSON form or from `LHS -> RHS` lines.
 */
enum GfStatus gf_system_parse(const char *source, struct GfSystem **system);

/**
 * # Safety
 * `system` must come from this library and not have been freed.
 */
void gf_system_free(struct GfSystem *system);

enum GfStatus gf_system_letter_count(const struct GfSystem *system, size_t *count);

enum GfStatus gf_system_rule_count(const struct GfSystem *system, size_t *count);

enum GfStatus gf_system_is_length_reducing(const struct GfSystem *system, bool *reducing);

/**
 * Leftmost normal form of a space-separated word; `_` is the empty word.
 */
enum GfStatus gf_system_normal_form(const struct GfSystem *system,
                                    const char *word,
                                    char **normal_form);

/**
 * The system as JSON: alphabet, involution and rules.
 */
enum GfStatus gf_system_to_json(const struct GfSystem *system, char **json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GEODETIC_FORGE_H */
