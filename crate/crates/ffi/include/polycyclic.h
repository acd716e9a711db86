#ifndef POLYCYCLIC_H
#define POLYCYCLIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Properties accepted by [`pc_check`].
 */
typedef enum PcProperty {
  PC_PROPERTY_GALE = 0,
  PC_PROPERTY_ORDINARY = 1,
  PC_PROPERTY_MULTIPLICIAL = 2,
  PC_PROPERTY_BRAXIAL = 3,
  PC_PROPERTY_MULTIPLEX = 4,
  PC_PROPERTY_BRAXTOPE = 5,
  PC_PROPERTY_NEIGHBOURLY = 6,
  PC_PROPERTY_SELF_DUAL = 7,
} PcProperty;

/**
 * Result codes. Predicates report their answer through a `bool`
 * out-parameter, so `Ok` means the question was decided.
 */
typedef enum PcStatus {
  PC_STATUS_OK = 0,
  PC_STATUS_NULL_POINTER = 1,
  PC_STATUS_INVALID_ARGUMENT = 2,
  PC_STATUS_INVALID_FACET_LIST = 3,
  PC_STATUS_NOT_A_POLYTOPE = 4,
  PC_STATUS_DEGENERATE = 5,
  PC_STATUS_PRECISION_AMBIGUOUS = 6,
  PC_STATUS_NON_VERTICES = 7,
  PC_STATUS_NOT_GALE = 8,
  PC_STATUS_NOT_PERIODICALLY_CYCLIC = 9,
  PC_STATUS_PATTERN_VIOLATION = 10,
  PC_STATUS_PARSE = 11,
  PC_STATUS_BUFFER_TOO_SMALL = 12,
  PC_STATUS_INTERNAL = 13,
} PcStatus;

/**
 * Opaque facet list.
 */
typedef struct PcFacetList PcFacetList;

/**
 * Opaque point configuration.
 */
typedef struct PcPoints PcPoints;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *pc_last_error_message(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void pc_string_free(char *s);

/**
 * # Safety
 * `fl` must be null or a handle from this library, freed at most once.
 */
void pc_facet_list_free(struct PcFacetList *fl);

/**
 * # Safety
 * `pc` must be null or a handle from this library, freed at most once.
 */
void pc_points_free(struct PcPoints *pc);

/**
 * Parses a facet list from JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum PcStatus pc_facet_list_from_json(const char *json, struct PcFacetList **out);

/**
 * Canonical JSON of a facet list.
 *
 * # Safety
 * `fl` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_facet_list_to_json(const struct PcFacetList *fl, char **out);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `fl` must be null or a live handle.
 */
size_t pc_facet_list_num_vertices(const struct PcFacetList *fl);

/**
 * Number of facets, or 0 for a null handle.
 *
 * # Safety
 * `fl` must be null or a live handle.
 */
size_t pc_facet_list_num_facets(const struct PcFacetList *fl);

/**
 * Dimension, or 0 for a null handle.
 *
 * # Safety
 * `fl` must be null or a live handle.
 */
size_t pc_facet_list_dim(const struct PcFacetList *fl);

/**
 * Cyclic polytope `C(n, d)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum PcStatus pc_cyclic(size_t n, size_t d, struct PcFacetList **out);

/**
 * Multiplex `M(n, d)` on `n + 1` vertices.
 *
 * # Safety
 * `out` must be writable.
 */
enum PcStatus pc_multiplex(size_t n, size_t d, struct PcFacetList **out);

/**
 * Braxtope on `v + 1` vertices in dimension `e`.
 *
 * # Safety
 * `out` must be writable.
 */
enum PcStatus pc_braxtope(size_t v, size_t e, struct PcFacetList **out);

/**
 * Tests a property under the index order. Ordinary, multiplicial and
 * braxial are checked on facets only unless `all_faces` is set.
 *
 * # Safety
 * `fl` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_check(const struct PcFacetList *fl,
                       enum PcProperty property,
                       bool all_faces,
                       bool *out);

/**
 * Writes `f_0, ..., f_{d-1}` into `buf` and `d` into `out_len`. Fails with
 * `BufferTooSmall` (after setting `out_len`) when `cap < d`.
 *
 * # Safety
 * `fl` must be a live handle; `buf` must hold `cap` values; `out_len` must
 * be writable.
 */
enum PcStatus pc_f_vector(const struct PcFacetList *fl, uint64_t *buf, size_t cap, size_t *out_len);

/**
 * Characteristic of the index order.
 *
 * # Safety
 * `fl` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_characteristic(const struct PcFacetList *fl, size_t *out);

/**
 * Whether the face lattices of `a` and `b` are isomorphic.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum PcStatus pc_is_isomorphic(const struct PcFacetList *a, const struct PcFacetList *b, bool *out);

/**
 * Parses a point configuration from JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum PcStatus pc_points_from_json(const char *json, struct PcPoints **out);

/**
 * JSON of a point configuration.
 *
 * # Safety
 * `pc` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_points_to_json(const struct PcPoints *pc, char **out);

/**
 * Exact moment-curve points at `t_i = num[i] / den[i]`.
 *
 * # Safety
 * `num` and `den` must hold `len` values; `out` must be writable.
 */
enum PcStatus pc_moment_points(const int64_t *num,
                               const int64_t *den,
                               size_t len,
                               size_t d,
                               struct PcPoints **out);

/**
 * Points on the trigonometric moment curve. `bits = 0` and `eps <= 0`
 * select the defaults (256 bits, 1e-30).
 *
 * # Safety
 * `out` must be writable.
 */
enum PcStatus pc_trig4_points(size_t n, uint32_t bits, double eps, struct PcPoints **out);

/**
 * The points of `B(p, q, n)`. `bits = 0` and `eps <= 0` select the defaults.
 *
 * # Safety
 * `out` must be writable.
 */
enum PcStatus pc_sigma_points(uint32_t p,
                              uint32_t q,
                              size_t n,
                              uint32_t bits,
                              double eps,
                              struct PcPoints **out);

/**
 * Facet list of the convex hull.
 *
 * # Safety
 * `pc` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_hull(const struct PcPoints *pc, struct PcFacetList **out);

/**
 * Whether the hull is combinatorially cyclic under some vertex array.
 *
 * # Safety
 * `pc` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_is_cyclic(const struct PcPoints *pc, bool *out);

/**
 * Period of a Gale configuration; `NotPeriodicallyCyclic` when there is none.
 *
 * # Safety
 * `pc` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_detect_period(const struct PcPoints *pc, size_t *out);

/**
 * JSON report on `B(p, q, n)`. `bits = 0` and `eps <= 0` select the defaults.
 *
 * # Safety
 * `out` must be writable.
 */
enum PcStatus pc_bicyclic_report_json(uint32_t p,
                                      uint32_t q,
                                      size_t n,
                                      uint32_t bits,
                                      double eps,
                                      char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* POLYCYCLIC_H */
