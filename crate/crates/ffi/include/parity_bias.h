#ifndef PARITY_BIAS_H
#define PARITY_BIAS_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum PbBias {
  PB_BIAS_ODD_HEAVY = 0,
  PB_BIAS_EVEN_HEAVY = 1,
  PB_BIAS_BALANCED = 2,
} PbBias;

typedef enum PbFamily {
  PB_FAMILY_T1 = 1,
  PB_FAMILY_T2 = 2,
  PB_FAMILY_T3 = 3,
  PB_FAMILY_T4 = 4,
} PbFamily;

typedef enum PbLemma {
  PB_LEMMA_L1 = 1,
  PB_LEMMA_L2 = 2,
} PbLemma;

typedef enum PbStatus {
  PB_STATUS_OK = 0,
  PB_STATUS_NULL_POINTER = 1,
  PB_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The input lies outside the domain of the requested map or lemma.
   */
  PB_STATUS_DOMAIN_VIOLATION = 3,
  /**
   * The input is in the domain but no rule of the map produced an image.
   */
  PB_STATUS_UNMAPPED = 4,
  /**
   * The value does not fit in the requested integer type.
   */
  PB_STATUS_OVERFLOW = 5,
  PB_STATUS_BUFFER_TOO_SMALL = 6,
  PB_STATUS_INTERNAL = 7,
} PbStatus;

typedef struct PbAuditReport PbAuditReport;

/**
 * Bias counts for one class, rows 0..=n_max.
 */
typedef struct PbCountTable PbCountTable;

/**
 * A partition, parts in non-increasing order.
 */
typedef struct PbPartition PbPartition;

typedef struct PbAuditSummary {
  uint32_t n;
  uint64_t domain_size;
  uint64_t image_size;
  uint64_t residual_count;
  uint64_t expected_residual;
  uint64_t collisions;
  uint64_t violations;
  bool clean;
} PbAuditSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or an empty string.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *pb_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *pb_version(void);

/**
 * Builds a partition from `len` positive parts in any order.
 *
 * # Safety
 * `parts` must point to `len` readable `u32` values (it may be null when
 * `len` is 0). `out` must be a valid pointer to write the handle to.
 */
enum PbStatus pb_partition_new(const uint32_t *parts, size_t len, struct PbPartition **out);

/**
 * # Safety
 * `p` must be null or a handle from this library that has not been freed.
 */
void pb_partition_free(struct PbPartition *p);

/**
 * # Safety
 * `p` must be a live partition handle and `out` a valid pointer.
 */
enum PbStatus pb_partition_weight(const struct PbPartition *p, uint32_t *out);

/**
 * # Safety
 * `p` must be a live partition handle and `out` a valid pointer.
 */
enum PbStatus pb_partition_len(const struct PbPartition *p, size_t *out);

/**
 * Copies the parts, largest first, into `buf`. `written` receives the
 * number of parts; when `cap` is too small nothing is copied, `written`
 * holds the required length and `BufferTooSmall` is returned.
 *
 * # Safety
 * `p` must be a live partition handle, `buf` must have room for `cap`
 * values (null allowed when `cap` is 0), `written` must be valid.
 */
enum PbStatus pb_partition_parts(const struct PbPartition *p,
                                 uint32_t *buf,
                                 size_t cap,
                                 size_t *written);

/**
 * Counts rows 0..=n_max for a class name such as `P`, `DQ`, `Pm3` or `P{1,2}`.
 *
 * # Safety
 * `class_name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PbStatus pb_count_table_dp(const char *class_name, uint32_t n_max, struct PbCountTable **out);

/**
 * # Safety
 * `t` must be null or a handle from this library that has not been freed.
 */
void pb_count_table_free(struct PbCountTable *t);

/**
 * # Safety
 * `t` must be a live table handle and `out` a valid pointer.
 */
enum PbStatus pb_count_table_n_max(const struct PbCountTable *t, uint32_t *out);

/**
 * One count as `u64`; `Overflow` when it does not fit.
 *
 * # Safety
 * `t` must be a live table handle and `out` a valid pointer.
 */
enum PbStatus pb_count_table_get_u64(const struct PbCountTable *t,
                                     uint32_t n,
                                     enum PbBias bias,
                                     uint64_t *out);

/**
 * One count as a decimal string, released with [`pb_string_free`].
 *
 * # Safety
 * `t` must be a live table handle and `out` a valid pointer.
 */
enum PbStatus pb_count_table_get_string(const struct PbCountTable *t,
                                        uint32_t n,
                                        enum PbBias bias,
                                        char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library that has not been freed.
 */
void pb_string_free(char *s);

/**
 * Applies a family's proof map without repair. On `Ok`, `*out` is the image,
 * or null when the source is left to a counting argument.
 *
 * # Safety
 * `src` must be a live partition handle and `out` a valid pointer.
 */
enum PbStatus pb_map_apply(enum PbFamily family,
                           const struct PbPartition *src,
                           struct PbPartition **out);

/**
 * Exhaustive audit of a family at `n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PbStatus pb_audit(enum PbFamily family, uint32_t n, struct PbAuditReport **out);

/**
 * # Safety
 * `r` must be a live report handle and `out` a valid pointer.
 */
enum PbStatus pb_audit_summary(const struct PbAuditReport *r, struct PbAuditSummary *out);

/**
 * The two sources and the shared image of collision `i`, as new handles.
 *
 * # Safety
 * `r` must be a live report handle; the three out pointers must be valid.
 */
enum PbStatus pb_audit_collision(const struct PbAuditReport *r,
                                 size_t i,
                                 struct PbPartition **first,
                                 struct PbPartition **second,
                                 struct PbPartition **image);

/**
 * # Safety
 * `r` must be null or a handle from this library that has not been freed.
 */
void pb_audit_free(struct PbAuditReport *r);

/**
 * Evaluates a floor-sum lemma at `n`. `DomainViolation` for wrong parity or
 * n below the lemma's range.
 *
 * # Safety
 * `holds` must be a valid pointer; `lhs` and `rhs` may be null.
 */
enum PbStatus pb_verify_lemma(enum PbLemma lemma,
                              uint32_t n,
                              bool *holds,
                              int64_t *lhs,
                              int64_t *rhs);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARITY_BIAS_H */
