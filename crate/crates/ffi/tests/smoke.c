#include <stdio.h>
#include <string.h>
#include "parity_bias.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "line %d: %s\n", __LINE__, pb_last_error()); return 1; } } while (0)

int main(void) {
    uint32_t raw[] = {2, 5, 24};
    PbPartition *src = NULL, *img = NULL;
    CHECK(pb_partition_new(raw, 3, &src) == PB_STATUS_OK);
    CHECK(pb_map_apply(PB_FAMILY_T2, src, &img) == PB_STATUS_OK && img != NULL);
    uint32_t parts[8];
    size_t len = 0;
    CHECK(pb_partition_parts(img, parts, 8, &len) == PB_STATUS_OK);
    CHECK(len == 4 && parts[0] == 13 && parts[1] == 11 && parts[2] == 6 && parts[3] == 1);
    CHECK(pb_partition_parts(img, parts, 2, &len) == PB_STATUS_BUFFER_TOO_SMALL && len == 4);
    pb_partition_free(img);
    pb_partition_free(src);

    PbCountTable *t = NULL;
    CHECK(pb_count_table_dp("P", 420, &t) == PB_STATUS_OK);
    uint64_t v = 0;
    CHECK(pb_count_table_get_u64(t, 8, PB_BIAS_ODD_HEAVY, &v) == PB_STATUS_OK);
    char *s = NULL;
    CHECK(pb_count_table_get_string(t, 420, PB_BIAS_ODD_HEAVY, &s) == PB_STATUS_OK);
    CHECK(strcmp(s, "15779334445278646049") == 0);
    pb_string_free(s);
    pb_count_table_free(t);

    PbAuditReport *r = NULL;
    PbAuditSummary sum;
    CHECK(pb_audit(PB_FAMILY_T1, 9, &r) == PB_STATUS_OK);
    CHECK(pb_audit_summary(r, &sum) == PB_STATUS_OK && sum.clean && sum.collisions == 0);
    pb_audit_free(r);

    bool holds = false;
    int64_t lhs = 0, rhs = 0;
    CHECK(pb_verify_lemma(PB_LEMMA_L1, 14, &holds, &lhs, &rhs) == PB_STATUS_OK && holds && lhs == 6 && rhs == 5);
    CHECK(pb_verify_lemma(PB_LEMMA_L1, 13, &holds, NULL, NULL) == PB_STATUS_DOMAIN_VIOLATION);
    CHECK(strlen(pb_last_error()) > 0);
    printf("ok %s\n", pb_version());
    return 0;
}
