/* Minimal C consumer. Build from the workspace root with:
 *
 *   cargo build -p invseq-capi --release
 *   cc -Icrates/invseq-capi/include crates/invseq-capi/examples/demo.c \
 *      target/release/libinvseq_capi.a -lpthread -ldl -lm -o demo
 */
#include <assert.h>
#include <stdio.h>

#include "invseq.h"

int main(void) {
    uint64_t entries[] = {0, 0, 0, 0, 3, 3, 0, 3, 3, 3, 4, 6};
    InvseqSeq *seq = NULL;
    assert(invseq_seq_new(entries, 12, &seq) == InvseqStatus_Ok);

    InvseqSeq *image = NULL;
    if (invseq_map_seq("gamma", seq, &image) != InvseqStatus_Ok) {
        fprintf(stderr, "gamma failed: %s\n", invseq_last_error());
        return 1;
    }
    uint64_t buf[12];
    assert(invseq_seq_values(image, buf, 12) == InvseqStatus_Ok);
    printf("gamma image:");
    for (int i = 0; i < 12; i++)
        printf(" %llu", (unsigned long long)buf[i]);
    printf("\n");

    InvseqClass *cls = NULL;
    assert(invseq_class_parse("C", &cls) == InvseqStatus_Ok);
    for (size_t n = 1; n <= 8; n++) {
        uint64_t count = 0;
        assert(invseq_count(cls, n, &count) == InvseqStatus_Ok);
        printf("n=%zu count=%llu\n", n, (unsigned long long)count);
    }

    char *profile = invseq_profile_json(seq);
    assert(profile != NULL);
    printf("profile: %s\n", profile);

    invseq_string_free(profile);
    invseq_class_free(cls);
    invseq_seq_free(image);
    invseq_seq_free(seq);
    return 0;
}
