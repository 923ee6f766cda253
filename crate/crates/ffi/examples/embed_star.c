/* Embeds the star K_{1,5} and prints its coordinates and JSON form. */
#include <stdio.h>
#include "treedim.h"

static int check(TdStatus s, const char *what) {
    if (s != TD_STATUS_OK) {
        const char *msg = td_last_error_message();
        fprintf(stderr, "%s: %s: %s\n", what, td_status_name(s), msg ? msg : "");
        return 1;
    }
    return 0;
}

int main(void) {
    TdTree *tree = NULL;
    TdEmbedding *raw = NULL, *emb = NULL;
    char *json = NULL;
    int rc = 1;

    if (check(td_tree_parse("0 1\n0 2\n0 3\n0 4\n0 5\n", &tree), "parse")) goto out;
    if (check(td_embed_tree(tree, &raw), "embed")) goto out;
    if (check(td_embedding_normalize(raw, &emb), "normalize")) goto out;

    size_t d = td_embedding_dimension(emb);
    printf("leaves %zu, dimension %zu\n", td_tree_leaf_count(tree), d);
    for (uint64_t v = 0; v < td_tree_vertex_count(tree); v++) {
        int64_t coords[8];
        if (check(td_embedding_coords(emb, v, coords, 8), "coords")) goto out;
        printf("%llu:", (unsigned long long)v);
        for (size_t k = 0; k < d; k++) printf(" %lld", (long long)coords[k]);
        printf("\n");
    }

    bool passed = false;
    uint64_t pairs = 0;
    if (check(td_verify_isometric(tree, emb, &passed, &pairs), "verify")) goto out;
    printf("isometric %s over %llu pairs\n", passed ? "yes" : "no", (unsigned long long)pairs);

    if (check(td_embedding_to_json(emb, &json), "json")) goto out;
    printf("%s\n", json);
    rc = passed ? 0 : 1;
out:
    td_string_free(json);
    td_embedding_free(emb);
    td_embedding_free(raw);
    td_tree_free(tree);
    return rc;
}
