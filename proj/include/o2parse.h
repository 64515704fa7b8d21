/* C interface to the O2 membership checker and parser.
 *
 * All functions return a status code (O2P_OK on success) unless noted.
 * Strings returned through out parameters are heap-allocated and must be
 * released with o2p_free(); trees with o2p_tree_free(). A human-readable
 * message for the most recent failure on the calling thread is available
 * via o2p_error_message().
 */
#ifndef O2PARSE_H
#define O2PARSE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct o2p_tree o2p_tree;

enum o2p_status {
  O2P_OK = 0,
  O2P_NOT_BALANCED = 1,  /* word outside O_n */
  O2P_TOO_SHORT = 2,
  O2P_SYNTAX = 3,        /* malformed word or serialized tree */
  O2P_VERIFY_FAILED = 4, /* derivation rejected by the grammar checker */
  O2P_INVALID_ARG = 5,
  O2P_INTERNAL = 6       /* completeness violation: an implementation bug */
};

const char *o2p_status_name(int status);
const char *o2p_error_message(void);
void o2p_free(char *s);

/* Membership in O_n: sets *balanced to 1 or 0. */
int o2p_check(const char *word, int n, int *balanced);

/* Writes the n balance deltas into deltas[0..n-1]. */
int o2p_balance(const char *word, int n, long long *deltas);

/* Newline-separated "direction:[start,end]" lines, one per bump. */
int o2p_bumps(const char *word, int n, char **out);

/* strategy: "guided" or "search". */
int o2p_parse(const char *word, const char *strategy, o2p_tree **out);

/* format: "json" or "sexp". */
int o2p_tree_serialize(const o2p_tree *t, const char *format, char **out);
int o2p_tree_deserialize(const char *text, const char *format, o2p_tree **out);

/* Re-checks the tree against the grammar; expect_word may be NULL or the
 * word the tree's yield must equal. */
int o2p_tree_verify(const o2p_tree *t, const char *expect_word);
int o2p_tree_yield(const o2p_tree *t, char **out);
void o2p_tree_free(o2p_tree *t);

/* count uniformly sampled O2 words of the given even length, one per
 * line, deterministic per seed. */
int o2p_gen(unsigned long length, unsigned long count, unsigned long long seed,
            char **out);

/* Differential fuzz pass; on failure returns O2P_VERIFY_FAILED and *report
 * holds the shortest failing word plus a description. On success *report
 * holds a one-line summary. */
int o2p_fuzz(unsigned long max_len, unsigned long count, unsigned long long seed,
             char **report);

#ifdef __cplusplus
}
#endif

#endif
