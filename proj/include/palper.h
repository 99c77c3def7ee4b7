#ifndef PALPER_H
#define PALPER_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    PALPER_OK = 0,
    PALPER_ERR_INVALID = 1,
    PALPER_ERR_PARSE = 2,
    PALPER_ERR_INTERNAL = 3
} palper_status;

/* Opaque word handle. */
typedef struct palper_word palper_word;

/* Message for the last error on this thread; empty string if none. */
const char* palper_last_error(void);
/* Frees any char* returned by this library. */
void palper_string_free(char* s);

/* Accepts "abc..." (lowercase letters) or "i:3,0,1,2" (integer letters). */
palper_status palper_word_parse(const char* text, palper_word** out);
void palper_word_free(palper_word* w);
palper_status palper_word_render(const palper_word* w, char** out);
/* name: thue-morse | fibonacci | kolakoski */
palper_status palper_famous_word(const char* name, int n, palper_word** out);

/* Maximal palindromic periodicities; NDJSON, one occurrence per line. */
palper_status palper_detect(const palper_word* w, char** out_ndjson);
/* All (offset, half-period) parameterizations of the whole word; NDJSON. */
palper_status palper_params(const palper_word* w, char** out_ndjson);
/* theorem: periodic-palindrome | reverse-prefixes | crossing | nested-crossing
 * | chained | palindromic-border.  args_json carries the hypothesis data. */
palper_status palper_construct(const char* theorem, const char* args_json, char** out_json);
/* g-word parameter analysis; r, c, h as doubled integers. */
palper_status palper_gword(int doubled_r, int doubled_c, int doubled_h, char** out_json);
/* Builds the double-palindromic-periodicity period table. */
palper_status palper_table(int h1, int h2, int same_parity, int len_max, int len_min,
                           int threads, int as_tsv, char** out);
/* PALPER_OK on exact match; PALPER_ERR_INVALID with a report otherwise. */
palper_status palper_table_diff(int h1, int h2, int same_parity, int len_max, int len_min,
                                int threads, const char* expected_tsv, char** report);
/* Census over a famous word; NDJSON, one record per prefix length. */
palper_status palper_census(const char* famous, int n, int stride, int threads,
                            char** out_ndjson);
/* Runs one exhaustive property suite ("all" runs every suite); JSON result. */
palper_status palper_verify(const char* suite, int budget, int threads, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* PALPER_H */
