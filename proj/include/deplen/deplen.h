/*
 * Copyright 2026 The deplen Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libdeplen: dependency length measurement, minimum linear
 * arrangement search, word-order prediction checks and report generation.
 *
 * Conventions:
 *  - Every fallible call returns dl_status. On failure a message for the
 *    calling thread is available from dl_last_error() until the next call.
 *  - Objects are opaque handles created by *_create / *_parse / *_load and
 *    released by the matching *_destroy. Destroying NULL is a no-op.
 *  - Tokens are numbered 1..n. A linearization is passed as `positions`,
 *    where positions[i] is the 1-based position of token i + 1; NULL means
 *    the tokens' own order.
 *  - Exact values are returned as dl_rational; DL_ERR_OVERFLOW is reported
 *    when a value does not fit in 64-bit numerator and denominator.
 */

#ifndef DEPLEN_DEPLEN_H_
#define DEPLEN_DEPLEN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(DEPLEN_BUILDING_LIBRARY)
#define DL_API __attribute__((visibility("default")))
#else
#define DL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dl_status {
  DL_OK = 0,
  DL_ERR_INVALID_ARGUMENT = 1,
  DL_ERR_PARSE = 2,
  DL_ERR_CYCLE = 3,
  DL_ERR_MULTI_ROOT = 4,
  DL_ERR_DISCONNECTED = 5,
  DL_ERR_UNKNOWN_EDGE = 6,
  DL_ERR_DOMAIN = 7,
  DL_ERR_NON_MONOTONE = 8,
  DL_ERR_SIZE_MISMATCH = 9,
  DL_ERR_TOO_LARGE = 10,
  DL_ERR_INFEASIBLE = 11,
  DL_ERR_EMPTY_CORPUS = 12,
  DL_ERR_RANGE = 13,
  DL_ERR_IO = 14,
  DL_ERR_OVERFLOW = 15,
  DL_ERR_INTERNAL = 16
} dl_status;

typedef enum dl_unit { DL_UNIT_WORDS = 0, DL_UNIT_CHARS = 1 } dl_unit;

typedef struct dl_rational {
  int64_t num;
  int64_t den;
} dl_rational;

typedef struct dl_tree dl_tree;
typedef struct dl_corpus dl_corpus;
typedef struct dl_cost dl_cost;
typedef struct dl_mla_result dl_mla_result;
typedef struct dl_report dl_report;

DL_API const char* dl_version(void);
DL_API const char* dl_status_name(dl_status status);
DL_API const char* dl_last_error(void);

/* ---- trees ------------------------------------------------------------ */

/* heads[i] is the head of token i + 1 (0 for the root). Pass either UTF-8
 * `forms` (char lengths are derived) or `char_lengths` for synthetic
 * tokens; if both are given they must agree. */
DL_API dl_status dl_tree_create(size_t n, const int* heads, const int* char_lengths,
                                const char* const* forms, dl_tree** out);
DL_API void dl_tree_destroy(dl_tree* tree);
DL_API size_t dl_tree_size(const dl_tree* tree);
DL_API int dl_tree_root(const dl_tree* tree);
/* 0 for the root, -1 if `token` is out of range. */
DL_API int dl_tree_head(const dl_tree* tree, int token);
DL_API int dl_tree_char_length(const dl_tree* tree, int token);

/* ---- CoNLL-U ---------------------------------------------------------- */

DL_API dl_status dl_corpus_parse(const char* text, size_t length, int drop_punctuation,
                                 dl_corpus** out);
DL_API dl_status dl_corpus_load(const char* path, int drop_punctuation, dl_corpus** out);
DL_API size_t dl_corpus_size(const dl_corpus* corpus);
/* Borrowed; valid while the corpus lives. NULL if out of range. */
DL_API const dl_tree* dl_corpus_tree(const dl_corpus* corpus, size_t index);
DL_API void dl_corpus_destroy(dl_corpus* corpus);

/* ---- cost functions --------------------------------------------------- */

/* "identity", "power:ALPHA", "log" or "table:PATH". */
DL_API dl_status dl_cost_create(const char* spec, int allow_nonmonotone, dl_cost** out);
DL_API dl_status dl_cost_eval(const dl_cost* cost, dl_rational d, dl_rational* out);
DL_API void dl_cost_destroy(dl_cost* cost);

/* ---- metrics ---------------------------------------------------------- */

DL_API dl_status dl_is_projective(const dl_tree* tree, const int* positions, int* out);
DL_API dl_status dl_edge_length(const dl_tree* tree, const int* positions, int head,
                                int dependent, dl_unit unit, dl_rational* out);
DL_API dl_status dl_sum_lengths(const dl_tree* tree, const int* positions, dl_unit unit,
                                dl_rational* out);
/* D = (n - 1) * sum_d p(d) g(d) and the edge-wise sum of g; both exact. */
DL_API dl_status dl_cost_d(const dl_tree* tree, const int* positions, const dl_cost* cost,
                           dl_unit unit, dl_rational* d_out, dl_rational* direct_out);

/* ---- minimum linear arrangement --------------------------------------- */

/* Exhaustive search (n <= 10). Optional constraints:
 *  - precede_pairs: pair_count pairs (a, b) flattened; a must precede b.
 *  - block_of: per token, a block number >= 0 or -1 for free tokens. Each
 *    block is contiguous and blocks appear in increasing number order.
 * `jobs` worker threads split the search (values < 1 mean 1). */
DL_API dl_status dl_mla_brute_force(const dl_tree* tree, dl_unit unit, const dl_cost* cost,
                                    const int* precede_pairs, size_t pair_count,
                                    const int* block_of, int jobs, dl_mla_result** out);
/* Minimum over projective orders; one representative for words/identity. */
DL_API dl_status dl_mla_projective(const dl_tree* tree, dl_unit unit, const dl_cost* cost,
                                   dl_mla_result** out);
DL_API dl_status dl_mla_min_cost(const dl_mla_result* result, dl_rational* out);
DL_API size_t dl_mla_optimal_count(const dl_mla_result* result);
DL_API uint64_t dl_mla_searched(const dl_mla_result* result);
/* Writes the tokens of the index-th optimum in position order. */
DL_API dl_status dl_mla_optimal_order(const dl_mla_result* result, size_t index,
                                      int* order_out, size_t capacity);
DL_API void dl_mla_destroy(dl_mla_result* result);

/* ---- pairing ---------------------------------------------------------- */

/* assignment_out[i] receives the g value paired with p[i]. */
DL_API dl_status dl_optimal_pairing(const dl_rational* p, const dl_rational* g, size_t m,
                                    dl_rational* assignment_out, dl_rational* total_out);
DL_API dl_status dl_verify_pairing(const dl_rational* p, const dl_rational* g, size_t m,
                                   int* optimal_out);

/* ---- reports ---------------------------------------------------------- */

typedef enum dl_command {
  DL_CMD_ANALYZE = 0,
  DL_CMD_OPTIMIZE = 1,
  DL_CMD_PREDICT = 2,
  DL_CMD_PAIR = 3,
  DL_CMD_CASESTUDY = 4
} dl_command;

typedef enum dl_format { DL_FORMAT_TABLE = 0, DL_FORMAT_JSON = 1, DL_FORMAT_CSV = 2 } dl_format;

typedef struct dl_run_config {
  dl_command command;
  const char* input_path;
  int unit; /* dl_unit, or -1 for the command's default */
  const char* g_spec;
  int allow_nonmonotone;
  int max_n;
  int exact;
  dl_format format;
  int jobs;
  uint64_t seed;
  int drop_punctuation;
  int pair_instances;
  const char* pair_p; /* comma-separated values, or NULL */
  const char* pair_g;
} dl_run_config;

DL_API void dl_run_config_init(dl_run_config* config);
DL_API dl_status dl_run(const dl_run_config* config, dl_report** out);
DL_API const char* dl_report_text(const dl_report* report);
/* JSON report of every scenario for DL_CMD_PREDICT, "" otherwise. */
DL_API const char* dl_report_json(const dl_report* report);
/* 0 when every asserted check holds, 1 otherwise. */
DL_API int dl_report_exit_code(const dl_report* report);
DL_API void dl_report_destroy(dl_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DEPLEN_DEPLEN_H_ */
