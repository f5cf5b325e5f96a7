/* Copyright (C) 2026 The zdspec Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef ZDSPEC_H
#define ZDSPEC_H

/* C interface to the zdspec library. Objects are opaque handles released
 * with the matching *_free / *_close call. Every function that can fail
 * returns a zds_status; on failure zds_last_error() describes the problem
 * for the calling thread. Strings returned through char** are allocated by
 * the library and released with zds_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(ZDSPEC_BUILDING_LIBRARY)
#define ZDS_API __attribute__((visibility("default")))
#else
#define ZDS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zds_status {
  ZDS_OK = 0,
  ZDS_INVALID_ARGUMENT = 1,
  ZDS_NOT_PRIME = 2,
  ZDS_NOT_IRREDUCIBLE = 3,
  ZDS_SIZE_BOUND = 4,
  ZDS_CHARACTERISTIC = 5,
  ZDS_HYPOTHESIS = 6,
  ZDS_FIELD_MISMATCH = 7,
  ZDS_DIVISION_BY_ZERO = 8,
  ZDS_IO = 9,
  ZDS_INTERNAL = 10
} zds_status;

typedef struct zds_field zds_field;
typedef struct zds_table zds_table;
typedef struct zds_report zds_report;
typedef struct zds_survey zds_survey;

ZDS_API const char* zds_last_error(void);
ZDS_API const char* zds_status_name(zds_status s);
ZDS_API void zds_string_free(char* s);

/* Fields */

/* Smallest monic irreducible of degree n over F_p; coefficients constant
 * term first, n + 1 entries written to out. */
ZDS_API zds_status zds_find_irreducible(uint32_t p, uint32_t n, uint32_t* out, size_t out_len);

#define ZDS_FIELD_PERSIST 1u

/* Opens F_{p^n}. modulus (n + 1 coefficients, constant term first) may be
 * NULL, in which case the cache at cache_path is consulted before the
 * canonical search. cache_path may be NULL or empty. With ZDS_FIELD_PERSIST
 * a searched modulus is appended to the cache. order_bound 0 means the
 * library default. */
ZDS_API zds_status zds_field_open(uint32_t p, uint32_t n, const uint32_t* modulus, const char* cache_path,
                                  uint64_t order_bound, unsigned flags, zds_field** out);
ZDS_API void zds_field_close(zds_field* f);
ZDS_API uint32_t zds_field_p(const zds_field* f);
ZDS_API uint32_t zds_field_n(const zds_field* f);
ZDS_API uint64_t zds_field_order(const zds_field* f);
/* Writes n + 1 coefficients. */
ZDS_API zds_status zds_field_modulus(const zds_field* f, uint32_t* out, size_t out_len);
ZDS_API zds_status zds_field_describe_json(const zds_field* f, char** out);

/* Tables of x^d */

typedef enum zds_table_kind { ZDS_TABLE_DDT = 0, ZDS_TABLE_FBCT = 1, ZDS_TABLE_SOZD = 2 } zds_table_kind;

ZDS_API zds_status zds_parse_table_kind(const char* s, zds_table_kind* out);
ZDS_API zds_status zds_table_compute(const zds_field* f, zds_table_kind kind, uint64_t d, unsigned threads,
                                     zds_table** out);
ZDS_API void zds_table_free(zds_table* t);
ZDS_API uint64_t zds_table_dim(const zds_table* t);
ZDS_API uint64_t zds_table_entry(const zds_table* t, uint64_t a, uint64_t b);
ZDS_API zds_status zds_table_csv(const zds_table* t, char** out);
/* Histogram and uniformity over the kind's admissible set. */
ZDS_API zds_status zds_table_summary_json(const zds_table* t, char** out);
/* FBCT property suite; ZDS_CHARACTERISTIC unless the table is an FBCT. */
ZDS_API zds_status zds_table_properties_json(const zds_table* t, char** out);
ZDS_API zds_status zds_table_properties_passed(const zds_table* t, int* passed);

/* Closed-form verification */

typedef struct zds_verify_options {
  unsigned threads;
  uint64_t full_evaluation_limit;
  int force_full;
  uint64_t samples;
  uint64_t seed;
} zds_verify_options;

ZDS_API void zds_verify_options_init(zds_verify_options* o);
/* theorem: "3.1", "3.2", "4.1", "4.2", "x7-bound" or an alias. */
ZDS_API zds_status zds_verify(const zds_field* f, const char* theorem, const zds_verify_options* o,
                              zds_report** out);
ZDS_API void zds_report_free(zds_report* r);
ZDS_API int zds_report_passed(const zds_report* r);
ZDS_API uint64_t zds_report_uniformity(const zds_report* r);
ZDS_API uint64_t zds_report_mismatch_count(const zds_report* r);
ZDS_API uint64_t zds_report_unpredicted_count(const zds_report* r);
ZDS_API uint64_t zds_report_case_count(const zds_report* r, const char* case_label);
ZDS_API zds_status zds_report_json(const zds_report* r, char** out);
/* Evaluation count a full check of the theorem on (p, n) would need. */
ZDS_API uint64_t zds_verify_cost(uint32_t p, uint32_t n);

/* Survey of published power maps */

/* Runs the default instances of the listed rows (all rows when count is 0).
 * eval_limit 0 means the library default. */
ZDS_API zds_status zds_survey_run(const char* const* row_ids, size_t count, uint64_t eval_limit, unsigned threads,
                                  const char* cache_path, zds_survey** out);
/* Runs a single explicit instance of one row. */
ZDS_API zds_status zds_survey_run_instance(const char* row_id, uint32_t p, uint32_t n, uint32_t param,
                                           uint64_t eval_limit, unsigned threads, const char* cache_path,
                                           zds_survey** out);
ZDS_API void zds_survey_free(zds_survey* s);
ZDS_API size_t zds_survey_size(const zds_survey* s);
/* Observed uniformity of row i; returns 0 and sets *have to 0 when skipped. */
ZDS_API uint64_t zds_survey_observed(const zds_survey* s, size_t i, int* have);
ZDS_API int zds_survey_row_matched(const zds_survey* s, size_t i);
ZDS_API int zds_survey_all_matched(const zds_survey* s);
ZDS_API size_t zds_survey_mismatch_count(const zds_survey* s);
ZDS_API zds_status zds_survey_json(const zds_survey* s, char** out);
ZDS_API zds_status zds_survey_csv(const zds_survey* s, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ZDSPEC_H */
