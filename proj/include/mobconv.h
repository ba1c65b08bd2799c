/* Copyright 2026 The Authors.
 *
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

/* C interface of the mobconv library: exact convolution and reciprocity
 * identities on posets, hyperplane arrangements, and matroids.
 *
 * Every function returns MOBCONV_OK or an error code; on error, a message is
 * available from mobconv_last_error() until the next call on the same
 * thread. Strings returned through char** are heap-allocated; release them
 * with mobconv_string_free(). Handles are opaque and freed with their
 * matching *_free function.
 */

#ifndef MOBCONV_H
#define MOBCONV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define MOBCONV_OK 0
/* Semantically invalid input: axiom violations, duplicate hyperplanes,
 * bad argument values. */
#define MOBCONV_ERR_INVALID 1
/* Malformed input text (JSON syntax or types). */
#define MOBCONV_ERR_PARSE 2
/* A q-guard failed: q not an odd prime where required, scan too large, or
 * the intersection lattice does not survive reduction mod q. */
#define MOBCONV_ERR_GUARD 3
#define MOBCONV_ERR_INTERNAL 4

typedef struct mobconv_arrangement mobconv_arrangement;
typedef struct mobconv_matroid mobconv_matroid;
typedef struct mobconv_poset mobconv_poset;
typedef struct mobconv_report mobconv_report;

/* Message for the most recent failure on this thread. */
const char* mobconv_last_error(void);
void mobconv_string_free(char* s);

/* ---- arrangements: {"n": 2, "hyperplanes": [{"a": [1,0], "b": 0}, ...]} */
int mobconv_arrangement_from_json(const char* json_text, mobconv_arrangement** out);
void mobconv_arrangement_free(mobconv_arrangement* a);
int mobconv_arrangement_dimension(const mobconv_arrangement* a, int32_t* out);
/* Canonical string of the characteristic polynomial in the given variable
 * (e.g. "t^2 - 3*t + 3"). */
int mobconv_arrangement_charpoly(const mobconv_arrangement* a, const char* var,
                                 char** out);
/* Zaslavsky counts: regions and relatively bounded regions. */
int mobconv_arrangement_regions(const mobconv_arrangement* a, int64_t* regions,
                                int64_t* bounded);

/* ---- matroids: one of {"uniform": {"r": 1, "n": 2}},
 * {"graph": {"vertices": 3, "edges": [[0,1], ...]}},
 * {"linear": {"columns": [[1,0], ...]}},
 * {"rank_table": {"n": 2, "ranks": [0,1,1,1]}} */
int mobconv_matroid_from_json(const char* json_text, mobconv_matroid** out);
void mobconv_matroid_free(mobconv_matroid* m);
int mobconv_matroid_tutte(const mobconv_matroid* m, char** out);
int mobconv_matroid_subset_corank(const mobconv_matroid* m, char** out);

/* ---- posets: {"size": N, "relations": [[i, j], ...]} */
int mobconv_poset_from_json(const char* json_text, mobconv_poset** out);
void mobconv_poset_free(mobconv_poset* p);

/* ---- identity verification. Each call produces a report handle holding
 * one entry per identity instance, in canonical order. */
int mobconv_verify_conjugation(const mobconv_poset* p, uint64_t seed,
                               int32_t trials, mobconv_report** out);
int mobconv_verify_interval_convolution(const mobconv_arrangement* a,
                                        mobconv_report** out);
int mobconv_verify_region_convolution(const mobconv_arrangement* a,
                                      mobconv_report** out);
/* One entry per prime, sorted ascending. */
int mobconv_verify_finite_field(const mobconv_arrangement* a, const int64_t* qs,
                                size_t count, mobconv_report** out);
int mobconv_verify_reciprocity(const mobconv_arrangement* a, const int64_t* qs,
                               size_t count, int32_t workers,
                               mobconv_report** out);
int mobconv_verify_translation(const mobconv_arrangement* a, int32_t trials,
                               uint64_t seed, mobconv_report** out);
int mobconv_verify_krs(const mobconv_matroid* m, mobconv_report** out);
int mobconv_verify_kung1(const mobconv_matroid* m, mobconv_report** out);
int mobconv_verify_kung5(const mobconv_matroid* m, mobconv_report** out);

/* ---- report access */
int mobconv_report_count(const mobconv_report* r, size_t* out);
/* 1 when every entry passed, else 0. */
int mobconv_report_all_pass(const mobconv_report* r, int32_t* out);
int mobconv_report_entry_pass(const mobconv_report* r, size_t index, int32_t* out);
/* One JSON object per entry; schema-versioned, stable key order. */
int mobconv_report_entry_json(const mobconv_report* r, size_t index, char** out);
/* One-line text rendering of an entry. */
int mobconv_report_entry_text(const mobconv_report* r, size_t index, char** out);
void mobconv_report_free(mobconv_report* r);

#ifdef __cplusplus
}
#endif

#endif /* MOBCONV_H */
