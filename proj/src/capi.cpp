// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mobconv.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "mobconv/arrangement.hpp"
#include "mobconv/errors.hpp"
#include "mobconv/finite_field.hpp"
#include "mobconv/matroid.hpp"
#include "mobconv/poset.hpp"
#include "mobconv/random.hpp"

struct mobconv_arrangement {
  mobconv::Arrangement value;
};
struct mobconv_matroid {
  mobconv::Matroid value;
};
struct mobconv_poset {
  mobconv::Poset value;
};
struct mobconv_report {
  std::vector<mobconv::VerificationReport> entries;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
int guarded(F&& body) {
  try {
    body();
    return MOBCONV_OK;
  } catch (const mobconv::ParseError& e) {
    g_last_error = e.what();
    return MOBCONV_ERR_PARSE;
  } catch (const mobconv::GuardError& e) {
    g_last_error = e.what();
    return MOBCONV_ERR_GUARD;
  } catch (const mobconv::ValidationError& e) {
    g_last_error = e.what();
    return MOBCONV_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MOBCONV_ERR_INTERNAL;
  }
}

int invalid_argument(const char* what) {
  g_last_error = what;
  return MOBCONV_ERR_INVALID;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int64_t to_count(const mobconv::Integer& v) {
  if (!mobconv::fits_longlong(v)) {
    throw mobconv::ValidationError("count does not fit in 64 bits");
  }
  return mobconv::to_longlong(v);
}

std::vector<long long> sorted_primes(const int64_t* qs, size_t count) {
  if (qs == nullptr || count == 0) {
    throw mobconv::ValidationError("at least one q value is required");
  }
  std::vector<long long> out(qs, qs + count);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

extern "C" {

const char* mobconv_last_error(void) { return g_last_error.c_str(); }

void mobconv_string_free(char* s) { std::free(s); }

int mobconv_arrangement_from_json(const char* json_text, mobconv_arrangement** out) {
  if (!json_text || !out) return invalid_argument("null argument");
  return guarded([&] {
    *out = new mobconv_arrangement{mobconv::Arrangement::from_json_text(json_text)};
  });
}

void mobconv_arrangement_free(mobconv_arrangement* a) { delete a; }

int mobconv_arrangement_dimension(const mobconv_arrangement* a, int32_t* out) {
  if (!a || !out) return invalid_argument("null argument");
  *out = a->value.dimension();
  return MOBCONV_OK;
}

int mobconv_arrangement_charpoly(const mobconv_arrangement* a, const char* var,
                                 char** out) {
  if (!a || !var || !out) return invalid_argument("null argument");
  return guarded([&] { *out = dup_string(mobconv::char_poly(a->value, var).str()); });
}

int mobconv_arrangement_regions(const mobconv_arrangement* a, int64_t* regions,
                                int64_t* bounded) {
  if (!a || !regions || !bounded) return invalid_argument("null argument");
  return guarded([&] {
    mobconv::IntersectionLattice lattice(a->value);
    *regions = to_count(mobconv::region_count(lattice));
    *bounded = to_count(mobconv::bounded_region_count(lattice));
  });
}

int mobconv_matroid_from_json(const char* json_text, mobconv_matroid** out) {
  if (!json_text || !out) return invalid_argument("null argument");
  return guarded([&] {
    *out = new mobconv_matroid{mobconv::Matroid::from_json_text(json_text)};
  });
}

void mobconv_matroid_free(mobconv_matroid* m) { delete m; }

int mobconv_matroid_tutte(const mobconv_matroid* m, char** out) {
  if (!m || !out) return invalid_argument("null argument");
  return guarded([&] { *out = dup_string(mobconv::tutte_poly(m->value).str()); });
}

int mobconv_matroid_subset_corank(const mobconv_matroid* m, char** out) {
  if (!m || !out) return invalid_argument("null argument");
  return guarded([&] {
    *out = dup_string(mobconv::subset_corank_poly(m->value).str());
  });
}

int mobconv_poset_from_json(const char* json_text, mobconv_poset** out) {
  if (!json_text || !out) return invalid_argument("null argument");
  return guarded([&] {
    *out = new mobconv_poset{mobconv::Poset::from_json_text(json_text)};
  });
}

void mobconv_poset_free(mobconv_poset* p) { delete p; }

int mobconv_verify_conjugation(const mobconv_poset* p, uint64_t seed,
                               int32_t trials, mobconv_report** out) {
  if (!p || !out) return invalid_argument("null argument");
  if (trials < 1) return invalid_argument("trials must be positive");
  return guarded([&] {
    mobconv::Rng rng(seed);
    auto report = std::make_unique<mobconv_report>();
    for (int32_t i = 0; i < trials; ++i) {
      std::vector<mobconv::Polynomial> fv, gv;
      for (int e = 0; e < p->value.size(); ++e) {
        fv.push_back(mobconv::random_polynomial(rng, {"u", "v"}, 2, 3));
        gv.push_back(mobconv::random_polynomial(rng, {"u", "v"}, 2, 3));
      }
      mobconv::VerificationReport entry = mobconv::verify_conjugation_homomorphism(
          p->value, mobconv::PointFunction(std::move(fv)),
          mobconv::PointFunction(std::move(gv)));
      entry.identity = "conjugation trial " + std::to_string(i);
      report->entries.push_back(std::move(entry));
    }
    *out = report.release();
  });
}

int mobconv_verify_interval_convolution(const mobconv_arrangement* a,
                                        mobconv_report** out) {
  if (!a || !out) return invalid_argument("null argument");
  return guarded([&] {
    *out = new mobconv_report{{mobconv::verify_interval_convolution(a->value)}};
  });
}

int mobconv_verify_region_convolution(const mobconv_arrangement* a,
                                      mobconv_report** out) {
  if (!a || !out) return invalid_argument("null argument");
  return guarded([&] {
    *out = new mobconv_report{{mobconv::verify_region_convolution(a->value)}};
  });
}

int mobconv_verify_finite_field(const mobconv_arrangement* a, const int64_t* qs,
                                size_t count, mobconv_report** out) {
  if (!a || !out) return invalid_argument("null argument");
  return guarded([&] {
    auto report = std::make_unique<mobconv_report>();
    for (long long q : sorted_primes(qs, count)) {
      report->entries.push_back(mobconv::verify_finite_field(a->value, q));
    }
    *out = report.release();
  });
}

int mobconv_verify_reciprocity(const mobconv_arrangement* a, const int64_t* qs,
                               size_t count, int32_t workers,
                               mobconv_report** out) {
  if (!a || !out) return invalid_argument("null argument");
  if (workers < 1) return invalid_argument("workers must be positive");
  return guarded([&] {
    auto report = std::make_unique<mobconv_report>();
    for (long long q : sorted_primes(qs, count)) {
      report->entries.push_back(mobconv::verify_reciprocity(a->value, q, workers));
    }
    *out = report.release();
  });
}

int mobconv_verify_translation(const mobconv_arrangement* a, int32_t trials,
                               uint64_t seed, mobconv_report** out) {
  if (!a || !out) return invalid_argument("null argument");
  if (trials < 1) return invalid_argument("trials must be positive");
  return guarded([&] {
    *out = new mobconv_report{
        {mobconv::verify_translation_lemma(a->value, trials, seed)}};
  });
}

int mobconv_verify_krs(const mobconv_matroid* m, mobconv_report** out) {
  if (!m || !out) return invalid_argument("null argument");
  return guarded([&] { *out = new mobconv_report{{mobconv::verify_krs(m->value)}}; });
}

int mobconv_verify_kung1(const mobconv_matroid* m, mobconv_report** out) {
  if (!m || !out) return invalid_argument("null argument");
  return guarded([&] {
    *out = new mobconv_report{{mobconv::verify_kung_identity1(m->value)}};
  });
}

int mobconv_verify_kung5(const mobconv_matroid* m, mobconv_report** out) {
  if (!m || !out) return invalid_argument("null argument");
  return guarded([&] {
    *out = new mobconv_report{{mobconv::verify_kung_identity5(m->value)}};
  });
}

int mobconv_report_count(const mobconv_report* r, size_t* out) {
  if (!r || !out) return invalid_argument("null argument");
  *out = r->entries.size();
  return MOBCONV_OK;
}

int mobconv_report_all_pass(const mobconv_report* r, int32_t* out) {
  if (!r || !out) return invalid_argument("null argument");
  *out = std::all_of(r->entries.begin(), r->entries.end(),
                     [](const mobconv::VerificationReport& e) { return e.pass; })
             ? 1
             : 0;
  return MOBCONV_OK;
}

int mobconv_report_entry_pass(const mobconv_report* r, size_t index, int32_t* out) {
  if (!r || !out) return invalid_argument("null argument");
  if (index >= r->entries.size()) return invalid_argument("report index out of range");
  *out = r->entries[index].pass ? 1 : 0;
  return MOBCONV_OK;
}

int mobconv_report_entry_json(const mobconv_report* r, size_t index, char** out) {
  if (!r || !out) return invalid_argument("null argument");
  if (index >= r->entries.size()) return invalid_argument("report index out of range");
  return guarded([&] { *out = dup_string(r->entries[index].to_json_text()); });
}

int mobconv_report_entry_text(const mobconv_report* r, size_t index, char** out) {
  if (!r || !out) return invalid_argument("null argument");
  if (index >= r->entries.size()) return invalid_argument("report index out of range");
  return guarded([&] { *out = dup_string(r->entries[index].to_text()); });
}

void mobconv_report_free(mobconv_report* r) { delete r; }

}  // extern "C"
