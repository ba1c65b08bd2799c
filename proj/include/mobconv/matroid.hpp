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

#ifndef MOBCONV_MATROID_HPP
#define MOBCONV_MATROID_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mobconv/polynomial.hpp"
#include "mobconv/report.hpp"

namespace mobconv {

// Matroid given by a fully materialized rank table over bitmask subsets of
// the ground set (at most 12 elements). Construction validates the rank
// axioms exhaustively and reports witness subsets on failure.
class Matroid {
 public:
  static constexpr int kMaxGroundSize = 12;

  static Matroid from_rank_table(int ground_size, std::vector<int> ranks);
  static Matroid uniform(int rank, int ground_size);
  // rank(A) = |V| - number of connected components of (V, A). Loops and
  // multi-edges are fine.
  static Matroid graphic(int vertex_count,
                         const std::vector<std::pair<int, int>>& edges);
  // One column per element; rank(A) is the exact rank of the column subset.
  static Matroid linear(const std::vector<std::vector<Integer>>& columns);
  // One of {"uniform": {...}}, {"graph": {...}}, {"linear": {...}},
  // {"rank_table": {...}}.
  static Matroid from_json_text(const std::string& text);

  int ground_size() const { return ground_size_; }
  uint32_t full_set() const { return (1u << ground_size_) - 1; }
  int rank(uint32_t subset) const { return ranks_[subset]; }
  int rank() const { return ranks_.back(); }

  // M|S on the elements of `keep`, re-indexed densely.
  Matroid restriction(uint32_t keep) const;
  // M/T on the elements outside `away`, re-indexed densely.
  Matroid contraction(uint32_t away) const;

 private:
  Matroid(int ground_size, std::vector<int> ranks)
      : ground_size_(ground_size), ranks_(std::move(ranks)) {}

  int ground_size_ = 0;
  std::vector<int> ranks_;
};

// R_M(x, y) = sum over subsets of x^(r(M)-r(A)) y^(|A|-r(A)).
Polynomial rank_gen_poly(const Matroid& m);
// T_M(x, y) = R_M(x - 1, y - 1).
Polynomial tutte_poly(const Matroid& m);
// SC_M(x, lambda) = sum over subsets A of x_A lambda^(r(M)-r(A)), with one
// indexed variable x_<element> per ground-set element.
Polynomial subset_corank_poly(const Matroid& m);

// T_M(x, y) = sum over A of T_{M|A}(0, y) T_{M/A}(x, 0), plus the Boolean
// lattice conjugation route to (-1)^r(M) R_M(x, y).
VerificationReport verify_krs(const Matroid& m);

// SC_M(x, lambda) = sum over A of prod_{e in A}(x_e + 1) SC_{M/A}(-1, lambda).
VerificationReport verify_kung_identity5(const Matroid& m);

// SC_M(xy, lambda xi) = sum over A of lambda^(r(M)-r(A)) (-y)_A
// SC_{M|A}(-x, lambda) SC_{M/A}(y, xi).
VerificationReport verify_kung_identity1(const Matroid& m);

}  // namespace mobconv

#endif  // MOBCONV_MATROID_HPP
