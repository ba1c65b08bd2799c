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

#ifndef MOBCONV_LINALG_HPP
#define MOBCONV_LINALG_HPP

#include <optional>
#include <vector>

#include "mobconv/numeric.hpp"

namespace mobconv {

// One integral equation a.x = b with a nonzero.
struct LinearConstraint {
  std::vector<Integer> normal;
  Integer offset;
};

// Solution set of a feasible integral system, as basepoint + span(directions).
// Direction vectors are denominator-free (integer entries stored as
// rationals) and there are exactly `dim` of them, linearly independent.
struct AffineSubspace {
  int dim = 0;
  std::vector<Rational> basepoint;
  std::vector<std::vector<Rational>> directions;
};

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
int integer_rank(std::vector<std::vector<Integer>> rows);

// Exact solution of {a.x = b}. Empty optional when the system is
// infeasible. Throws ValidationError on a zero normal or a length mismatch.
std::optional<AffineSubspace> intersect_affine(
    int n, const std::vector<LinearConstraint>& constraints);

Rational dot(const std::vector<Integer>& a, const std::vector<Rational>& x);

// Whether the hyperplane contains the whole subspace.
bool subspace_in_hyperplane(const AffineSubspace& s, const LinearConstraint& h);

}  // namespace mobconv

#endif  // MOBCONV_LINALG_HPP
