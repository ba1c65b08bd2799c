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

#include <vector>

#include "doctest.h"
#include "mobconv/errors.hpp"
#include "mobconv/linalg.hpp"
#include "mobconv/random.hpp"

using namespace mobconv;

namespace {

LinearConstraint lc(std::vector<long> a, long b) {
  return {std::vector<Integer>(a.begin(), a.end()), Integer(b)};
}

// Independent rank oracle: largest k with a nonzero k x k minor, by
// exhaustive enumeration with cofactor determinants. Only for tiny matrices.
Integer minor_det(const std::vector<std::vector<Integer>>& m,
                  const std::vector<int>& rows, const std::vector<int>& cols) {
  size_t k = rows.size();
  if (k == 0) return 1;
  Integer det = 0;
  for (size_t i = 0; i < k; ++i) {
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols;
    for (size_t j = 0; j < k; ++j) {
      if (j != i) sub_cols.push_back(cols[j]);
    }
    Integer term = m[rows[0]][cols[i]] * minor_det(m, sub_rows, sub_cols);
    det += (i % 2 == 0) ? term : -term;
  }
  return det;
}

int rank_by_minors(const std::vector<std::vector<Integer>>& m) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int best = 0;
  for (int rmask = 0; rmask < (1 << rows); ++rmask) {
    for (int cmask = 0; cmask < (1 << cols); ++cmask) {
      if (__builtin_popcount(rmask) != __builtin_popcount(cmask)) continue;
      std::vector<int> rs, cs;
      for (int i = 0; i < rows; ++i) {
        if ((rmask >> i) & 1) rs.push_back(i);
      }
      for (int j = 0; j < cols; ++j) {
        if ((cmask >> j) & 1) cs.push_back(j);
      }
      if (static_cast<int>(rs.size()) <= best) continue;
      if (minor_det(m, rs, cs) != 0) best = static_cast<int>(rs.size());
    }
  }
  return best;
}

}  // namespace

TEST_CASE("two axes meet in the origin") {
  auto s = intersect_affine(2, {lc({1, 0}, 0), lc({0, 1}, 0)});
  REQUIRE(s.has_value());
  CHECK(s->dim == 0);
  CHECK(s->basepoint == std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(s->directions.empty());
}

TEST_CASE("parallel hyperplanes are infeasible") {
  CHECK_FALSE(intersect_affine(2, {lc({1, 0}, 0), lc({1, 0}, 1)}).has_value());
}

TEST_CASE("three non-concurrent lines have empty intersection") {
  CHECK_FALSE(
      intersect_affine(2, {lc({1, 0}, 0), lc({0, 1}, 0), lc({1, 1}, 1)}).has_value());
}

TEST_CASE("zero normal is rejected") {
  CHECK_THROWS_AS(intersect_affine(2, {lc({0, 0}, 1)}), ValidationError);
  CHECK_THROWS_AS(intersect_affine(2, {lc({1}, 1)}), ValidationError);
}

TEST_CASE("no constraints yields the whole space") {
  auto s = intersect_affine(3, {});
  REQUIRE(s.has_value());
  CHECK(s->dim == 3);
  CHECK(s->directions.size() == 3);
}

TEST_CASE("solutions satisfy constraints and directions annihilate them") {
  Rng rng(4242);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    int m = static_cast<int>(rng.below(4));
    std::vector<LinearConstraint> cs;
    std::vector<std::vector<Integer>> matrix;
    for (int i = 0; i < m; ++i) {
      std::vector<long> a(n);
      bool nonzero = false;
      for (auto& x : a) {
        x = rng.in_range(-3, 3);
        nonzero |= x != 0;
      }
      if (!nonzero) a[static_cast<size_t>(rng.below(n))] = 1;
      cs.push_back(lc(a, rng.in_range(-3, 3)));
      matrix.push_back(cs.back().normal);
    }
    auto s = intersect_affine(n, cs);
    if (!s) continue;
    CHECK(s->dim == n - rank_by_minors(matrix));
    CHECK(static_cast<int>(s->directions.size()) == s->dim);
    for (const auto& c : cs) {
      CHECK(dot(c.normal, s->basepoint) == Rational(c.offset));
      for (const auto& d : s->directions) CHECK(dot(c.normal, d) == 0);
    }
    // Directions are denominator-free and independent.
    std::vector<std::vector<Integer>> dirs;
    for (const auto& d : s->directions) {
      std::vector<Integer> row;
      for (const auto& x : d) {
        CHECK(x.get_den() == 1);
        row.push_back(x.get_num());
      }
      dirs.push_back(std::move(row));
    }
    CHECK(integer_rank(dirs) == s->dim);
  }
}

TEST_CASE("integer_rank matches the minor oracle") {
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = static_cast<int>(rng.below(4));
    int cols = 1 + static_cast<int>(rng.below(4));
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    for (auto& row : m) {
      for (auto& x : row) x = int_from(rng.in_range(-4, 4));
    }
    CHECK(integer_rank(m) == rank_by_minors(m));
  }
}

TEST_CASE("rational offsets survive exactly") {
  // x + 2y = 1 has basepoint with a rational coordinate once y is pivot-free.
  auto s = intersect_affine(2, {lc({2, 4}, 1)});
  REQUIRE(s.has_value());
  CHECK(s->dim == 1);
  CHECK(dot({Integer(2), Integer(4)}, s->basepoint) == Rational(1));
}
