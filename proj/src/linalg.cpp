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

#include "mobconv/linalg.hpp"

#include <algorithm>

#include "mobconv/errors.hpp"

namespace mobconv {

namespace {

// One-step Bareiss elimination on an augmented matrix. Pivots are the first
// nonzero entries in column order, so the result is deterministic. Entries
// stay integral throughout; every division is exact.
struct Elimination {
  std::vector<std::vector<Integer>> m;
  std::vector<int> pivot_cols;
  int rank = 0;
};

Elimination eliminate(std::vector<std::vector<Integer>> m, int cols) {
  Elimination out;
  int rows = static_cast<int>(m.size());
  Integer prev = 1;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int i = row; i < rows; ++i) {
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    int width = static_cast<int>(m[row].size());
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < width; ++j) {
        m[i][j] = divexact(m[row][col] * m[i][j] - m[i][col] * m[row][j], prev);
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.m = std::move(m);
  out.rank = row;
  return out;
}

// Clears denominators, divides out the content, and makes the first nonzero
// entry positive. Keeps direction bases deterministic and integral.
std::vector<Rational> normalize_direction(const std::vector<Rational>& v) {
  Integer scale = 1;
  for (const auto& x : v) scale = lcm_int(scale, x.get_den());
  std::vector<Integer> w(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * Rational(scale);
    w[i] = scaled.get_num();
  }
  Integer content = 0;
  for (const auto& x : w) content = gcd_int(content, x);
  if (content > 1) {
    for (auto& x : w) x = divexact(x, content);
  }
  for (const auto& x : w) {
    if (x != 0) {
      if (x < 0) {
        for (auto& y : w) y = -y;
      }
      break;
    }
  }
  std::vector<Rational> out(w.size());
  for (size_t i = 0; i < w.size(); ++i) out[i] = Rational(w[i]);
  return out;
}

}  // namespace

int integer_rank(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return 0;
  int cols = static_cast<int>(rows[0].size());
  return eliminate(std::move(rows), cols).rank;
}

std::optional<AffineSubspace> intersect_affine(
    int n, const std::vector<LinearConstraint>& constraints) {
  std::vector<std::vector<Integer>> aug;
  aug.reserve(constraints.size());
  for (const auto& c : constraints) {
    if (static_cast<int>(c.normal.size()) != n) {
      throw ValidationError("constraint normal has wrong length");
    }
    if (std::all_of(c.normal.begin(), c.normal.end(),
                    [](const Integer& x) { return x == 0; })) {
      throw ValidationError("zero normal vector in constraint");
    }
    std::vector<Integer> row = c.normal;
    row.push_back(c.offset);
    aug.push_back(std::move(row));
  }

  Elimination e = eliminate(std::move(aug), n);
  for (int i = e.rank; i < static_cast<int>(e.m.size()); ++i) {
    if (e.m[i][n] != 0) return std::nullopt;
  }

  std::vector<bool> is_pivot(n, false);
  for (int col : e.pivot_cols) is_pivot[col] = true;

  // Rational back-substitution against the triangular pivot structure.
  auto solve_with = [&](const std::vector<Rational>& free_values,
                        bool homogeneous) {
    std::vector<Rational> x(n, Rational(0));
    int free_index = 0;
    for (int col = 0; col < n; ++col) {
      if (!is_pivot[col]) x[col] = free_values[free_index++];
    }
    for (int k = e.rank - 1; k >= 0; --k) {
      int pc = e.pivot_cols[k];
      Rational acc = homogeneous ? Rational(0) : Rational(e.m[k][n]);
      for (int j = pc + 1; j < n; ++j) {
        if (e.m[k][j] != 0) acc -= Rational(e.m[k][j]) * x[j];
      }
      x[pc] = acc / Rational(e.m[k][pc]);
    }
    return x;
  };

  int free_count = n - e.rank;
  AffineSubspace out;
  out.dim = free_count;
  out.basepoint = solve_with(std::vector<Rational>(free_count, Rational(0)), false);
  out.directions.reserve(free_count);
  for (int i = 0; i < free_count; ++i) {
    std::vector<Rational> unit(free_count, Rational(0));
    unit[i] = Rational(1);
    out.directions.push_back(normalize_direction(solve_with(unit, true)));
  }
  return out;
}

Rational dot(const std::vector<Integer>& a, const std::vector<Rational>& x) {
  Rational acc(0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) acc += Rational(a[i]) * x[i];
  }
  return acc;
}

bool subspace_in_hyperplane(const AffineSubspace& s, const LinearConstraint& h) {
  if (dot(h.normal, s.basepoint) != Rational(h.offset)) return false;
  for (const auto& d : s.directions) {
    if (dot(h.normal, d) != 0) return false;
  }
  return true;
}

}  // namespace mobconv
