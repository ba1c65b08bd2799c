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

#ifndef MOBCONV_ARRANGEMENT_HPP
#define MOBCONV_ARRANGEMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mobconv/linalg.hpp"
#include "mobconv/polynomial.hpp"
#include "mobconv/poset.hpp"
#include "mobconv/report.hpp"

namespace mobconv {

// Integral hyperplane {x : a.x = b}, stored normalized: gcd of all entries
// of (a, b) is 1 and the first nonzero entry of a is positive.
struct Hyperplane {
  std::vector<Integer> normal;
  Integer offset;

  static Hyperplane make(std::vector<Integer> normal, Integer offset);
  LinearConstraint constraint() const { return {normal, offset}; }
  bool operator==(const Hyperplane& other) const = default;
  bool operator<(const Hyperplane& other) const;
  std::string str() const;
};

class Arrangement {
 public:
  // Rejects duplicate hyperplanes (after normalization): arrangements are
  // sets, and merging silently would hide input mistakes.
  Arrangement(int dimension, std::vector<Hyperplane> hyperplanes);
  // Internal constructor for quotients, where several hyperplanes may trace
  // the same subspace: dedups and sorts canonically instead of rejecting.
  static Arrangement merged(int dimension, std::vector<Hyperplane> hyperplanes);
  // {"n": 2, "hyperplanes": [{"a": [1, 0], "b": 0}, ...]}, integers only.
  static Arrangement from_json_text(const std::string& text);

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(hyperplanes_.size()); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

 private:
  int dimension_ = 0;
  std::vector<Hyperplane> hyperplanes_;
};

// Element of the reduced intersection lattice. Non-top flats carry their
// affine subspace and the full set of hyperplanes containing it; the
// artificial top carries neither.
struct Flat {
  uint64_t closure_mask = 0;
  std::vector<int> closure;
  std::optional<AffineSubspace> subspace;
  bool is_top = false;

  int dim() const { return subspace->dim; }
};

// All nonempty intersections of hyperplanes ordered by reverse inclusion,
// with an artificial top adjoined (always, central or not). Flat 0 is the
// ambient space; the last flat is the top. The Moebius table is precomputed
// eagerly, so lattices are safe to share across threads once built.
class IntersectionLattice {
 public:
  explicit IntersectionLattice(const Arrangement& a);

  const Arrangement& arrangement() const { return arrangement_; }
  const std::vector<Flat>& flats() const { return flats_; }
  int size() const { return static_cast<int>(flats_.size()); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  const Poset& order() const { return order_; }

  const Integer& mobius(int x, int y) const {
    return mobius_[static_cast<size_t>(x) * size() + y];
  }
  int dim(int flat) const;        // non-top flats only
  int flat_rank(int flat) const;  // dim(ambient) - dim(flat)
  int rank() const { return rank_; }
  int corank(int flat) const { return rank_ - flat_rank(flat); }
  std::string flat_label(int flat) const;

 private:
  Arrangement arrangement_;
  std::vector<Flat> flats_;
  Poset order_;
  std::vector<Integer> mobius_;
  int rank_ = 0;
};

IntersectionLattice build_lattice(const Arrangement& a);

// Interval characteristic polynomial: sum of mu(x, z) t^dim(z) over
// x <= z <= y, where the artificial top contributes zero.
Polynomial char_poly_interval(const IntersectionLattice& lattice, int x, int y,
                              const std::string& var);
Polynomial char_poly(const IntersectionLattice& lattice, const std::string& var = "t");
Polynomial char_poly(const Arrangement& a, const std::string& var = "t");

// Sub-arrangement of the hyperplanes containing the flat, in the ambient
// space.
Arrangement restrict_to_flat(const IntersectionLattice& lattice, int flat);
// Traces of the remaining hyperplanes on the flat, re-coordinatized to
// dim(flat) ambient coordinates via an integral basis of the flat's
// direction space. Empty traces drop; coincident traces merge.
Arrangement contract_to_flat(const IntersectionLattice& lattice, int flat);

// Zaslavsky counts: r = (-1)^dim chi(-1), b = (-1)^rank chi(1).
Integer region_count(const IntersectionLattice& lattice);
Integer bounded_region_count(const IntersectionLattice& lattice);
Integer region_count(const Arrangement& a);
Integer bounded_region_count(const Arrangement& a);

// chi(A_{X,Y}, st) = sum over Z in [X, Y] of chi(A_{X,Z}, s) chi(A_{Z,Y}, t),
// checked exactly for every pair X <= Y of the reduced lattice.
VerificationReport verify_interval_convolution(const Arrangement& a);

// b(A) = sum over X of (-1)^corank(X) r(A|X) r(A/X) and
// r(A) = sum over X of (-1)^corank(X) r(A|X) b(A/X).
VerificationReport verify_region_convolution(const Arrangement& a);

}  // namespace mobconv

#endif  // MOBCONV_ARRANGEMENT_HPP
