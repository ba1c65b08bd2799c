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

#ifndef MOBCONV_FINITE_FIELD_HPP
#define MOBCONV_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

#include "mobconv/arrangement.hpp"

namespace mobconv {

// Coefficientwise reduction of an integral hyperplane mod a prime q; all
// entries in [0, q).
struct ReducedHyperplane {
  std::vector<long long> normal;
  long long offset = 0;
};

// q-reduction of an arrangement. Hyperplanes stay parallel to the source
// arrangement's order; two of them may coincide mod q, which is exactly what
// the isomorphism guard detects.
struct ReducedArrangement {
  long long q = 0;
  int dimension = 0;
  std::vector<ReducedHyperplane> hyperplanes;
};

// Integer points with every coordinate in [-(q-1)/2, (q-1)/2], walked in
// odometer order (last coordinate fastest). Requires q odd.
class LatticeCube {
 public:
  LatticeCube(int dimension, long long q);
  long long point_count() const { return count_; }
  std::vector<long long> point(long long index) const;

 private:
  int dimension_;
  long long q_;
  long long count_;
};

// Hyperplanes of A whose q-translate family passes through the point.
struct CentralStabilizer {
  std::vector<long long> point;
  uint64_t members_mask = 0;
  std::vector<int> members;
};

// Throws ValidationError if q is not prime or some normal vanishes mod q.
ReducedArrangement q_reduce(const Arrangement& a, long long q);

// Compares the closure-set family of L(A) with the family obtained by
// brute-force intersection over F_q^n.
bool lattice_isomorphic(const Arrangement& a, long long q);

// Number of points of F_q^n lying on no reduced hyperplane.
long long complement_count(const ReducedArrangement& aq);

// Number of points of the reduced flat lying on no reduced hyperplane
// outside the flat's closure, i.e. |M(A_q / X_q)|.
long long flat_complement_count(const ReducedArrangement& aq,
                                const IntersectionLattice& lattice, int flat);

CentralStabilizer stabilizer_at(const Arrangement& a, long long q,
                                const std::vector<long long>& point);

// Regions of the central arrangement through the stabilizer's point with the
// member hyperplanes' normals.
Integer stabilizer_region_count(const Arrangement& a, const CentralStabilizer& st);

// Total lattice-point count over closed deformed regions, computed as the
// sum of stabilizer region counts over the cube. Region counts are shared
// per members-set: they are precomputed from the flat list, one per closure.
Integer chi_bar(const Arrangement& a, long long q, int workers = 1);

// Recovers the characteristic polynomial by Lagrange interpolation through
// complement counts at the given primes (at least dim + 1 of them, all
// passing the isomorphism guard). Independent of the Moebius machinery.
Polynomial interpolate_char_poly(const Arrangement& a,
                                 const std::vector<long long>& primes,
                                 const std::string& var = "t");

// chi(A, q) = |M(A_q)| for the given prime.
VerificationReport verify_finite_field(const Arrangement& a, long long q);

// Three-way check: chi_bar(A, q) = (-1)^n chi(A, -q)
//                                = sum over X of r(A|X) |M(A_q/X_q)|.
VerificationReport verify_reciprocity(const Arrangement& a, long long q,
                                      int workers = 1);

// r is invariant under central translations: random integral shifts of a
// central arrangement preserve the region count.
VerificationReport verify_translation_lemma(const Arrangement& a, int trials,
                                            uint64_t seed);

}  // namespace mobconv

#endif  // MOBCONV_FINITE_FIELD_HPP
