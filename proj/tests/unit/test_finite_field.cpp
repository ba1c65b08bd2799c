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

#include "catalog.hpp"
#include "doctest.h"
#include "mobconv/errors.hpp"
#include "mobconv/finite_field.hpp"

using namespace mobconv;
using namespace mobconv::testing;

TEST_CASE("q-reduction basics") {
  ReducedArrangement r1 = q_reduce(Arrangement(2, {hp({1, 1}, 1)}), 5);
  CHECK(r1.hyperplanes[0].normal == std::vector<long long>{1, 1});
  CHECK(r1.hyperplanes[0].offset == 1);

  // 3x = 6 normalizes to x = 2 first, so it survives mod 3.
  ReducedArrangement r2 = q_reduce(Arrangement(1, {hp({3}, 6)}), 3);
  CHECK(r2.hyperplanes[0].normal == std::vector<long long>{1});
  CHECK(r2.hyperplanes[0].offset == 2);

  ReducedArrangement r3 = q_reduce(Arrangement(2, {hp({1, -1}, 7)}), 7);
  CHECK(r3.hyperplanes[0].normal == std::vector<long long>{1, 6});
  CHECK(r3.hyperplanes[0].offset == 0);

  CHECK_THROWS_AS(q_reduce(triangle(), 4), ValidationError);
  // 3x = 1 vanishes mod 3.
  CHECK_THROWS_WITH_AS(q_reduce(Arrangement(1, {hp({3}, 1)}), 3),
                       doctest::Contains("vanishes"), ValidationError);
}

TEST_CASE("lattice isomorphism guard") {
  for (long long q : {5LL, 7LL, 11LL, 13LL}) {
    CAPTURE(q);
    CHECK(lattice_isomorphic(triangle(), q));
  }
  // Parallel lines stay parallel at any prime.
  Arrangement distinct(1, {hp({1}, 0), hp({1}, 1)});
  for (long long q : {2LL, 3LL, 5LL}) {
    CAPTURE(q);
    CHECK(lattice_isomorphic(distinct, q));
  }
  // x = 0 and x = 3 coincide mod 3.
  CHECK_FALSE(lattice_isomorphic(parallel_pair(), 3));
  CHECK(lattice_isomorphic(parallel_pair(), 5));
}

TEST_CASE("complement counts") {
  CHECK(complement_count(q_reduce(empty_arrangement(2), 5)) == 25);
  // 49 - |union of three lines| = 49 - (21 - 3) = 31 = chi(7).
  CHECK(complement_count(q_reduce(triangle(), 7)) == 31);
  CHECK(complement_count(q_reduce(coordinate_arrangement(2), 5)) == 16);
}

TEST_CASE("flat complement counts") {
  IntersectionLattice lattice(triangle());
  ReducedArrangement aq = q_reduce(triangle(), 7);
  CHECK(flat_complement_count(aq, lattice, lattice.bottom()) ==
        complement_count(aq));
  for (int i = 0; i < lattice.size(); ++i) {
    if (lattice.flats()[i].is_top) continue;
    if (lattice.dim(i) == 1 && lattice.flats()[i].closure == std::vector<int>{0}) {
      // 7 points on the line minus the two hit by y = 0 and x + y = 1.
      CHECK(flat_complement_count(aq, lattice, i) == 5);
    }
    if (lattice.dim(i) == 0) {
      CHECK(flat_complement_count(aq, lattice, i) == 1);
    }
  }
  CHECK_THROWS_AS(flat_complement_count(aq, lattice, lattice.top()), ValidationError);
}

TEST_CASE("cube points partition by stabilizer closure") {
  for (const auto& [name, a] : arrangement_catalog()) {
    for (long long q : {5LL, 7LL}) {
      CAPTURE(name);
      CAPTURE(q);
      if (!lattice_isomorphic(a, q)) continue;
      IntersectionLattice lattice(a);
      ReducedArrangement aq = q_reduce(a, q);
      long long total = 0;
      for (int i = 0; i < lattice.size(); ++i) {
        if (lattice.flats()[i].is_top) continue;
        total += flat_complement_count(aq, lattice, i);
      }
      long long points = 1;
      for (int i = 0; i < a.dimension(); ++i) points *= q;
      CHECK(total == points);
    }
  }
}

TEST_CASE("lattice cube enumeration") {
  LatticeCube cube(2, 5);
  CHECK(cube.point_count() == 25);
  CHECK(cube.point(0) == std::vector<long long>{-2, -2});
  CHECK(cube.point(24) == std::vector<long long>{2, 2});
  CHECK_THROWS_AS(LatticeCube(2, 2), GuardError);
}

TEST_CASE("stabilizers at cube points") {
  Arrangement a = triangle();
  CentralStabilizer origin = stabilizer_at(a, 5, {0, 0});
  CHECK(origin.members == std::vector<int>{0, 1});
  CHECK(stabilizer_region_count(a, origin) == 4);

  // H3's translate x + y = 1 passes through (1, 0), as does y = 0.
  CentralStabilizer at10 = stabilizer_at(a, 5, {1, 0});
  CHECK(at10.members == std::vector<int>{1, 2});
  CHECK(stabilizer_region_count(a, at10) == 4);

  CentralStabilizer generic = stabilizer_at(a, 5, {2, 2});
  CHECK(generic.members.empty());
  CHECK(stabilizer_region_count(a, generic) == 1);

  CHECK_THROWS_AS(stabilizer_at(a, 5, {3, 0}), ValidationError);
}

TEST_CASE("chi_bar equals the point-by-point stabilizer sum") {
  Arrangement a = triangle();
  LatticeCube cube(2, 5);
  Integer by_hand = 0;
  for (long long i = 0; i < cube.point_count(); ++i) {
    by_hand += stabilizer_region_count(a, stabilizer_at(a, 5, cube.point(i)));
  }
  CHECK(by_hand == 43);
  CHECK(chi_bar(a, 5) == by_hand);
}

TEST_CASE("chi_bar frozen values") {
  CHECK(chi_bar(empty_arrangement(2), 5) == 25);
  CHECK(chi_bar(triangle(), 5) == 43);          // 25 + 15 + 3
  CHECK(chi_bar(coordinate_arrangement(2), 5) == 36);  // (5+1)^2
}

TEST_CASE("chi_bar guards") {
  CHECK_THROWS_AS(chi_bar(triangle(), 2), GuardError);
  CHECK_THROWS_AS(chi_bar(triangle(), 6), ValidationError);
  CHECK_THROWS_WITH_AS(chi_bar(parallel_pair(), 3),
                       doctest::Contains("lattice not isomorphic at q=3"),
                       GuardError);
  CHECK_THROWS_AS(chi_bar(empty_arrangement(9), 13), GuardError);
}

TEST_CASE("chi_bar is worker-count independent") {
  for (int workers : {1, 2, 5}) {
    CAPTURE(workers);
    CHECK(chi_bar(triangle(), 7, workers) == 73);
  }
}

TEST_CASE("finite-field verification (Athanasiadis)") {
  for (const auto& [name, a] : arrangement_catalog()) {
    for (long long q : {5LL, 7LL, 11LL, 13LL}) {
      CAPTURE(name);
      CAPTURE(q);
      if (!lattice_isomorphic(a, q)) continue;
      VerificationReport report = verify_finite_field(a, q);
      CHECK(report.pass);
    }
  }
}

TEST_CASE("reciprocity three-way agreement, frozen values") {
  long long expected[3] = {43, 73, 157};
  long long primes[3] = {5, 7, 11};
  for (int i = 0; i < 3; ++i) {
    VerificationReport report = verify_reciprocity(triangle(), primes[i]);
    CHECK(report.pass);
    CHECK(report.values[3].first == "chi_bar");
    CHECK(report.values[3].second == std::to_string(expected[i]));
    CHECK(report.values[4].second == std::to_string(expected[i]));
    CHECK(report.values[5].second == std::to_string(expected[i]));
  }
  VerificationReport cross = verify_reciprocity(coordinate_arrangement(2), 7);
  CHECK(cross.pass);
  CHECK(cross.values[3].second == "64");
}

TEST_CASE("reciprocity across the 2d catalog") {
  for (const auto& [name, a] : arrangement_catalog()) {
    if (a.dimension() != 2) continue;
    for (long long q : {5LL, 7LL}) {
      CAPTURE(name);
      CAPTURE(q);
      VerificationReport report = verify_reciprocity(a, q);
      CHECK(report.pass);
    }
  }
}

TEST_CASE("reciprocity report is worker-count independent") {
  VerificationReport one = verify_reciprocity(braid_3d(), 5, 1);
  VerificationReport four = verify_reciprocity(braid_3d(), 5, 4);
  CHECK(one.pass);
  CHECK(one.to_json_text() == four.to_json_text());
}

TEST_CASE("chi_bar dominates the open complement count") {
  for (const auto& [name, a] : arrangement_catalog()) {
    CAPTURE(name);
    if (!lattice_isomorphic(a, 5)) continue;
    CHECK(chi_bar(a, 5) >= int_from(complement_count(q_reduce(a, 5))));
  }
}

TEST_CASE("interpolation through primes recovers chi exactly") {
  std::vector<long long> primes{5, 7, 11, 13};
  for (const auto& [name, a] : arrangement_catalog()) {
    CAPTURE(name);
    std::vector<long long> used(primes.begin(),
                                primes.begin() + a.dimension() + 1);
    CHECK(interpolate_char_poly(a, used) == char_poly(a));
    // Over-determined variant cross-checks the extra primes.
    CHECK(interpolate_char_poly(a, primes) == char_poly(a));
  }
  CHECK_THROWS_AS(interpolate_char_poly(triangle(), {5, 7}), ValidationError);
  CHECK_THROWS_AS(interpolate_char_poly(parallel_pair(), {3, 5}), GuardError);
}

TEST_CASE("translation lemma") {
  VerificationReport cross = verify_translation_lemma(coordinate_arrangement(2), 10, 1);
  CHECK(cross.pass);
  VerificationReport concurrent = verify_translation_lemma(concurrent_lines(), 10, 2);
  CHECK(concurrent.pass);
  CHECK_THROWS_WITH_AS(verify_translation_lemma(triangle(), 5, 1),
                       doctest::Contains("central"), ValidationError);

  // The spot checks behind the lemma: explicit translates.
  Arrangement shifted(2, {hp({1, 0}, 1), hp({0, 1}, 2)});
  CHECK(region_count(shifted) == 4);
  Arrangement shifted_concurrent(2, {hp({1, 0}, 1), hp({0, 1}, 1), hp({1, -1}, 0)});
  CHECK(region_count(shifted_concurrent) == 6);
}
