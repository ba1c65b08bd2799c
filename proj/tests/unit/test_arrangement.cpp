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

#include <algorithm>
#include <vector>

#include "catalog.hpp"
#include "doctest.h"
#include "mobconv/errors.hpp"

using namespace mobconv;
using namespace mobconv::testing;

TEST_CASE("hyperplane normalization") {
  // 3x = 6 normalizes to x = 2.
  CHECK(hp({3}, 6) == hp({1}, 2));
  // First nonzero coefficient becomes positive.
  CHECK(hp({-1, 1}, -1) == hp({1, -1}, 1));
  CHECK(hp({0, -2}, 4) == hp({0, 1}, -2));
  CHECK_THROWS_AS(hp({0, 0}, 1), ValidationError);
  CHECK(hp({2, 4}, 1).normal[0] == 2);  // gcd(2,4,1) = 1, kept as-is
}

TEST_CASE("duplicate hyperplanes are rejected, merged() dedups") {
  CHECK_THROWS_WITH_AS(Arrangement(1, {hp({1}, 0), hp({2}, 0)}),
                       doctest::Contains("duplicate"), ValidationError);
  CHECK(Arrangement::merged(1, {hp({1}, 0), hp({2}, 0), hp({1}, 1)}).size() == 2);
}

TEST_CASE("arrangement JSON loader") {
  Arrangement a = Arrangement::from_json_text(
      R"({"n": 2, "hyperplanes": [{"a": [1, 0], "b": 0}, {"a": [0, 1], "b": 0}]})");
  CHECK(a.dimension() == 2);
  CHECK(a.size() == 2);
  CHECK_THROWS_AS(Arrangement::from_json_text("not json"), ParseError);
  CHECK_THROWS_AS(Arrangement::from_json_text(R"({"n": 2})"), ParseError);
  CHECK_THROWS_AS(Arrangement::from_json_text(
                      R"({"n": 1, "hyperplanes": [{"a": [0.5], "b": 0}]})"),
                  ParseError);
  CHECK_THROWS_AS(Arrangement::from_json_text(
                      R"({"n": 1, "hyperplanes": [{"a": [1], "b": 0}, {"a": [2], "b": 0}]})"),
                  ValidationError);
}

TEST_CASE("lattice of the empty arrangement") {
  IntersectionLattice lattice(empty_arrangement(2));
  CHECK(lattice.size() == 2);  // ambient + top
  CHECK(lattice.dim(lattice.bottom()) == 2);
  CHECK(lattice.rank() == 0);
}

TEST_CASE("lattice of the coordinate cross") {
  IntersectionLattice lattice(coordinate_arrangement(2));
  CHECK(lattice.size() == 5);  // plane, two lines, origin, top
  CHECK(lattice.rank() == 2);
}

TEST_CASE("lattice of the triangle arrangement") {
  IntersectionLattice lattice(triangle());
  // Plane, 3 lines, 3 points (no triple point), top.
  CHECK(lattice.size() == 8);
  int lines = 0, points = 0;
  for (int i = 0; i < lattice.size(); ++i) {
    if (lattice.flats()[i].is_top) continue;
    if (lattice.dim(i) == 1) ++lines;
    if (lattice.dim(i) == 0) ++points;
  }
  CHECK(lines == 3);
  CHECK(points == 3);
}

TEST_CASE("characteristic polynomials, frozen") {
  CHECK(char_poly(triangle()).str() == "t^2 - 3*t + 3");
  CHECK(char_poly(coordinate_arrangement(2)).str() == "t^2 - 2*t + 1");
  CHECK(char_poly(empty_arrangement(3)).str() == "t^3");
  CHECK(char_poly(concurrent_lines()).str() == "t^2 - 3*t + 2");
  CHECK(char_poly(braid_3d()).str() == "t^3 - 3*t^2 + 2*t");
  CHECK(char_poly(rank_deficient_3d()).str() == "t^3 - 3*t^2 + 3*t");
  CHECK(char_poly(empty_arrangement(0)).str() == "1");
}

TEST_CASE("interval characteristic polynomials") {
  IntersectionLattice lattice(triangle());
  // X = Y gives the single summand t^dim(X).
  for (int i = 0; i < lattice.size(); ++i) {
    if (lattice.flats()[i].is_top) continue;
    CHECK(char_poly_interval(lattice, i, i, "t") ==
          Polynomial::term(Monomial::variable("t", lattice.dim(i)), 1));
  }
  // The top-to-top interval is the zero polynomial.
  CHECK(char_poly_interval(lattice, lattice.top(), lattice.top(), "t").is_zero());
  // Incomparable flats are an error: two distinct lines.
  std::vector<int> line_flats;
  for (int i = 0; i < lattice.size(); ++i) {
    if (!lattice.flats()[i].is_top && lattice.dim(i) == 1) line_flats.push_back(i);
  }
  CHECK_THROWS_AS(char_poly_interval(lattice, line_flats[0], line_flats[1], "t"),
                  ValidationError);
}

TEST_CASE("restriction and contraction at the boundary") {
  IntersectionLattice lattice(triangle());
  Arrangement at_bottom = restrict_to_flat(lattice, lattice.bottom());
  CHECK(at_bottom.size() == 0);
  Arrangement full = contract_to_flat(lattice, lattice.bottom());
  CHECK(full.size() == 3);
  CHECK(char_poly(full) == char_poly(triangle()));
  CHECK_THROWS_AS(restrict_to_flat(lattice, lattice.top()), ValidationError);
  CHECK_THROWS_AS(contract_to_flat(lattice, lattice.top()), ValidationError);
}

TEST_CASE("contraction of the triangle to the line x = 0") {
  IntersectionLattice lattice(triangle());
  int line = -1;
  for (int i = 0; i < lattice.size(); ++i) {
    if (!lattice.flats()[i].is_top && lattice.flats()[i].closure == std::vector<int>{0}) {
      line = i;
    }
  }
  REQUIRE(line >= 0);
  Arrangement restricted = restrict_to_flat(lattice, line);
  CHECK(restricted.size() == 1);
  // The other two lines trace the points y = 0 and y = 1 on the line.
  Arrangement contracted = contract_to_flat(lattice, line);
  CHECK(contracted.dimension() == 1);
  REQUIRE(contracted.size() == 2);
  CHECK(contracted.hyperplanes()[0] == hp({1}, 0));
  CHECK(contracted.hyperplanes()[1] == hp({1}, 1));
}

TEST_CASE("contraction of a central arrangement to the origin") {
  IntersectionLattice lattice(coordinate_arrangement(2));
  int origin = -1;
  for (int i = 0; i < lattice.size(); ++i) {
    if (!lattice.flats()[i].is_top && lattice.dim(i) == 0) origin = i;
  }
  REQUIRE(origin >= 0);
  CHECK(restrict_to_flat(lattice, origin).size() == 2);
  Arrangement point = contract_to_flat(lattice, origin);
  CHECK(point.dimension() == 0);
  CHECK(point.size() == 0);
  CHECK(region_count(point) == 1);
}

TEST_CASE("coincident traces merge in contractions") {
  // Both non-containing planes of the braid trace the same line on x1 = x2.
  IntersectionLattice lattice(braid_3d());
  int plane = -1;
  for (int i = 0; i < lattice.size(); ++i) {
    if (!lattice.flats()[i].is_top && lattice.flats()[i].closure == std::vector<int>{0}) {
      plane = i;
    }
  }
  REQUIRE(plane >= 0);
  CHECK(contract_to_flat(lattice, plane).size() == 1);
}

TEST_CASE("Zaslavsky counts, frozen") {
  CHECK(region_count(triangle()) == 7);
  CHECK(bounded_region_count(triangle()) == 1);
  CHECK(region_count(empty_arrangement(2)) == 1);
  CHECK(bounded_region_count(empty_arrangement(2)) == 1);
  CHECK(region_count(coordinate_arrangement(2)) == 4);
  CHECK(bounded_region_count(coordinate_arrangement(2)) == 0);
  CHECK(region_count(concurrent_lines()) == 6);
  CHECK(bounded_region_count(concurrent_lines()) == 0);
  CHECK(region_count(braid_3d()) == 6);
  CHECK(region_count(rank_deficient_3d()) == 7);
  CHECK(bounded_region_count(rank_deficient_3d()) == 1);
}

TEST_CASE("central arrangements have no bounded regions unless rank 0") {
  for (const auto& [name, a] : central_catalog()) {
    CAPTURE(name);
    CHECK(bounded_region_count(a) == 0);
  }
  CHECK(bounded_region_count(empty_arrangement(3)) == 1);
}

TEST_CASE("interval convolution identity across the catalog") {
  for (const auto& [name, a] : arrangement_catalog()) {
    CAPTURE(name);
    VerificationReport report = verify_interval_convolution(a);
    CHECK(report.pass);
  }
}

TEST_CASE("interval convolution report carries the global instance") {
  VerificationReport report = verify_interval_convolution(triangle());
  REQUIRE(report.pass);
  CHECK(report.values[1].first == "chi_st");
  CHECK(report.values[1].second == "s^2*t^2 - 3*s*t + 3");
  CHECK(report.values[2].second == "s^2*t^2 - 3*s*t + 3");
}

TEST_CASE("region convolution identities across the catalog") {
  for (const auto& [name, a] : arrangement_catalog()) {
    CAPTURE(name);
    VerificationReport report = verify_region_convolution(a);
    CHECK(report.pass);
  }
}

TEST_CASE("lattice consistency: intervals match fresh minors") {
  for (const auto& [name, a] : arrangement_catalog()) {
    CAPTURE(name);
    IntersectionLattice lattice(a);
    for (int i = 0; i < lattice.size(); ++i) {
      if (lattice.flats()[i].is_top) continue;
      CHECK(char_poly_interval(lattice, lattice.bottom(), i, "t") ==
            char_poly(restrict_to_flat(lattice, i)));
      CHECK(char_poly_interval(lattice, i, lattice.top(), "t") ==
            char_poly(contract_to_flat(lattice, i)));
    }
  }
}

TEST_CASE("lattice is invariant under hyperplane permutations") {
  Arrangement a = triangle();
  std::vector<Hyperplane> hs = a.hyperplanes();
  std::sort(hs.begin(), hs.end());
  do {
    Arrangement permuted(2, hs);
    CHECK(IntersectionLattice(permuted).size() == 8);
    CHECK(char_poly(permuted) == char_poly(a));
    CHECK(region_count(permuted) == 7);
  } while (std::next_permutation(hs.begin(), hs.end()));
}

TEST_CASE("mobius signs alternate with flat rank") {
  for (const auto& [name, a] : arrangement_catalog()) {
    CAPTURE(name);
    IntersectionLattice lattice(a);
    for (int i = 0; i < lattice.size(); ++i) {
      if (lattice.flats()[i].is_top) continue;
      Integer mu = lattice.mobius(lattice.bottom(), i);
      Integer sign = (lattice.flat_rank(i) % 2 == 0) ? 1 : -1;
      CHECK(mu * sign > 0);
    }
  }
}

TEST_CASE("conjugating t^dim gives interval characteristic polynomials") {
  IntersectionLattice lattice(triangle());
  const Poset& order = lattice.order();
  std::vector<Polynomial> values(lattice.size());
  for (int i = 0; i < lattice.size(); ++i) {
    values[i] = lattice.flats()[i].is_top
                    ? Polynomial()  // t^dim(top) = 0
                    : Polynomial::term(Monomial::variable("t", lattice.dim(i)), 1);
  }
  IncidenceFunction conj = mobius_conjugate(PointFunction(std::move(values)), order);
  for (int x = 0; x < lattice.size(); ++x) {
    for (int y = 0; y < lattice.size(); ++y) {
      if (!order.leq(x, y)) continue;
      CHECK(conj(x, y) == char_poly_interval(lattice, x, y, "t"));
    }
  }
}
