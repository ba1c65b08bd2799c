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

#ifndef MOBCONV_POSET_HPP
#define MOBCONV_POSET_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mobconv/polynomial.hpp"
#include "mobconv/report.hpp"

namespace mobconv {

// Finite poset over elements 0..size-1. The order relation is stored as
// packed bit rows; construction validates reflexivity, antisymmetry and
// transitivity and names the violated axiom.
class Poset {
 public:
  Poset() = default;  // empty poset

  // leq is row-major: leq[x*size + y] != 0 means x <= y.
  static Poset from_leq(int size, const std::vector<uint8_t>& leq);
  // Takes the reflexive-transitive closure of the given relation pairs
  // before validating antisymmetry.
  static Poset from_relations(int size,
                              const std::vector<std::pair<int, int>>& relations);
  static Poset chain(int n);
  static Poset antichain(int n);
  // Subsets of {0..num_atoms-1} ordered by inclusion; element ids are
  // bitmasks.
  static Poset boolean_lattice(int num_atoms);
  // {"size": N, "relations": [[i, j], ...]}
  static Poset from_json_text(const std::string& text);

  int size() const { return size_; }
  bool leq(int x, int y) const {
    return (rows_[static_cast<size_t>(x) * words_ + static_cast<size_t>(y) / 64] >>
            (static_cast<size_t>(y) % 64)) & 1ULL;
  }

 private:
  Poset(int size, std::vector<uint64_t> rows);
  void validate() const;

  int size_ = 0;
  size_t words_ = 0;  // words per row
  std::vector<uint64_t> rows_;
};

// Total function P -> Polynomial.
class PointFunction {
 public:
  explicit PointFunction(std::vector<Polynomial> values)
      : values_(std::move(values)) {}
  static PointFunction constant(const Poset& p, const Polynomial& value);

  int size() const { return static_cast<int>(values_.size()); }
  const Polynomial& operator()(int x) const { return values_[x]; }

  PointFunction pointwise_mul(const PointFunction& other) const;
  PointFunction pointwise_add(const PointFunction& other) const;
  bool operator==(const PointFunction& other) const = default;

 private:
  std::vector<Polynomial> values_;
};

// Function on the interval space Int(P); cells outside x <= y stay zero.
class IncidenceFunction {
 public:
  explicit IncidenceFunction(int size)
      : size_(size), cells_(static_cast<size_t>(size) * size) {}

  int size() const { return size_; }
  const Polynomial& operator()(int x, int y) const {
    return cells_[static_cast<size_t>(x) * size_ + y];
  }
  void set(int x, int y, Polynomial value) {
    cells_[static_cast<size_t>(x) * size_ + y] = std::move(value);
  }

  static IncidenceFunction zeta(const Poset& p);
  static IncidenceFunction identity(const Poset& p);

  IncidenceFunction operator+(const IncidenceFunction& other) const;
  bool operator==(const IncidenceFunction& other) const = default;

 private:
  int size_;
  std::vector<Polynomial> cells_;
};

// [a * b](x, y) = sum over x <= z <= y of a(x, z) b(z, y).
IncidenceFunction convolve(const IncidenceFunction& a, const IncidenceFunction& b,
                           const Poset& p);

// Moebius function, precomputed eagerly on all intervals.
IncidenceFunction mobius(const Poset& p);

// Diagonal embedding: delta(f)(x, x) = f(x), zero off the diagonal.
IncidenceFunction delta_of(const PointFunction& f, const Poset& p);

// Moebius conjugation mu * delta(f) * zeta.
IncidenceFunction mobius_conjugate(const PointFunction& f, const Poset& p);

// Checks mu*(fg) = mu*(f) * mu*(g) on every interval; the report carries the
// first counterexample interval on failure.
VerificationReport verify_conjugation_homomorphism(const Poset& p,
                                                   const PointFunction& f,
                                                   const PointFunction& g);

}  // namespace mobconv

#endif  // MOBCONV_POSET_HPP
