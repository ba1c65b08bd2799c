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

#include "mobconv/poset.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "mobconv/errors.hpp"

namespace mobconv {

namespace {

size_t words_for(int size) { return (static_cast<size_t>(size) + 63) / 64; }

void set_bit(std::vector<uint64_t>& rows, size_t words, int x, int y) {
  rows[static_cast<size_t>(x) * words + static_cast<size_t>(y) / 64] |=
      1ULL << (static_cast<size_t>(y) % 64);
}

}  // namespace

Poset::Poset(int size, std::vector<uint64_t> rows)
    : size_(size), words_(words_for(size)), rows_(std::move(rows)) {}

void Poset::validate() const {
  for (int x = 0; x < size_; ++x) {
    if (!leq(x, x)) {
      throw ValidationError("reflexivity violated at element " + std::to_string(x));
    }
  }
  for (int x = 0; x < size_; ++x) {
    for (int y = x + 1; y < size_; ++y) {
      if (leq(x, y) && leq(y, x)) {
        throw ValidationError("antisymmetry violated for elements " +
                              std::to_string(x) + " and " + std::to_string(y));
      }
    }
  }
  // x <= y forces row(y) subset of row(x)'s up-set; word-level check.
  for (int x = 0; x < size_; ++x) {
    const uint64_t* rx = &rows_[static_cast<size_t>(x) * words_];
    for (int y = 0; y < size_; ++y) {
      if (!leq(x, y) || x == y) continue;
      const uint64_t* ry = &rows_[static_cast<size_t>(y) * words_];
      for (size_t w = 0; w < words_; ++w) {
        if (ry[w] & ~rx[w]) {
          // Find a witness z with y <= z but not x <= z.
          for (int z = 0; z < size_; ++z) {
            if (leq(y, z) && !leq(x, z)) {
              throw ValidationError(
                  "transitivity violated: " + std::to_string(x) + " <= " +
                  std::to_string(y) + " <= " + std::to_string(z) +
                  " but not " + std::to_string(x) + " <= " + std::to_string(z));
            }
          }
        }
      }
    }
  }
}

Poset Poset::from_leq(int size, const std::vector<uint8_t>& leq) {
  if (size < 0 || leq.size() != static_cast<size_t>(size) * size) {
    throw ValidationError("relation matrix must be square of the given size");
  }
  std::vector<uint64_t> rows(words_for(size) * size, 0);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      if (leq[static_cast<size_t>(x) * size + y]) set_bit(rows, words_for(size), x, y);
    }
  }
  Poset p(size, std::move(rows));
  p.validate();
  return p;
}

Poset Poset::from_relations(int size,
                            const std::vector<std::pair<int, int>>& relations) {
  if (size < 0) throw ValidationError("poset size must be non-negative");
  size_t words = words_for(size);
  std::vector<uint64_t> rows(words * size, 0);
  for (int x = 0; x < size; ++x) set_bit(rows, words, x, x);
  for (const auto& [i, j] : relations) {
    if (i < 0 || i >= size || j < 0 || j >= size) {
      throw ValidationError("relation (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
    }
    set_bit(rows, words, i, j);
  }
  // Warshall closure on bit rows.
  for (int k = 0; k < size; ++k) {
    const uint64_t* rk = &rows[static_cast<size_t>(k) * words];
    for (int i = 0; i < size; ++i) {
      if ((rows[static_cast<size_t>(i) * words + static_cast<size_t>(k) / 64] >>
           (static_cast<size_t>(k) % 64)) & 1ULL) {
        uint64_t* ri = &rows[static_cast<size_t>(i) * words];
        for (size_t w = 0; w < words; ++w) ri[w] |= rk[w];
      }
    }
  }
  Poset p(size, std::move(rows));
  p.validate();
  return p;
}

Poset Poset::chain(int n) {
  std::vector<uint64_t> rows(words_for(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) set_bit(rows, words_for(n), x, y);
  }
  Poset p(n, std::move(rows));
  p.validate();
  return p;
}

Poset Poset::antichain(int n) {
  std::vector<uint64_t> rows(words_for(n) * n, 0);
  for (int x = 0; x < n; ++x) set_bit(rows, words_for(n), x, x);
  Poset p(n, std::move(rows));
  p.validate();
  return p;
}

Poset Poset::boolean_lattice(int num_atoms) {
  if (num_atoms < 0 || num_atoms > 20) {
    throw ValidationError("boolean lattice supported for 0..20 atoms");
  }
  int n = 1 << num_atoms;
  std::vector<uint64_t> rows(words_for(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if ((a & ~b) == 0) set_bit(rows, words_for(n), a, b);
    }
  }
  Poset p(n, std::move(rows));
  p.validate();
  return p;
}

Poset Poset::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("size") || !j.contains("relations")) {
    throw ParseError("poset JSON needs \"size\" and \"relations\"");
  }
  if (!j["size"].is_number_integer()) throw ParseError("\"size\" must be an integer");
  int size = j["size"].get<int>();
  std::vector<std::pair<int, int>> relations;
  if (!j["relations"].is_array()) throw ParseError("\"relations\" must be an array");
  for (const auto& r : j["relations"]) {
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
        !r[1].is_number_integer()) {
      throw ParseError("each relation must be an integer pair [i, j]");
    }
    relations.emplace_back(r[0].get<int>(), r[1].get<int>());
  }
  return from_relations(size, relations);
}

PointFunction PointFunction::constant(const Poset& p, const Polynomial& value) {
  return PointFunction(std::vector<Polynomial>(p.size(), value));
}

PointFunction PointFunction::pointwise_mul(const PointFunction& other) const {
  std::vector<Polynomial> out(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] * other.values_[i];
  return PointFunction(std::move(out));
}

PointFunction PointFunction::pointwise_add(const PointFunction& other) const {
  std::vector<Polynomial> out(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] + other.values_[i];
  return PointFunction(std::move(out));
}

IncidenceFunction IncidenceFunction::zeta(const Poset& p) {
  IncidenceFunction out(p.size());
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) out.set(x, y, Polynomial(1));
    }
  }
  return out;
}

IncidenceFunction IncidenceFunction::identity(const Poset& p) {
  IncidenceFunction out(p.size());
  for (int x = 0; x < p.size(); ++x) out.set(x, x, Polynomial(1));
  return out;
}

IncidenceFunction IncidenceFunction::operator+(const IncidenceFunction& other) const {
  IncidenceFunction out(size_);
  for (size_t i = 0; i < cells_.size(); ++i) {
    out.cells_[i] = cells_[i] + other.cells_[i];
  }
  return out;
}

IncidenceFunction convolve(const IncidenceFunction& a, const IncidenceFunction& b,
                           const Poset& p) {
  int n = p.size();
  IncidenceFunction out(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      Polynomial acc;
      for (int z = 0; z < n; ++z) {
        if (p.leq(x, z) && p.leq(z, y)) acc += a(x, z) * b(z, y);
      }
      out.set(x, y, std::move(acc));
    }
  }
  return out;
}

IncidenceFunction mobius(const Poset& p) {
  int n = p.size();
  // Linear extension: sort by down-set size, so every z < y precedes y.
  std::vector<int> down(n, 0);
  for (int y = 0; y < n; ++y) {
    for (int z = 0; z < n; ++z) {
      if (p.leq(z, y)) ++down[y];
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return down[a] < down[b]; });

  std::vector<Integer> table(static_cast<size_t>(n) * n, Integer(0));
  auto mu = [&](int x, int y) -> Integer& {
    return table[static_cast<size_t>(x) * n + y];
  };
  for (int x = 0; x < n; ++x) {
    mu(x, x) = 1;
    for (int y : order) {
      if (y == x || !p.leq(x, y)) continue;
      Integer acc = 0;
      for (int z = 0; z < n; ++z) {
        if (z != y && p.leq(x, z) && p.leq(z, y)) acc += mu(x, z);
      }
      mu(x, y) = -acc;
    }
  }

  IncidenceFunction out(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (p.leq(x, y)) out.set(x, y, Polynomial(mu(x, y)));
    }
  }
  return out;
}

IncidenceFunction delta_of(const PointFunction& f, const Poset& p) {
  if (f.size() != p.size()) {
    throw ValidationError("point function size does not match poset");
  }
  IncidenceFunction out(p.size());
  for (int x = 0; x < p.size(); ++x) out.set(x, x, f(x));
  return out;
}

IncidenceFunction mobius_conjugate(const PointFunction& f, const Poset& p) {
  IncidenceFunction mu = mobius(p);
  IncidenceFunction zeta = IncidenceFunction::zeta(p);
  return convolve(convolve(mu, delta_of(f, p), p), zeta, p);
}

VerificationReport verify_conjugation_homomorphism(const Poset& p,
                                                   const PointFunction& f,
                                                   const PointFunction& g) {
  Stopwatch timer;
  VerificationReport report;
  report.identity = "conjugation";

  IncidenceFunction lhs = mobius_conjugate(f.pointwise_mul(g), p);
  IncidenceFunction rhs = convolve(mobius_conjugate(f, p), mobius_conjugate(g, p), p);

  long long intervals = 0;
  for (int x = 0; x < p.size() && report.pass; ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y)) continue;
      ++intervals;
      if (lhs(x, y) != rhs(x, y)) {
        report.pass = false;
        report.counterexample = "interval (" + std::to_string(x) + "," +
                                std::to_string(y) + "): mu*(fg)=" +
                                lhs(x, y).str() + " vs " + rhs(x, y).str();
        break;
      }
    }
  }
  report.add("intervals", intervals);
  report.millis = timer.elapsed_ms();
  return report;
}

}  // namespace mobconv
