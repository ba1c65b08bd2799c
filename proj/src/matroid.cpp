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

#include "mobconv/matroid.hpp"

#include <bit>
#include <numeric>

#include "json.hpp"
#include "mobconv/errors.hpp"
#include "mobconv/linalg.hpp"
#include "mobconv/poset.hpp"

namespace mobconv {

namespace {

std::string mask_subset_str(uint32_t mask) {
  std::vector<int> elems;
  for (int i = 0; mask >> i; ++i) {
    if ((mask >> i) & 1u) elems.push_back(i);
  }
  return subset_str(elems);
}

std::string var_x(int e) { return "x_" + std::to_string(e); }
std::string var_y(int e) { return "y_" + std::to_string(e); }

// Submask walk including the empty set.
template <typename F>
void for_each_submask(uint32_t mask, F&& f) {
  uint32_t sub = mask;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

}  // namespace

Matroid Matroid::from_rank_table(int ground_size, std::vector<int> ranks) {
  if (ground_size < 0 || ground_size > kMaxGroundSize) {
    throw ValidationError("ground set size must be between 0 and " +
                          std::to_string(kMaxGroundSize));
  }
  if (ranks.size() != (1u << ground_size)) {
    throw ValidationError("rank table must have 2^n entries");
  }
  if (ranks[0] != 0) {
    throw ValidationError("rank axiom violated: r({}) must be 0, got " +
                          std::to_string(ranks[0]));
  }
  for (uint32_t a = 0; a < ranks.size(); ++a) {
    for (int e = 0; e < ground_size; ++e) {
      if ((a >> e) & 1u) continue;
      uint32_t ae = a | (1u << e);
      if (ranks[ae] < ranks[a] || ranks[ae] > ranks[a] + 1) {
        throw ValidationError(
            "rank axiom violated (unit increase): r(" + mask_subset_str(ae) +
            ")=" + std::to_string(ranks[ae]) + " vs r(" + mask_subset_str(a) +
            ")=" + std::to_string(ranks[a]));
      }
    }
  }
  for (uint32_t a = 0; a < ranks.size(); ++a) {
    for (uint32_t b = a + 1; b < ranks.size(); ++b) {
      if (ranks[a | b] + ranks[a & b] > ranks[a] + ranks[b]) {
        throw ValidationError(
            "rank axiom violated (submodularity) at witness pair A=" +
            mask_subset_str(a) + ", B=" + mask_subset_str(b) + ": r(A|B)+r(A&B)=" +
            std::to_string(ranks[a | b] + ranks[a & b]) + " > r(A)+r(B)=" +
            std::to_string(ranks[a] + ranks[b]));
      }
    }
  }
  return Matroid(ground_size, std::move(ranks));
}

Matroid Matroid::uniform(int rank, int ground_size) {
  if (ground_size < 0 || ground_size > kMaxGroundSize || rank < 0 ||
      rank > ground_size) {
    throw ValidationError("uniform matroid needs 0 <= r <= n <= " +
                          std::to_string(kMaxGroundSize));
  }
  std::vector<int> ranks(1u << ground_size);
  for (uint32_t a = 0; a < ranks.size(); ++a) {
    ranks[a] = std::min(std::popcount(a), rank);
  }
  return from_rank_table(ground_size, std::move(ranks));
}

Matroid Matroid::graphic(int vertex_count,
                         const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0) throw ValidationError("vertex count must be non-negative");
  if (edges.size() > kMaxGroundSize) {
    throw ValidationError("graphic matroid supports at most " +
                          std::to_string(kMaxGroundSize) + " edges");
  }
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw ValidationError("edge endpoint out of range");
    }
  }
  int n = static_cast<int>(edges.size());
  std::vector<int> ranks(1u << n);
  std::vector<int> parent(vertex_count);
  for (uint32_t a = 0; a < ranks.size(); ++a) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = vertex_count;
    for (int e = 0; e < n; ++e) {
      if (!((a >> e) & 1u)) continue;
      int ru = find(edges[e].first);
      int rv = find(edges[e].second);
      if (ru != rv) {
        parent[ru] = rv;
        --components;
      }
    }
    ranks[a] = vertex_count - components;
  }
  return from_rank_table(n, std::move(ranks));
}

Matroid Matroid::linear(const std::vector<std::vector<Integer>>& columns) {
  if (columns.size() > kMaxGroundSize) {
    throw ValidationError("linear matroid supports at most " +
                          std::to_string(kMaxGroundSize) + " columns");
  }
  size_t height = columns.empty() ? 0 : columns[0].size();
  for (const auto& col : columns) {
    if (col.size() != height) {
      throw ValidationError("all columns must have the same length");
    }
  }
  int n = static_cast<int>(columns.size());
  std::vector<int> ranks(1u << n);
  for (uint32_t a = 0; a < ranks.size(); ++a) {
    std::vector<std::vector<Integer>> rows;
    for (int e = 0; e < n; ++e) {
      if ((a >> e) & 1u) rows.push_back(columns[e]);
    }
    ranks[a] = integer_rank(std::move(rows));
  }
  return from_rank_table(n, std::move(ranks));
}

Matroid Matroid::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || j.size() != 1) {
    throw ParseError(
        "matroid JSON must contain exactly one of \"uniform\", \"graph\", "
        "\"linear\", \"rank_table\"");
  }
  if (j.contains("uniform")) {
    const auto& u = j["uniform"];
    if (!u.is_object() || !u.contains("r") || !u.contains("n") ||
        !u["r"].is_number_integer() || !u["n"].is_number_integer()) {
      throw ParseError("\"uniform\" needs integer fields r and n");
    }
    return uniform(u["r"].get<int>(), u["n"].get<int>());
  }
  if (j.contains("graph")) {
    const auto& g = j["graph"];
    if (!g.is_object() || !g.contains("vertices") || !g.contains("edges") ||
        !g["vertices"].is_number_integer() || !g["edges"].is_array()) {
      throw ParseError("\"graph\" needs integer \"vertices\" and an \"edges\" array");
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw ParseError("each edge must be an integer pair [u, v]");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return graphic(g["vertices"].get<int>(), edges);
  }
  if (j.contains("linear")) {
    const auto& l = j["linear"];
    if (!l.is_object() || !l.contains("columns") || !l["columns"].is_array()) {
      throw ParseError("\"linear\" needs a \"columns\" array");
    }
    std::vector<std::vector<Integer>> columns;
    for (const auto& col : l["columns"]) {
      if (!col.is_array()) throw ParseError("each column must be an integer array");
      std::vector<Integer> c;
      for (const auto& v : col) {
        if (!v.is_number_integer()) {
          throw ParseError("column entries must be integers");
        }
        c.emplace_back(v.get<long>());
      }
      columns.push_back(std::move(c));
    }
    return linear(columns);
  }
  if (j.contains("rank_table")) {
    const auto& r = j["rank_table"];
    if (!r.is_object() || !r.contains("n") || !r.contains("ranks") ||
        !r["n"].is_number_integer() || !r["ranks"].is_array()) {
      throw ParseError("\"rank_table\" needs integer \"n\" and a \"ranks\" array");
    }
    std::vector<int> ranks;
    for (const auto& v : r["ranks"]) {
      if (!v.is_number_integer()) throw ParseError("ranks must be integers");
      ranks.push_back(v.get<int>());
    }
    return from_rank_table(r["n"].get<int>(), std::move(ranks));
  }
  throw ParseError("unknown matroid kind");
}

Matroid Matroid::restriction(uint32_t keep) const {
  std::vector<int> elems;
  for (int e = 0; e < ground_size_; ++e) {
    if ((keep >> e) & 1u) elems.push_back(e);
  }
  int n = static_cast<int>(elems.size());
  std::vector<int> ranks(1u << n);
  for (uint32_t a = 0; a < ranks.size(); ++a) {
    uint32_t expanded = 0;
    for (int i = 0; i < n; ++i) {
      if ((a >> i) & 1u) expanded |= 1u << elems[i];
    }
    ranks[a] = rank(expanded);
  }
  return Matroid(n, std::move(ranks));
}

Matroid Matroid::contraction(uint32_t away) const {
  std::vector<int> elems;
  for (int e = 0; e < ground_size_; ++e) {
    if (!((away >> e) & 1u)) elems.push_back(e);
  }
  int n = static_cast<int>(elems.size());
  int base = rank(away);
  std::vector<int> ranks(1u << n);
  for (uint32_t a = 0; a < ranks.size(); ++a) {
    uint32_t expanded = away;
    for (int i = 0; i < n; ++i) {
      if ((a >> i) & 1u) expanded |= 1u << elems[i];
    }
    ranks[a] = rank(expanded) - base;
  }
  return Matroid(n, std::move(ranks));
}

Polynomial rank_gen_poly(const Matroid& m) {
  Polynomial out;
  int r = m.rank();
  for (uint32_t a = 0; a < (1u << m.ground_size()); ++a) {
    unsigned xe = static_cast<unsigned>(r - m.rank(a));
    unsigned ye = static_cast<unsigned>(std::popcount(a) - m.rank(a));
    out += Polynomial::term(
        Monomial::variable("x", xe) * Monomial::variable("y", ye), 1);
  }
  return out;
}

Polynomial tutte_poly(const Matroid& m) {
  return rank_gen_poly(m).substitute(
      {{"x", Polynomial::variable("x") - Polynomial(1)},
       {"y", Polynomial::variable("y") - Polynomial(1)}});
}

Polynomial subset_corank_poly(const Matroid& m) {
  Polynomial out;
  int r = m.rank();
  for (uint32_t a = 0; a < (1u << m.ground_size()); ++a) {
    Monomial mono = Monomial::variable("lambda", static_cast<unsigned>(r - m.rank(a)));
    for (int e = 0; e < m.ground_size(); ++e) {
      if ((a >> e) & 1u) mono = mono * Monomial::variable(var_x(e));
    }
    out += Polynomial::term(std::move(mono), 1);
  }
  return out;
}

VerificationReport verify_krs(const Matroid& m) {
  Stopwatch timer;
  VerificationReport report;
  report.identity = "krs";

  Polynomial tutte = tutte_poly(m);
  std::map<std::string, Polynomial> x_to_zero{{"x", Polynomial()}};
  std::map<std::string, Polynomial> y_to_zero{{"y", Polynomial()}};
  Polynomial convolution;
  for (uint32_t a = 0; a < (1u << m.ground_size()); ++a) {
    convolution += tutte_poly(m.restriction(a)).substitute(x_to_zero) *
                   tutte_poly(m.contraction(a)).substitute(y_to_zero);
  }

  // Conjugation route on (2^E, subset): f(A) = (-x)^(r(M)-r(A)),
  // g(A) = (-y)^(|A|-r(A)); mu*(fg) at (empty, E) is (-1)^r(M) R_M(x, y).
  Poset booleans = Poset::boolean_lattice(m.ground_size());
  int r = m.rank();
  std::vector<Polynomial> values(booleans.size());
  for (uint32_t a = 0; a < (1u << m.ground_size()); ++a) {
    unsigned xe = static_cast<unsigned>(r - m.rank(a));
    unsigned ye = static_cast<unsigned>(std::popcount(a) - m.rank(a));
    Integer sign = ((xe + ye) % 2 == 0) ? 1 : -1;
    values[a] = Polynomial::term(
        Monomial::variable("x", xe) * Monomial::variable("y", ye), sign);
  }
  IncidenceFunction conjugated =
      mobius_conjugate(PointFunction(std::move(values)), booleans);
  Polynomial bridge = conjugated(0, static_cast<int>(m.full_set()));
  Polynomial signed_rank_gen = rank_gen_poly(m);
  if (r % 2 != 0) signed_rank_gen = -signed_rank_gen;

  report.add("tutte", tutte.str());
  report.add("convolution_sum", convolution.str());
  report.add("conjugation", bridge.str());
  report.add("signed_rank_gen", signed_rank_gen.str());
  report.pass = tutte == convolution && bridge == signed_rank_gen;
  if (tutte != convolution) {
    report.counterexample = "tutte convolution mismatch";
  } else if (bridge != signed_rank_gen) {
    report.counterexample = "conjugation bridge mismatch";
  }
  report.millis = timer.elapsed_ms();
  return report;
}

namespace {

// SC_{M'}(-1, lambda): every indexed variable set to -1.
Polynomial sc_at_minus_one(const Matroid& m) {
  Polynomial out;
  int r = m.rank();
  for (uint32_t a = 0; a < (1u << m.ground_size()); ++a) {
    Integer sign = (std::popcount(a) % 2 == 0) ? 1 : -1;
    out += Polynomial::term(
        Monomial::variable("lambda", static_cast<unsigned>(r - m.rank(a))), sign);
  }
  return out;
}

}  // namespace

VerificationReport verify_kung_identity5(const Matroid& m) {
  Stopwatch timer;
  VerificationReport report;
  report.identity = "kung5";
  report.note = "summation index read as T = A";

  Polynomial lhs = subset_corank_poly(m);
  Polynomial rhs;
  for (uint32_t a = 0; a < (1u << m.ground_size()); ++a) {
    Polynomial shifted(1);
    for (int e = 0; e < m.ground_size(); ++e) {
      if ((a >> e) & 1u) {
        shifted *= Polynomial::variable(var_x(e)) + Polynomial(1);
      }
    }
    rhs += shifted * sc_at_minus_one(m.contraction(a));
  }

  report.add("sc", lhs.str());
  report.add("convolution_sum", rhs.str());
  report.pass = lhs == rhs;
  if (!report.pass) report.counterexample = "subset-corank convolution mismatch";
  report.millis = timer.elapsed_ms();
  return report;
}

VerificationReport verify_kung_identity1(const Matroid& m) {
  Stopwatch timer;
  VerificationReport report;
  report.identity = "kung1";
  report.note = "summation indices read as S = T = A";

  // LHS by substitution into SC_M: x_e -> x_e y_e, lambda -> lambda xi.
  std::map<std::string, Polynomial> subst{
      {"lambda", Polynomial::variable("lambda") * Polynomial::variable("xi")}};
  for (int e = 0; e < m.ground_size(); ++e) {
    subst[var_x(e)] = Polynomial::variable(var_x(e)) * Polynomial::variable(var_y(e));
  }
  Polynomial lhs = subset_corank_poly(m).substitute(subst);

  int r = m.rank();
  Polynomial rhs;
  for (uint32_t a = 0; a < (1u << m.ground_size()); ++a) {
    // lambda^(r(M) - r(M|A)) (-y)_A, with matroid-level element names.
    Polynomial prefix = Polynomial::term(
        Monomial::variable("lambda", static_cast<unsigned>(r - m.rank(a))), 1);
    for (int e = 0; e < m.ground_size(); ++e) {
      if ((a >> e) & 1u) prefix *= -Polynomial::variable(var_y(e));
    }
    // SC_{M|A}(-x, lambda) = sum over B in A of (-1)^|B| x_B lambda^(r(A)-r(B)).
    Polynomial restricted;
    for_each_submask(a, [&](uint32_t b) {
      Monomial mono =
          Monomial::variable("lambda", static_cast<unsigned>(m.rank(a) - m.rank(b)));
      for (int e = 0; e < m.ground_size(); ++e) {
        if ((b >> e) & 1u) mono = mono * Monomial::variable(var_x(e));
      }
      Integer sign = (std::popcount(b) % 2 == 0) ? 1 : -1;
      restricted += Polynomial::term(std::move(mono), sign);
    });
    // SC_{M/A}(y, xi) = sum over B in E-A of y_B xi^(r(M)-r(B|A)).
    Polynomial contracted;
    for_each_submask(m.full_set() & ~a, [&](uint32_t b) {
      Monomial mono =
          Monomial::variable("xi", static_cast<unsigned>(r - m.rank(b | a)));
      for (int e = 0; e < m.ground_size(); ++e) {
        if ((b >> e) & 1u) mono = mono * Monomial::variable(var_y(e));
      }
      contracted += Polynomial::term(std::move(mono), 1);
    });
    rhs += prefix * restricted * contracted;
  }

  report.add("sc_xy", lhs.str());
  report.add("convolution_sum", rhs.str());
  report.pass = lhs == rhs;
  if (!report.pass) report.counterexample = "subset-corank convolution mismatch";
  report.millis = timer.elapsed_ms();
  return report;
}

}  // namespace mobconv
