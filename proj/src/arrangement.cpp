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

#include "mobconv/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "mobconv/errors.hpp"

namespace mobconv {

Hyperplane Hyperplane::make(std::vector<Integer> normal, Integer offset) {
  bool all_zero = std::all_of(normal.begin(), normal.end(),
                              [](const Integer& x) { return x == 0; });
  if (normal.empty() || all_zero) {
    throw ValidationError("hyperplane normal must be nonzero");
  }
  Integer content = abs(offset);
  for (const auto& x : normal) content = gcd_int(content, x);
  if (content > 1) {
    for (auto& x : normal) x = divexact(x, content);
    offset = divexact(offset, content);
  }
  for (const auto& x : normal) {
    if (x != 0) {
      if (x < 0) {
        for (auto& y : normal) y = -y;
        offset = -offset;
      }
      break;
    }
  }
  return Hyperplane{std::move(normal), std::move(offset)};
}

bool Hyperplane::operator<(const Hyperplane& other) const {
  if (normal != other.normal) {
    return std::lexicographical_compare(normal.begin(), normal.end(),
                                        other.normal.begin(), other.normal.end());
  }
  return offset < other.offset;
}

std::string Hyperplane::str() const {
  std::string out;
  bool first = true;
  for (size_t i = 0; i < normal.size(); ++i) {
    if (normal[i] == 0) continue;
    Integer mag = abs(normal[i]);
    if (first) {
      if (normal[i] < 0) out += "-";
      first = false;
    } else {
      out += normal[i] < 0 ? " - " : " + ";
    }
    if (mag != 1) {
      out += mag.get_str();
      out += "*";
    }
    out += "x" + std::to_string(i);
  }
  out += " = " + offset.get_str();
  return out;
}

Arrangement::Arrangement(int dimension, std::vector<Hyperplane> hyperplanes)
    : dimension_(dimension), hyperplanes_(std::move(hyperplanes)) {
  if (dimension < 0) throw ValidationError("dimension must be non-negative");
  for (const auto& h : hyperplanes_) {
    if (static_cast<int>(h.normal.size()) != dimension) {
      throw ValidationError("hyperplane normal length does not match dimension");
    }
  }
  for (size_t i = 0; i < hyperplanes_.size(); ++i) {
    for (size_t j = i + 1; j < hyperplanes_.size(); ++j) {
      if (hyperplanes_[i] == hyperplanes_[j]) {
        throw ValidationError("duplicate hyperplane after normalization: indices " +
                              std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
}

Arrangement Arrangement::merged(int dimension, std::vector<Hyperplane> hyperplanes) {
  std::sort(hyperplanes.begin(), hyperplanes.end());
  hyperplanes.erase(std::unique(hyperplanes.begin(), hyperplanes.end()),
                    hyperplanes.end());
  return Arrangement(dimension, std::move(hyperplanes));
}

Arrangement Arrangement::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("hyperplanes")) {
    throw ParseError("arrangement JSON needs \"n\" and \"hyperplanes\"");
  }
  if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  int n = j["n"].get<int>();
  if (!j["hyperplanes"].is_array()) {
    throw ParseError("\"hyperplanes\" must be an array");
  }
  std::vector<Hyperplane> hs;
  for (const auto& h : j["hyperplanes"]) {
    if (!h.is_object() || !h.contains("a") || !h.contains("b") ||
        !h["a"].is_array() || !h["b"].is_number_integer()) {
      throw ParseError("each hyperplane must be {\"a\": [ints], \"b\": int}");
    }
    std::vector<Integer> normal;
    for (const auto& c : h["a"]) {
      if (!c.is_number_integer()) {
        throw ParseError("hyperplane coefficients must be integers");
      }
      normal.emplace_back(c.get<long>());
    }
    hs.push_back(Hyperplane::make(std::move(normal), Integer(h["b"].get<long>())));
  }
  return Arrangement(n, std::move(hs));
}

namespace {

std::vector<int> mask_bits(uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask >> i; ++i) {
    if ((mask >> i) & 1ULL) out.push_back(i);
  }
  return out;
}

uint64_t closure_mask_of(const Arrangement& a, const AffineSubspace& s) {
  uint64_t mask = 0;
  for (int i = 0; i < a.size(); ++i) {
    if (subspace_in_hyperplane(s, a.hyperplanes()[i].constraint())) {
      mask |= 1ULL << i;
    }
  }
  return mask;
}

std::optional<AffineSubspace> intersect_subset(const Arrangement& a, uint64_t mask) {
  std::vector<LinearConstraint> cs;
  for (int i : mask_bits(mask)) cs.push_back(a.hyperplanes()[i].constraint());
  return intersect_affine(a.dimension(), cs);
}

}  // namespace

IntersectionLattice::IntersectionLattice(const Arrangement& a) : arrangement_(a) {
  if (a.size() > 62) {
    throw ValidationError("arrangements with more than 62 hyperplanes are not supported");
  }
  int n = a.dimension();

  // Closure-system walk: keep intersecting known flats with one more
  // hyperplane; dedup by closure set.
  std::map<uint64_t, AffineSubspace> found;
  AffineSubspace whole = *intersect_affine(n, {});
  found.emplace(closure_mask_of(a, whole), std::move(whole));
  std::vector<uint64_t> work{found.begin()->first};
  while (!work.empty()) {
    uint64_t mask = work.back();
    work.pop_back();
    for (int i = 0; i < a.size(); ++i) {
      if ((mask >> i) & 1ULL) continue;
      auto sub = intersect_subset(a, mask | (1ULL << i));
      if (!sub) continue;
      uint64_t cmask = closure_mask_of(a, *sub);
      if (found.emplace(cmask, std::move(*sub)).second) work.push_back(cmask);
    }
  }

  flats_.reserve(found.size() + 1);
  for (auto& [mask, sub] : found) {
    Flat f;
    f.closure_mask = mask;
    f.closure = mask_bits(mask);
    f.subspace = std::move(sub);
    flats_.push_back(std::move(f));
  }
  std::sort(flats_.begin(), flats_.end(), [n](const Flat& x, const Flat& y) {
    int cx = n - x.dim();
    int cy = n - y.dim();
    if (cx != cy) return cx < cy;
    return x.closure_mask < y.closure_mask;
  });
  Flat top;
  top.is_top = true;
  flats_.push_back(std::move(top));

  int count = size();
  std::vector<uint8_t> leq(static_cast<size_t>(count) * count, 0);
  for (int x = 0; x < count; ++x) {
    for (int y = 0; y < count; ++y) {
      bool below;
      if (flats_[y].is_top) {
        below = true;
      } else if (flats_[x].is_top) {
        below = false;
      } else {
        below = (flats_[x].closure_mask & ~flats_[y].closure_mask) == 0;
      }
      if (below) leq[static_cast<size_t>(x) * count + y] = 1;
    }
  }
  order_ = Poset::from_leq(count, leq);

  IncidenceFunction mu = mobconv::mobius(order_);
  mobius_.assign(static_cast<size_t>(count) * count, Integer(0));
  for (int x = 0; x < count; ++x) {
    for (int y = 0; y < count; ++y) {
      if (order_.leq(x, y)) {
        mobius_[static_cast<size_t>(x) * count + y] = mu(x, y).constant_value();
      }
    }
  }

  rank_ = 0;
  for (const auto& f : flats_) {
    if (!f.is_top) rank_ = std::max(rank_, n - f.dim());
  }
}

int IntersectionLattice::dim(int flat) const {
  if (flats_[flat].is_top) {
    throw ValidationError("the artificial top flat has no dimension");
  }
  return flats_[flat].dim();
}

int IntersectionLattice::flat_rank(int flat) const {
  return arrangement_.dimension() - dim(flat);
}

std::string IntersectionLattice::flat_label(int flat) const {
  if (flats_[flat].is_top) return "top";
  if (flats_[flat].closure_mask == 0) return "ambient";
  return subset_str(flats_[flat].closure);
}

IntersectionLattice build_lattice(const Arrangement& a) {
  return IntersectionLattice(a);
}

Polynomial char_poly_interval(const IntersectionLattice& lattice, int x, int y,
                              const std::string& var) {
  if (x < 0 || y < 0 || x >= lattice.size() || y >= lattice.size()) {
    throw ValidationError("flat index out of range");
  }
  if (!lattice.order().leq(x, y)) {
    throw ValidationError("flats are not ordered: " + lattice.flat_label(x) +
                          " is not below " + lattice.flat_label(y));
  }
  std::map<unsigned, Integer> coeffs;
  for (int z = 0; z < lattice.size(); ++z) {
    if (!lattice.order().leq(x, z) || !lattice.order().leq(z, y)) continue;
    if (lattice.flats()[z].is_top) continue;  // t^dim(top) = t^inf = 0
    coeffs[static_cast<unsigned>(lattice.dim(z))] += lattice.mobius(x, z);
  }
  Polynomial out;
  for (const auto& [exp, c] : coeffs) {
    out += Polynomial::term(Monomial::variable(var, exp), c);
  }
  return out;
}

Polynomial char_poly(const IntersectionLattice& lattice, const std::string& var) {
  return char_poly_interval(lattice, lattice.bottom(), lattice.top(), var);
}

Polynomial char_poly(const Arrangement& a, const std::string& var) {
  return char_poly(IntersectionLattice(a), var);
}

Arrangement restrict_to_flat(const IntersectionLattice& lattice, int flat) {
  const Flat& f = lattice.flats()[flat];
  if (f.is_top) throw ValidationError("cannot restrict to the artificial top");
  std::vector<Hyperplane> hs;
  for (int i : f.closure) hs.push_back(lattice.arrangement().hyperplanes()[i]);
  return Arrangement(lattice.arrangement().dimension(), std::move(hs));
}

Arrangement contract_to_flat(const IntersectionLattice& lattice, int flat) {
  const Flat& f = lattice.flats()[flat];
  if (f.is_top) throw ValidationError("cannot contract to the artificial top");
  const AffineSubspace& s = *f.subspace;
  const Arrangement& a = lattice.arrangement();
  int k = s.dim;

  std::vector<Hyperplane> traces;
  for (int i = 0; i < a.size(); ++i) {
    if ((f.closure_mask >> i) & 1ULL) continue;
    const Hyperplane& h = a.hyperplanes()[i];
    // In flat coordinates u: (a.d_1, ..., a.d_k) . u = b - a.p.
    std::vector<Integer> coeffs(k);
    bool all_zero = true;
    for (int j = 0; j < k; ++j) {
      Rational c = dot(h.normal, s.directions[j]);
      coeffs[j] = c.get_num();  // directions are denominator-free
      if (coeffs[j] != 0) all_zero = false;
    }
    if (all_zero) continue;  // trace is empty: h is parallel to the flat
    Rational rhs = Rational(h.offset) - dot(h.normal, s.basepoint);
    Integer den = rhs.get_den();
    if (den != 1) {
      for (auto& c : coeffs) c *= den;
    }
    traces.push_back(Hyperplane::make(std::move(coeffs), rhs.get_num()));
  }
  return Arrangement::merged(k, std::move(traces));
}

Integer region_count(const IntersectionLattice& lattice) {
  Integer chi_at = char_poly(lattice).eval({{"t", Integer(-1)}});
  int n = lattice.arrangement().dimension();
  Integer r = (n % 2 == 0) ? chi_at : -chi_at;
  if (r < 0) throw std::logic_error("negative region count");
  return r;
}

Integer bounded_region_count(const IntersectionLattice& lattice) {
  Integer chi_at = char_poly(lattice).eval({{"t", Integer(1)}});
  Integer b = (lattice.rank() % 2 == 0) ? chi_at : -chi_at;
  if (b < 0) throw std::logic_error("negative bounded region count");
  return b;
}

Integer region_count(const Arrangement& a) {
  return region_count(IntersectionLattice(a));
}

Integer bounded_region_count(const Arrangement& a) {
  return bounded_region_count(IntersectionLattice(a));
}

VerificationReport verify_interval_convolution(const Arrangement& a) {
  Stopwatch timer;
  VerificationReport report;
  report.identity = "interval-convolution";

  IntersectionLattice lattice(a);
  const std::string s = "s";
  const std::string t = "t";
  std::map<std::string, Polynomial> to_st{
      {t, Polynomial::variable(s) * Polynomial::variable(t)}};

  long long pairs = 0;
  for (int x = 0; x < lattice.size() && report.pass; ++x) {
    for (int y = 0; y < lattice.size(); ++y) {
      if (!lattice.order().leq(x, y)) continue;
      ++pairs;
      Polynomial lhs = char_poly_interval(lattice, x, y, t).substitute(to_st);
      Polynomial rhs;
      for (int z = 0; z < lattice.size(); ++z) {
        if (!lattice.order().leq(x, z) || !lattice.order().leq(z, y)) continue;
        rhs += char_poly_interval(lattice, x, z, s) *
               char_poly_interval(lattice, z, y, t);
      }
      if (lhs != rhs) {
        report.pass = false;
        report.counterexample = "X=" + lattice.flat_label(x) +
                                " Y=" + lattice.flat_label(y) + ": " + lhs.str() +
                                " vs " + rhs.str();
        break;
      }
    }
  }

  Polynomial global_lhs =
      char_poly_interval(lattice, lattice.bottom(), lattice.top(), t)
          .substitute(to_st);
  Polynomial global_rhs;
  for (int z = 0; z < lattice.size(); ++z) {
    global_rhs += char_poly_interval(lattice, lattice.bottom(), z, s) *
                  char_poly_interval(lattice, z, lattice.top(), t);
  }
  report.add("pairs", pairs);
  report.add("chi_st", global_lhs.str());
  report.add("convolution_sum", global_rhs.str());
  report.millis = timer.elapsed_ms();
  return report;
}

VerificationReport verify_region_convolution(const Arrangement& a) {
  Stopwatch timer;
  VerificationReport report;
  report.identity = "region-convolution";

  IntersectionLattice lattice(a);
  Integer b_lhs = bounded_region_count(lattice);
  Integer r_lhs = region_count(lattice);
  Integer b_rhs = 0;
  Integer r_rhs = 0;
  for (int x = 0; x < lattice.size(); ++x) {
    if (lattice.flats()[x].is_top) continue;
    Integer sign = (lattice.corank(x) % 2 == 0) ? 1 : -1;
    IntersectionLattice restricted(restrict_to_flat(lattice, x));
    IntersectionLattice contracted(contract_to_flat(lattice, x));
    Integer r_restricted = region_count(restricted);
    b_rhs += sign * r_restricted * region_count(contracted);
    r_rhs += sign * r_restricted * bounded_region_count(contracted);
  }

  report.add("b", b_lhs);
  report.add("b_convolution", b_rhs);
  report.add("r", r_lhs);
  report.add("r_convolution", r_rhs);
  if (b_lhs != b_rhs || r_lhs != r_rhs) {
    report.pass = false;
    report.counterexample = (b_lhs != b_rhs) ? "bounded-region identity"
                                             : "region identity";
  }
  report.millis = timer.elapsed_ms();
  return report;
}

}  // namespace mobconv
