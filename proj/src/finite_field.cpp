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

#include "mobconv/finite_field.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>
#include <unordered_map>

#include "mobconv/errors.hpp"
#include "mobconv/random.hpp"

namespace mobconv {

namespace {

constexpr long long kMaxScanPoints = 100'000'000;

void check_prime(long long q) {
  if (!is_prime(q)) {
    throw ValidationError("q must be prime, got " + std::to_string(q));
  }
}

void check_odd_prime(long long q) {
  check_prime(q);
  if (q == 2) {
    throw GuardError("the cube C(n,q) requires an odd prime, got q=2");
  }
}

// q^n with the scan budget enforced.
long long scan_size(int n, long long q) {
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > kMaxScanPoints / q) {
      throw GuardError("scan size q^n exceeds 10^8 points; choose a smaller q or n");
    }
    total *= q;
  }
  if (total > kMaxScanPoints) {
    throw GuardError("scan size q^n exceeds 10^8 points; choose a smaller q or n");
  }
  return total;
}

// Odometer decode of a point of F_q^n, last coordinate fastest.
void decode_point(long long index, int n, long long q, std::vector<long long>* out) {
  for (int j = n - 1; j >= 0; --j) {
    (*out)[j] = index % q;
    index /= q;
  }
}

// Incidence mask of a residue point over the reduced hyperplanes.
uint64_t incidence_mask(const ReducedArrangement& aq,
                        const std::vector<long long>& residues) {
  uint64_t mask = 0;
  for (size_t i = 0; i < aq.hyperplanes.size(); ++i) {
    const ReducedHyperplane& h = aq.hyperplanes[i];
    long long acc = 0;
    for (int j = 0; j < aq.dimension; ++j) {
      acc = (acc + h.normal[j] * residues[j]) % aq.q;
    }
    if (acc == h.offset) mask |= 1ULL << i;
  }
  return mask;
}

std::set<uint64_t> rational_closure_family(const IntersectionLattice& lattice) {
  std::set<uint64_t> family;
  for (const auto& f : lattice.flats()) {
    if (!f.is_top) family.insert(f.closure_mask);
  }
  return family;
}

}  // namespace

ReducedArrangement q_reduce(const Arrangement& a, long long q) {
  check_prime(q);
  ReducedArrangement out;
  out.q = q;
  out.dimension = a.dimension();
  for (int i = 0; i < a.size(); ++i) {
    const Hyperplane& h = a.hyperplanes()[i];
    ReducedHyperplane r;
    r.normal.reserve(h.normal.size());
    bool all_zero = true;
    for (const auto& c : h.normal) {
      long long v = mod_residue(mpz_fdiv_ui(c.get_mpz_t(), q), q);
      if (v != 0) all_zero = false;
      r.normal.push_back(v);
    }
    if (all_zero) {
      throw ValidationError("hyperplane " + std::to_string(i) +
                            " vanishes mod " + std::to_string(q) +
                            " (q divides every coefficient)");
    }
    r.offset = mod_residue(mpz_fdiv_ui(h.offset.get_mpz_t(), q), q);
    out.hyperplanes.push_back(std::move(r));
  }
  return out;
}

LatticeCube::LatticeCube(int dimension, long long q) : dimension_(dimension), q_(q) {
  check_odd_prime(q);
  count_ = scan_size(dimension, q);
}

std::vector<long long> LatticeCube::point(long long index) const {
  std::vector<long long> digits(dimension_);
  decode_point(index, dimension_, q_, &digits);
  long long half = (q_ - 1) / 2;
  for (auto& d : digits) d -= half;
  return digits;
}

bool lattice_isomorphic(const Arrangement& a, long long q) {
  ReducedArrangement aq = q_reduce(a, q);
  int m = a.size();
  if (m > 20) {
    throw GuardError("isomorphism scan supports at most 20 hyperplanes");
  }
  long long points = scan_size(a.dimension(), q);

  // For every hyperplane subset with a nonempty common solution set, AND
  // together the incidence masks of its points; the resulting masks are the
  // closure sets of L(A_q).
  std::vector<uint64_t> closure(1ULL << m, ~0ULL);
  std::vector<uint8_t> seen(1ULL << m, 0);
  std::vector<long long> residues(a.dimension());
  for (long long idx = 0; idx < points; ++idx) {
    decode_point(idx, a.dimension(), q, &residues);
    uint64_t mask = incidence_mask(aq, residues);
    uint64_t sub = mask;
    while (true) {
      closure[sub] &= mask;
      seen[sub] = 1;
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
  }
  std::set<uint64_t> family_q;
  for (uint64_t b = 0; b < (1ULL << m); ++b) {
    if (seen[b]) family_q.insert(closure[b]);
  }

  return family_q == rational_closure_family(IntersectionLattice(a));
}

long long complement_count(const ReducedArrangement& aq) {
  long long points = scan_size(aq.dimension, aq.q);
  long long count = 0;
  std::vector<long long> residues(aq.dimension);
  for (long long idx = 0; idx < points; ++idx) {
    decode_point(idx, aq.dimension, aq.q, &residues);
    if (incidence_mask(aq, residues) == 0) ++count;
  }
  return count;
}

long long flat_complement_count(const ReducedArrangement& aq,
                                const IntersectionLattice& lattice, int flat) {
  if (lattice.flats()[flat].is_top) {
    throw ValidationError("the artificial top has no reduced point set");
  }
  uint64_t closure = lattice.flats()[flat].closure_mask;
  long long points = scan_size(aq.dimension, aq.q);
  long long count = 0;
  std::vector<long long> residues(aq.dimension);
  for (long long idx = 0; idx < points; ++idx) {
    decode_point(idx, aq.dimension, aq.q, &residues);
    if (incidence_mask(aq, residues) == closure) ++count;
  }
  return count;
}

CentralStabilizer stabilizer_at(const Arrangement& a, long long q,
                                const std::vector<long long>& point) {
  check_odd_prime(q);
  if (static_cast<int>(point.size()) != a.dimension()) {
    throw ValidationError("point length does not match the ambient dimension");
  }
  long long half = (q - 1) / 2;
  for (long long c : point) {
    if (c < -half || c > half) {
      throw ValidationError("point lies outside the cube C(n,q)");
    }
  }
  CentralStabilizer st;
  st.point = point;
  for (int i = 0; i < a.size(); ++i) {
    const Hyperplane& h = a.hyperplanes()[i];
    Integer acc = -h.offset;
    for (int j = 0; j < a.dimension(); ++j) acc += h.normal[j] * int_from(point[j]);
    if (mpz_fdiv_ui(acc.get_mpz_t(), q) == 0) {
      st.members_mask |= 1ULL << i;
      st.members.push_back(i);
    }
  }
  return st;
}

Integer stabilizer_region_count(const Arrangement& a, const CentralStabilizer& st) {
  std::vector<Hyperplane> centered;
  for (int i : st.members) {
    const Hyperplane& h = a.hyperplanes()[i];
    Integer offset = 0;
    for (int j = 0; j < a.dimension(); ++j) offset += h.normal[j] * int_from(st.point[j]);
    centered.push_back(Hyperplane::make(h.normal, offset));
  }
  return region_count(Arrangement::merged(a.dimension(), std::move(centered)));
}

Integer chi_bar(const Arrangement& a, long long q, int workers) {
  check_odd_prime(q);
  long long points = scan_size(a.dimension(), q);
  if (!lattice_isomorphic(a, q)) {
    throw GuardError("lattice not isomorphic at q=" + std::to_string(q));
  }
  ReducedArrangement aq = q_reduce(a, q);
  IntersectionLattice lattice(a);

  // One region count per closure set; every stabilizer members-set is a
  // closure once the isomorphism guard has passed.
  std::unordered_map<uint64_t, long long> regions_by_closure;
  for (int i = 0; i < lattice.size(); ++i) {
    if (lattice.flats()[i].is_top) continue;
    Integer r = region_count(IntersectionLattice(restrict_to_flat(lattice, i)));
    regions_by_closure[lattice.flats()[i].closure_mask] = to_longlong(r);
  }

  std::atomic<bool> unknown_mask{false};
  auto sum_block = [&](long long begin, long long end, long long* out) {
    long long total = 0;
    std::vector<long long> residues(a.dimension());
    for (long long idx = begin; idx < end; ++idx) {
      decode_point(idx, a.dimension(), q, &residues);
      uint64_t mask = incidence_mask(aq, residues);
      auto it = regions_by_closure.find(mask);
      if (it == regions_by_closure.end()) {
        unknown_mask.store(true);
        return;
      }
      total += it->second;
    }
    *out = total;
  };

  if (workers < 1) workers = 1;
  workers = static_cast<int>(std::min<long long>(workers, std::max<long long>(points, 1)));
  Integer total = 0;
  if (workers == 1) {
    long long sum = 0;
    sum_block(0, points, &sum);
    total = int_from(sum);
  } else {
    std::vector<long long> partial(workers, 0);
    std::vector<std::thread> threads;
    long long chunk = (points + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      long long begin = w * chunk;
      long long end = std::min(points, begin + chunk);
      threads.emplace_back(sum_block, begin, end, &partial[w]);
    }
    for (auto& t : threads) t.join();
    for (long long part : partial) total += int_from(part);
  }
  if (unknown_mask.load()) {
    throw GuardError("stabilizer set is not a flat closure at q=" + std::to_string(q));
  }
  return total;
}

Polynomial interpolate_char_poly(const Arrangement& a,
                                 const std::vector<long long>& primes,
                                 const std::string& var) {
  int n = a.dimension();
  if (static_cast<int>(primes.size()) < n + 1) {
    throw ValidationError("interpolation needs at least dim + 1 primes");
  }
  std::vector<long long> counts;
  for (long long q : primes) {
    if (!lattice_isomorphic(a, q)) {
      throw GuardError("lattice not isomorphic at q=" + std::to_string(q));
    }
    counts.push_back(complement_count(q_reduce(a, q)));
  }

  // Lagrange through the first n + 1 points, exact over the rationals.
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    std::vector<Rational> numer{Rational(1)};
    Rational denom(1);
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      // numer *= (t - q_j)
      std::vector<Rational> next(numer.size() + 1, Rational(0));
      for (size_t d = 0; d < numer.size(); ++d) {
        next[d] -= numer[d] * Rational(int_from(primes[j]));
        next[d + 1] += numer[d];
      }
      numer = std::move(next);
      denom *= Rational(int_from(primes[i])) - Rational(int_from(primes[j]));
    }
    Rational scale = Rational(int_from(counts[i])) / denom;
    for (size_t d = 0; d < numer.size(); ++d) coeffs[d] += numer[d] * scale;
  }

  Polynomial out;
  for (int d = 0; d <= n; ++d) {
    if (coeffs[d].get_den() != 1) {
      throw GuardError("interpolated polynomial is not integral; counts are inconsistent");
    }
    out += Polynomial::term(Monomial::variable(var, static_cast<unsigned>(d)),
                            coeffs[d].get_num());
  }
  // Extra primes beyond n + 1 must agree with the interpolant.
  for (size_t i = n + 1; i < primes.size(); ++i) {
    if (out.eval({{var, int_from(primes[i])}}) != int_from(counts[i])) {
      throw GuardError("complement counts are inconsistent across the given primes");
    }
  }
  return out;
}

VerificationReport verify_finite_field(const Arrangement& a, long long q) {
  Stopwatch timer;
  check_prime(q);
  if (!lattice_isomorphic(a, q)) {
    throw GuardError("lattice not isomorphic at q=" + std::to_string(q));
  }
  VerificationReport report;
  report.identity = "finite-field";
  Integer chi_at_q = char_poly(a).eval({{"t", int_from(q)}});
  long long complement = complement_count(q_reduce(a, q));
  report.add("q", q);
  report.add("chi_at_q", chi_at_q);
  report.add("complement_count", complement);
  report.pass = chi_at_q == int_from(complement);
  if (!report.pass) report.counterexample = "chi(q) != |M(A_q)|";
  report.millis = timer.elapsed_ms();
  return report;
}

VerificationReport verify_reciprocity(const Arrangement& a, long long q,
                                      int workers) {
  Stopwatch timer;
  Integer cube_total = chi_bar(a, q, workers);  // also enforces the guards

  IntersectionLattice lattice(a);
  ReducedArrangement aq = q_reduce(a, q);
  Polynomial chi = char_poly(lattice);
  Integer chi_at_q = chi.eval({{"t", int_from(q)}});
  long long complement = complement_count(aq);
  Integer chi_at_minus_q = chi.eval({{"t", int_from(-q)}});
  Integer signed_value =
      (a.dimension() % 2 == 0) ? chi_at_minus_q : -chi_at_minus_q;

  Integer convolution_sum = 0;
  for (int i = 0; i < lattice.size(); ++i) {
    if (lattice.flats()[i].is_top) continue;
    Integer r = region_count(IntersectionLattice(restrict_to_flat(lattice, i)));
    convolution_sum += r * int_from(flat_complement_count(aq, lattice, i));
  }

  VerificationReport report;
  report.identity = "reciprocity";
  report.add("q", q);
  report.add("chi_at_q", chi_at_q);
  report.add("complement_count", complement);
  report.add("chi_bar", cube_total);
  report.add("chi_at_minus_q_signed", signed_value);
  report.add("prop5_sum", convolution_sum);
  report.pass = cube_total == signed_value && signed_value == convolution_sum;
  if (!report.pass) report.counterexample = "three-way equality broken";
  report.millis = timer.elapsed_ms();
  return report;
}

VerificationReport verify_translation_lemma(const Arrangement& a, int trials,
                                            uint64_t seed) {
  Stopwatch timer;
  std::vector<LinearConstraint> all;
  for (const auto& h : a.hyperplanes()) all.push_back(h.constraint());
  if (!intersect_affine(a.dimension(), all)) {
    throw ValidationError("arrangement is not central");
  }

  VerificationReport report;
  report.identity = "translation";
  Integer base = region_count(a);
  report.add("r", base);
  report.add("trials", static_cast<long long>(trials));

  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<long long> shift(a.dimension());
    for (auto& c : shift) c = rng.in_range(-9, 9);
    std::vector<Hyperplane> moved;
    for (const auto& h : a.hyperplanes()) {
      Integer offset = h.offset;
      for (int j = 0; j < a.dimension(); ++j) offset += h.normal[j] * int_from(shift[j]);
      moved.push_back(Hyperplane::make(h.normal, offset));
    }
    Integer r = region_count(Arrangement(a.dimension(), std::move(moved)));
    if (r != base) {
      report.pass = false;
      std::string s = "shift (";
      for (size_t j = 0; j < shift.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(shift[j]);
      }
      s += "): r=" + r.get_str() + " expected " + base.get_str();
      report.counterexample = s;
      break;
    }
  }
  report.millis = timer.elapsed_ms();
  return report;
}

}  // namespace mobconv
