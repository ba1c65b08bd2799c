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

#ifndef MOBCONV_NUMERIC_HPP
#define MOBCONV_NUMERIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mobconv {

// All coefficients and counts are exact. Integer arithmetic is
// arbitrary-precision; rationals appear only inside linear algebra.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer pow_int(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Integer gcd_int(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer divexact(const Integer& a, const Integer& b) {
  Integer out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// gmpxx constructors stop at long; this project targets LP64, where long
// holds the full 64-bit range.
inline Integer int_from(long long v) { return Integer(static_cast<long>(v)); }

inline bool fits_longlong(const Integer& v) {
  return mpz_fits_slong_p(v.get_mpz_t()) != 0;
}

inline long long to_longlong(const Integer& v) {
  return static_cast<long long>(mpz_get_si(v.get_mpz_t()));
}

// Residue of v in [0, q).
inline long long mod_residue(long long v, long long q) {
  long long r = v % q;
  return r < 0 ? r + q : r;
}

inline bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

inline std::string subset_str(const std::vector<int>& elements) {
  std::string out = "{";
  for (size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elements[i]);
  }
  out += "}";
  return out;
}

inline std::string mask_str(unsigned long long mask) {
  std::vector<int> elems;
  for (int i = 0; mask >> i; ++i) {
    if ((mask >> i) & 1ULL) elems.push_back(i);
  }
  return subset_str(elems);
}

}  // namespace mobconv

#endif  // MOBCONV_NUMERIC_HPP
