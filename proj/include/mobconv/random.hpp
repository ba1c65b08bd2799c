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

#ifndef MOBCONV_RANDOM_HPP
#define MOBCONV_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mobconv {

class Polynomial;

// Seeded generator with platform-independent draws. std::mt19937_64 has a
// standard-specified output sequence; the distributions in <random> do not,
// so draws go through plain modular reduction here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  // Uniform-ish value in [0, n); n > 0.
  uint64_t below(uint64_t n) { return engine_() % n; }

  // Uniform-ish value in [lo, hi], inclusive.
  long long in_range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

// Random polynomial in the given variables with coefficients drawn from
// [-coeff_bound, coeff_bound] and per-variable exponents up to max_degree.
Polynomial random_polynomial(Rng& rng, const std::vector<std::string>& vars,
                             unsigned max_degree, long coeff_bound,
                             unsigned max_terms = 4);

}  // namespace mobconv

#endif  // MOBCONV_RANDOM_HPP
