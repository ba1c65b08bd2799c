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

#ifndef MOBCONV_REPORT_HPP
#define MOBCONV_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "mobconv/numeric.hpp"

namespace mobconv {

// Structured outcome of one identity check. `values` keeps the compared
// sides (canonical polynomial strings or exact counts) in a fixed order so
// that serialized reports are reproducible byte for byte. Timing is
// reported in the text rendering only; it would break that reproducibility
// in the JSON form.
struct VerificationReport {
  std::string identity;
  bool pass = true;
  std::vector<std::pair<std::string, std::string>> values;
  std::string counterexample;
  std::string note;
  double millis = 0.0;

  void add(const std::string& label, const std::string& value) {
    values.emplace_back(label, value);
  }
  void add(const std::string& label, const Integer& value) {
    values.emplace_back(label, value.get_str());
  }
  void add(const std::string& label, long long value) {
    values.emplace_back(label, std::to_string(value));
  }

  // Single JSON object with a "schema": 1 marker. Integer-valued entries are
  // emitted as JSON numbers when they fit, strings otherwise.
  std::string to_json_text() const;
  // One-line human rendering, e.g.
  // "[PASS] reciprocity: q=5 chi_bar=43 ... (1.2 ms)".
  std::string to_text() const;
};

// Stopwatch helper for filling VerificationReport::millis.
class Stopwatch {
 public:
  Stopwatch();
  double elapsed_ms() const;

 private:
  long long start_ns_;
};

}  // namespace mobconv

#endif  // MOBCONV_REPORT_HPP
