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

#include "mobconv/report.hpp"

#include <chrono>
#include <cstdint>
#include <sstream>

#include "json.hpp"

namespace mobconv {

namespace {

bool parse_int64(const std::string& s, int64_t* out) {
  if (s.empty() || s.size() > 19) return false;
  size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') return false;
  }
  try {
    *out = std::stoll(s);
  } catch (const std::out_of_range&) {
    return false;
  }
  return true;
}

}  // namespace

std::string VerificationReport::to_json_text() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["identity"] = identity;
  for (const auto& [label, value] : values) {
    int64_t n = 0;
    if (parse_int64(value, &n)) {
      j[label] = n;
    } else {
      j[label] = value;
    }
  }
  if (!counterexample.empty()) j["counterexample"] = counterexample;
  if (!note.empty()) j["note"] = note;
  j["pass"] = pass;
  return j.dump(2);
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << (pass ? "[PASS] " : "[FAIL] ") << identity << ":";
  for (const auto& [label, value] : values) {
    out << " " << label << "=" << value;
  }
  if (!counterexample.empty()) out << " counterexample: " << counterexample;
  if (!note.empty()) out << " (" << note << ")";
  out << " [" << millis << " ms]";
  return out.str();
}

Stopwatch::Stopwatch()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

double Stopwatch::elapsed_ms() const {
  long long now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                      std::chrono::steady_clock::now().time_since_epoch())
                      .count();
  return static_cast<double>(now - start_ns_) / 1e6;
}

}  // namespace mobconv
