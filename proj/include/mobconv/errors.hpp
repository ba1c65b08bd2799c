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

#ifndef MOBCONV_ERRORS_HPP
#define MOBCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mobconv {

// Malformed input text: JSON syntax errors, wrong types, non-integer numbers.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Semantically invalid values: axiom violations, zero normals, duplicate
// hyperplanes, out-of-range arguments.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A precondition on the prime q failed (q too small for the lattice to
// survive reduction, q even where the cube needs it odd, or a scan that
// would exceed the size budget).
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mobconv

#endif  // MOBCONV_ERRORS_HPP
