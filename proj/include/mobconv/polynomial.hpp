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

#ifndef MOBCONV_POLYNOMIAL_HPP
#define MOBCONV_POLYNOMIAL_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mobconv/numeric.hpp"

namespace mobconv {

// Product of variable powers. Exponent maps never store zero exponents, so
// equal monomials compare equal structurally.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::map<std::string, unsigned> exponents);

  static Monomial variable(const std::string& name, unsigned exp = 1);

  bool is_empty() const { return exponents_.empty(); }
  unsigned degree() const;
  unsigned exponent(const std::string& var) const;
  const std::map<std::string, unsigned>& exponents() const { return exponents_; }

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

  // "s^2*t^2", variables in name order; empty monomial renders as "1".
  std::string str() const;

 private:
  std::map<std::string, unsigned> exponents_;
};

// Strict order placing the graded-lex leading monomial first: higher total
// degree wins, ties broken by the exponent of the lexicographically earliest
// variable where the two differ.
struct MonomialLeadingFirst {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with exact integer coefficients. Terms are
// kept canonical at all times: no zero coefficients, deterministic
// graded-lex ordering, so equal polynomials serialize identically.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, MonomialLeadingFirst>;

  Polynomial() = default;  // zero
  Polynomial(long value) : Polynomial(Integer(value)) {}
  explicit Polynomial(Integer value);

  static Polynomial variable(const std::string& name);
  static Polynomial term(Monomial m, Integer coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero when absent).
  Integer constant_value() const;
  unsigned degree() const;
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  std::set<std::string> variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned exp) const;

  // Exact evaluation; every variable of the polynomial must be assigned.
  Integer eval(const std::map<std::string, Integer>& assignment) const;

  // Composition; variables absent from the map stay themselves.
  Polynomial substitute(const std::map<std::string, Polynomial>& subst) const;

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  // Canonical string form: "t^2 - 3*t + 3".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Integer& coeff);

  TermMap terms_;
};

}  // namespace mobconv

#endif  // MOBCONV_POLYNOMIAL_HPP
