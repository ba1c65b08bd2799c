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

#include "mobconv/polynomial.hpp"

#include "mobconv/errors.hpp"
#include "mobconv/random.hpp"

namespace mobconv {

Monomial::Monomial(std::map<std::string, unsigned> exponents)
    : exponents_(std::move(exponents)) {
  for (auto it = exponents_.begin(); it != exponents_.end();) {
    it = it->second == 0 ? exponents_.erase(it) : std::next(it);
  }
}

Monomial Monomial::variable(const std::string& name, unsigned exp) {
  Monomial m;
  if (exp > 0) m.exponents_[name] = exp;
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [var, exp] : exponents_) d += exp;
  return d;
}

unsigned Monomial::exponent(const std::string& var) const {
  auto it = exponents_.find(var);
  return it == exponents_.end() ? 0 : it->second;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (const auto& [var, exp] : other.exponents_) out.exponents_[var] += exp;
  return out;
}

std::string Monomial::str() const {
  if (exponents_.empty()) return "1";
  std::string out;
  bool first = true;
  for (const auto& [var, exp] : exponents_) {
    if (!first) out += "*";
    first = false;
    out += var;
    if (exp > 1) {
      out += "^";
      out += std::to_string(exp);
    }
  }
  return out;
}

bool MonomialLeadingFirst::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree();
  unsigned db = b.degree();
  if (da != db) return da > db;
  auto ia = a.exponents().begin();
  auto ib = b.exponents().begin();
  while (ia != a.exponents().end() && ib != b.exponents().end()) {
    if (ia->first != ib->first) {
      // The monomial holding a positive power of the earlier variable wins.
      return ia->first < ib->first;
    }
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  // Same degree and one is a prefix of the other: only possible when both
  // ended (equal monomials).
  return false;
}

Polynomial::Polynomial(Integer value) {
  if (value != 0) terms_.emplace(Monomial(), std::move(value));
}

Polynomial Polynomial::variable(const std::string& name) {
  return term(Monomial::variable(name), 1);
}

Polynomial Polynomial::term(Monomial m, Integer coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_empty());
}

Integer Polynomial::constant_value() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Integer(0) : it->second;
}

unsigned Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::set<std::string> Polynomial::variables() const {
  std::set<std::string> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [var, exp] : m.exponents()) vars.insert(var);
  }
  return vars;
}

void Polynomial::add_term(const Monomial& m, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::pow(unsigned exp) const {
  Polynomial out(1);
  Polynomial base = *this;
  while (exp > 0) {
    if (exp & 1u) out *= base;
    exp >>= 1u;
    if (exp) base *= base;
  }
  return out;
}

Integer Polynomial::eval(const std::map<std::string, Integer>& assignment) const {
  Integer total = 0;
  for (const auto& [m, c] : terms_) {
    Integer value = c;
    for (const auto& [var, exp] : m.exponents()) {
      auto it = assignment.find(var);
      if (it == assignment.end()) {
        throw ValidationError("evaluation is missing variable '" + var + "'");
      }
      value *= pow_int(it->second, exp);
    }
    total += value;
  }
  return total;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& subst) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial value{c};
    for (const auto& [var, exp] : m.exponents()) {
      auto it = subst.find(var);
      Polynomial base = it != subst.end() ? it->second : Polynomial::variable(var);
      value *= base.pow(exp);
    }
    out += value;
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer mag = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) {
        out += mag.get_str();
        out += "*";
      }
      out += m.str();
    }
  }
  return out;
}

Polynomial random_polynomial(Rng& rng, const std::vector<std::string>& vars,
                             unsigned max_degree, long coeff_bound,
                             unsigned max_terms) {
  Polynomial p;
  unsigned terms = 1 + static_cast<unsigned>(rng.below(max_terms));
  for (unsigned i = 0; i < terms; ++i) {
    std::map<std::string, unsigned> exps;
    for (const auto& var : vars) {
      exps[var] = static_cast<unsigned>(rng.below(max_degree + 1));
    }
    Integer coeff(static_cast<long>(rng.in_range(-coeff_bound, coeff_bound)));
    p += Polynomial::term(Monomial(std::move(exps)), coeff);
  }
  return p;
}

}  // namespace mobconv
