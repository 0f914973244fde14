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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "forest_spectra/errors.hpp"
#include "forest_spectra/exact.hpp"
#include "forest_spectra/matrix.hpp"

namespace forest_spectra {

/// Dense exponent vector, one entry per variable.
using Exponents = std::vector<std::uint8_t>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

/// Multivariate polynomial with exact rational coefficients over an ordered
/// variable list. Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

  static Polynomial constant(std::vector<std::string> variables, const Rational& c) {
    Polynomial p(std::move(variables));
    p.add_term(Exponents(p.variable_count(), 0), c);
    return p;
  }

  static Polynomial variable(std::vector<std::string> variables, std::size_t index) {
    Polynomial p(std::move(variables));
    if (index >= p.variable_count()) throw InvalidInput("variable index out of range");
    Exponents e(p.variable_count(), 0);
    e[index] = 1;
    p.add_term(std::move(e), 1);
    return p;
  }

  static Polynomial monomial(std::vector<std::string> variables, Exponents exponents,
                             const Rational& c = 1) {
    Polynomial p(std::move(variables));
    p.add_term(std::move(exponents), c);
    return p;
  }

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t variable_count() const { return variables_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::size_t variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (variables_[i] == name) return i;
    }
    throw InvalidInput("unknown variable '" + name + "'");
  }

  void add_term(Exponents exponents, const Rational& c) {
    if (exponents.size() != variables_.size()) {
      throw InvalidInput("exponent vector has " + std::to_string(exponents.size()) +
                         " entries for " + std::to_string(variables_.size()) + " variables");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exponents), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Exponents& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Largest total degree; nullopt for the zero polynomial.
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
      const int t = total_degree(e);
      if (!d || t > *d) d = t;
    }
    return d;
  }

  bool is_homogeneous() const {
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
      const int t = total_degree(e);
      if (d && t != *d) return false;
      d = t;
    }
    return true;
  }

  bool is_square_free() const {
    for (const auto& [e, c] : terms_) {
      for (auto x : e) {
        if (x > 1) return false;
      }
    }
    return true;
  }

  Polynomial& operator+=(const Polynomial& other) {
    require_same_variables(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    require_same_variables(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    Polynomial out(p.variables_);
    if (s == 0) return out;
    for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_variables(b);
    Polynomial out(a.variables_);
    Exponents e(a.variable_count());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

  void require_same_variables(const Polynomial& other) const {
    if (variables_ != other.variables_) throw InvalidInput("polynomials use different variable lists");
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Descending exponent order reads like the usual lex-ordered display.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += variables_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      Rational magnitude = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mono.empty()) {
        out += magnitude.get_str();
      } else if (magnitude != 1) {
        out += magnitude.get_str() + "*" + mono;
      } else {
        out += mono;
      }
    }
    return out;
  }

 private:
  std::vector<std::string> variables_;
  std::map<Exponents, Rational> terms_;
};

inline Polynomial partial_derivative(const Polynomial& p, std::size_t variable) {
  if (variable >= p.variable_count()) throw InvalidInput("variable index out of range");
  Polynomial out(p.variables());
  for (const auto& [e, c] : p.terms()) {
    if (e[variable] == 0) continue;
    Exponents lowered = e;
    --lowered[variable];
    out.add_term(std::move(lowered), c * e[variable]);
  }
  return out;
}

inline Polynomial partial_derivative(const Polynomial& p, const std::string& variable) {
  return partial_derivative(p, p.variable_index(variable));
}

/// op(d/dx_1, ..., d/dx_N) applied to target: each operator monomial x^a acts
/// as the iterated partial derivative d^a.
inline Polynomial apply_diff_operator(const Polynomial& op, const Polynomial& target) {
  if (op.variables() != target.variables()) {
    throw InvalidInput("operator and target use different variable lists");
  }
  Polynomial out(target.variables());
  const std::size_t n = target.variable_count();
  Exponents lowered(n);
  for (const auto& [a, ca] : op.terms()) {
    for (const auto& [b, cb] : target.terms()) {
      Integer falling = 1;
      bool divides = true;
      for (std::size_t i = 0; i < n && divides; ++i) {
        if (a[i] > b[i]) {
          divides = false;
          break;
        }
        for (int j = 0; j < a[i]; ++j) falling *= b[i] - j;
        lowered[i] = static_cast<std::uint8_t>(b[i] - a[i]);
      }
      if (!divides) continue;
      out.add_term(lowered, ca * cb * falling);
    }
  }
  return out;
}

inline Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.variable_count()) {
    throw InvalidInput("evaluation point assigns " + std::to_string(point.size()) + " of " +
                       std::to_string(p.variable_count()) + " variables");
  }
  Rational sum = 0;
  Rational term;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int j = 0; j < e[i]; ++j) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

inline Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& assignment) {
  std::vector<Rational> point;
  point.reserve(p.variable_count());
  for (const std::string& name : p.variables()) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw InvalidInput("no value assigned to variable '" + name + "'");
    point.push_back(it->second);
  }
  return evaluate(p, point);
}

/// Matrix of second partial derivatives evaluated at a point, rows and
/// columns in variable order.
inline ExactMatrix hessian_matrix(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.variable_count()) {
    throw InvalidInput("evaluation point assigns " + std::to_string(point.size()) + " of " +
                       std::to_string(p.variable_count()) + " variables");
  }
  const std::size_t n = p.variable_count();
  ExactMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial first = partial_derivative(p, i);
    if (first.is_zero()) continue;
    for (std::size_t j = i; j < n; ++j) {
      const Rational value = evaluate(partial_derivative(first, j), point);
      h(i, j) = value;
      h(j, i) = value;
    }
  }
  return h;
}

inline std::vector<Rational> all_ones(std::size_t n) { return std::vector<Rational>(n, Rational(1)); }

}  // namespace forest_spectra
