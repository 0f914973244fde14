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

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace forest_spectra {

using Integer = mpz_class;
using Rational = mpq_class;

/// Renders a rational as "num/den" in lowest terms; integers keep "/1".
inline std::string to_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

/// num/den as a canonical rational.
inline Rational ratio(long num, long den) {
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& value) { return value.get_str(); }

inline int sign(const Rational& value) { return sgn(value); }

inline Integer integer_power(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

inline Rational rational_power(const Rational& base, unsigned long exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

/// Parses "a", "a/b" or "-a/b" into a canonical rational.
inline Rational parse_rational(const std::string& text) {
  Rational value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

}  // namespace forest_spectra
