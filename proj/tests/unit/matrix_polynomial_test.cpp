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

#include <gtest/gtest.h>

#include <random>

#include "forest_spectra/matrix.hpp"
#include "forest_spectra/polynomial.hpp"
#include "support/oracles.hpp"

namespace fs = forest_spectra;

namespace {

fs::ExactMatrix random_matrix(std::size_t rows, std::size_t cols, int bound) {
  fs::ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = oracle::random_rational(bound);
  }
  return m;
}

std::vector<std::vector<fs::Rational>> rows_of(const fs::ExactMatrix& m) {
  std::vector<std::vector<fs::Rational>> out(m.rows(), std::vector<fs::Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

}  // namespace

TEST(Matrix, DeterminantMatchesCofactorExpansion) {
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const fs::ExactMatrix m = random_matrix(n, n, 5);
    EXPECT_EQ(fs::exact_determinant(m), oracle::cofactor_determinant(rows_of(m)));
  }
}

TEST(Matrix, DeterminantEdgeCases) {
  EXPECT_EQ(fs::exact_determinant(fs::ExactMatrix(4, 4)), 0);
  EXPECT_EQ(fs::exact_determinant(fs::ExactMatrix::identity(5)), 1);
  EXPECT_EQ(fs::exact_determinant(fs::ExactMatrix(0, 0)), 1);
  const auto swap = fs::ExactMatrix::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(fs::exact_determinant(swap), -1);
  EXPECT_THROW(fs::exact_determinant(fs::ExactMatrix(2, 3)), fs::InvalidInput);
}

TEST(Matrix, RankMatchesGaussJordan) {
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>(trial % 7);
    const std::size_t cols = 1 + static_cast<std::size_t>((trial / 7) % 5);
    fs::ExactMatrix m = random_matrix(rows, cols, 3);
    // Force dependencies: copy a scaled row over the last one.
    if (rows > 2) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * fs::ratio(-3, 2) + m(1, j);
    }
    EXPECT_EQ(fs::exact_rank(m), oracle::gauss_rank(rows_of(m)));
  }
}

TEST(Matrix, IndependentRowsAreGreedy) {
  const auto m = fs::ExactMatrix::from_rows({{0, 0}, {1, 2}, {2, 4}, {0, 1}, {1, 1}});
  EXPECT_EQ(fs::independent_rows(m), (std::vector<std::size_t>{1, 3}));
}

TEST(Matrix, ProductsAndTrace) {
  const auto a = fs::ExactMatrix::from_rows({{1, 2}, {3, 4}});
  const auto b = fs::ExactMatrix::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, fs::ExactMatrix::from_rows({{2, 1}, {4, 3}}));
  EXPECT_EQ(a.trace(), 5);
  EXPECT_EQ(a.transpose()(0, 1), 3);
  EXPECT_EQ(a.shifted(1)(0, 0), 0);
  EXPECT_FALSE(a.is_symmetric());
  EXPECT_TRUE(b.is_symmetric());
}

TEST(Polynomial, ArithmeticAndDisplay) {
  const std::vector<std::string> vars{"x", "y"};
  const auto x = fs::Polynomial::variable(vars, 0);
  const auto y = fs::Polynomial::variable(vars, 1);
  const auto p = x * x * y - fs::ratio(1, 2) * y + fs::Polynomial::constant(vars, 3);
  EXPECT_EQ(p.to_string(), "x^2*y - 1/2*y + 3");
  EXPECT_EQ(p.term_count(), 3u);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_TRUE((x * y).is_homogeneous());
  EXPECT_TRUE((x * y).is_square_free());
  EXPECT_FALSE((x * x).is_square_free());
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_FALSE(fs::Polynomial(vars).degree().has_value());
  EXPECT_EQ(*p.degree(), 3);
}

TEST(Polynomial, DerivativesAndOperators) {
  const std::vector<std::string> vars{"a", "b", "c"};
  const auto a = fs::Polynomial::variable(vars, 0);
  const auto b = fs::Polynomial::variable(vars, 1);
  const auto c = fs::Polynomial::variable(vars, 2);
  const auto phi = a * b + b * c + a * c;
  EXPECT_EQ(fs::partial_derivative(phi, "a"), b + c);
  EXPECT_EQ(fs::partial_derivative(a * a * a, 0), fs::Rational(3) * a * a);
  // (a + b)(d) phi = (b + c) + (a + c)
  EXPECT_EQ(fs::apply_diff_operator(a + b, phi), a + b + fs::Rational(2) * c);
  EXPECT_TRUE(fs::apply_diff_operator(a * a, phi).is_zero());
  EXPECT_THROW(fs::partial_derivative(phi, "z"), fs::InvalidInput);
  EXPECT_THROW(fs::apply_diff_operator(fs::Polynomial::variable({"x"}, 0), phi), fs::InvalidInput);
}

TEST(Polynomial, EvaluationAndHessian) {
  const std::vector<std::string> vars{"a", "b", "c"};
  const auto a = fs::Polynomial::variable(vars, 0);
  const auto b = fs::Polynomial::variable(vars, 1);
  const auto c = fs::Polynomial::variable(vars, 2);
  const auto phi = a * b * c;
  const std::vector<fs::Rational> point{2, 3, fs::ratio(1, 2)};
  EXPECT_EQ(fs::evaluate(phi, point), 3);
  EXPECT_EQ(fs::evaluate(phi, {{"a", 1}, {"b", 1}, {"c", 1}}), 1);
  EXPECT_THROW(fs::evaluate(phi, {{"a", 1}}), fs::InvalidInput);
  const auto h = fs::hessian_matrix(phi, point);
  EXPECT_EQ(h, fs::ExactMatrix::from_rows({{0, fs::ratio(1, 2), 3}, {fs::ratio(1, 2), 0, 2}, {3, 2, 0}}));
}

TEST(Polynomial, OperatorProductIsComposition) {
  auto& gen = oracle::rng();
  const std::vector<std::string> vars{"a", "b", "c", "d"};
  std::uniform_int_distribution<int> exp(0, 2);
  auto random_poly = [&](int terms) {
    fs::Polynomial p(vars);
    for (int t = 0; t < terms; ++t) {
      fs::Exponents e(vars.size());
      for (auto& x : e) x = static_cast<std::uint8_t>(exp(gen));
      p.add_term(e, oracle::random_rational(4));
    }
    return p;
  };
  for (int trial = 0; trial < 25; ++trial) {
    const auto u = random_poly(3);
    const auto v = random_poly(3);
    const auto phi = random_poly(8);
    EXPECT_EQ(fs::apply_diff_operator(u * v, phi), fs::apply_diff_operator(u, fs::apply_diff_operator(v, phi)));
  }
}
