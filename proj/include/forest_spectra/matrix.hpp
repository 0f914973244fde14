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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "forest_spectra/errors.hpp"
#include "forest_spectra/exact.hpp"

namespace forest_spectra {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InvalidInput("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) return false;
      }
    }
    return true;
  }

  bool is_zero() const {
    for (const T& x : data_) {
      if (x != 0) return false;
    }
    return true;
  }

  T trace() const {
    require_square("trace");
    T sum(0);
    for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
    return sum;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// this - lambda * I
  Matrix shifted(const T& lambda) const {
    require_square("shift");
    Matrix m = *this;
    for (std::size_t i = 0; i < rows_; ++i) m(i, i) -= lambda;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    T term;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& x = a(i, l);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          term = x * b(l, j);
          c(i, j) += term;
        }
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_square(const char* what) const {
    if (!is_square()) throw InvalidInput(std::string(what) + " needs a square matrix");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

namespace detail {

/// Scales every row by the lcm of its denominators. Returns the integer
/// matrix and the product of the scale factors.
inline std::pair<IntegerMatrix, Integer> clear_denominators(const ExactMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  Integer scale_product = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
    }
    scale_product *= row_lcm;
  }
  return {std::move(out), std::move(scale_product)};
}

}  // namespace detail

/// Determinant by Bareiss fraction-free elimination.
inline Integer bareiss_determinant(IntegerMatrix a) {
  if (!a.is_square()) throw InvalidInput("determinant needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer previous = 1;
  Integer scratch;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        scratch = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline Rational exact_determinant(const ExactMatrix& m) {
  auto [scaled, scale] = detail::clear_denominators(m);
  Rational det(bareiss_determinant(std::move(scaled)), scale);
  det.canonicalize();
  return det;
}

/// Indices of the lexicographically earliest rows that are linearly
/// independent: row i is kept iff it is not in the span of the earlier rows.
/// Elimination is fraction-free, with row contents divided out.
inline std::vector<std::size_t> independent_rows(const ExactMatrix& m) {
  auto [rows, unused_scale] = detail::clear_denominators(m);
  (void)unused_scale;
  struct Reduced {
    std::size_t pivot;
    std::vector<Integer> entries;
  };
  std::vector<Reduced> basis;
  std::vector<std::size_t> kept;
  std::vector<Integer> v(m.cols());
  Integer scratch;
  Integer content;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) v[j] = rows(i, j);
    for (const Reduced& b : basis) {
      if (v[b.pivot] == 0) continue;
      const Integer factor = v[b.pivot];
      const Integer lead = b.entries[b.pivot];
      for (std::size_t j = 0; j < v.size(); ++j) {
        scratch = v[j] * lead - factor * b.entries[j];
        v[j] = scratch;
      }
      content = 0;
      for (const Integer& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
      if (content > 1) {
        for (Integer& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
      }
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot] == 0) ++pivot;
    if (pivot == v.size()) continue;
    basis.push_back(Reduced{pivot, v});
    kept.push_back(i);
  }
  return kept;
}

inline std::size_t exact_rank(const ExactMatrix& m) { return independent_rows(m).size(); }

inline std::string to_string(const ExactMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += " ";
      out += m(i, j).get_str();
    }
    out += "]\n";
  }
  return out;
}

}  // namespace forest_spectra
