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

// Brute-force reference implementations used only by the tests. None of them
// share code paths with the library: forests come from subset enumeration
// with a BFS cycle test, determinants from cofactor expansion, ranks from
// plain Gauss-Jordan elimination over rationals.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Rational = mpq_class;
using Pair = std::pair<int, int>;

/// Edges of K_n on vertices 0..n-1, in lexicographic order.
inline std::vector<Pair> complete_edges(int n) {
  std::vector<Pair> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return edges;
}

/// Edges of K_{m,n}: left vertices 0..m-1, right vertices m..m+n-1.
inline std::vector<Pair> bipartite_edges(int m, int n) {
  std::vector<Pair> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  }
  return edges;
}

/// Number of connected components of the graph (vertices, chosen edges),
/// or -1 if the chosen edges contain a cycle. Uses BFS and an edge count.
inline int forest_components(int vertices, const std::vector<Pair>& edges, const std::vector<int>& chosen) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices));
  for (int e : chosen) {
    const auto [a, b] = edges[static_cast<std::size_t>(e)];
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<bool> seen(static_cast<std::size_t>(vertices), false);
  int comps = 0;
  for (int s = 0; s < vertices; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    seen[static_cast<std::size_t>(s)] = true;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          q.push(w);
        }
      }
    }
  }
  // A graph is a forest iff #edges = #vertices - #components.
  if (static_cast<int>(chosen.size()) != vertices - comps) return -1;
  return comps;
}

/// All k-component spanning forests as sorted edge-index lists, in
/// lexicographic order.
inline std::vector<std::vector<int>> forests(int vertices, const std::vector<Pair>& edges, int k) {
  std::vector<std::vector<int>> out;
  const int size = vertices - k;
  const int total = static_cast<int>(edges.size());
  if (size < 0 || size > total) return out;
  std::vector<int> pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (forest_components(vertices, edges, pick) == k) out.push_back(pick);
    int i = size - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - size + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

inline bool contains(const std::vector<int>& forest, int e) {
  return std::binary_search(forest.begin(), forest.end(), e);
}

/// Number of forests in `all` containing every edge of `required`.
inline long count_with(const std::vector<std::vector<int>>& all, std::initializer_list<int> required) {
  long c = 0;
  for (const auto& f : all) {
    if (std::all_of(required.begin(), required.end(), [&](int e) { return contains(f, e); })) ++c;
  }
  return c;
}

/// All-ones Hessian of the forest generating function by counting pairs.
inline std::vector<std::vector<Rational>> hessian(int vertices, const std::vector<Pair>& edges, int k) {
  const auto all = forests(vertices, edges, k);
  const std::size_t n = edges.size();
  std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n, 0));
  for (const auto& f : all) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (i != j) h[static_cast<std::size_t>(f[i])][static_cast<std::size_t>(f[j])] += 1;
      }
    }
  }
  return h;
}

/// Laplace expansion along the first row.
inline Rational cofactor_determinant(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][c] * cofactor_determinant(minor);
    det += (c % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

/// Rank by Gauss-Jordan elimination with rational pivots.
inline std::size_t gauss_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Spanning tree counts: n^{n-2} for K_n and m^{n-1} n^{m-1} for K_{m,n}.
inline mpz_class cayley(int n) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2));
  return out;
}

inline mpz_class bipartite_trees(int m, int n) {
  mpz_class a;
  mpz_class b;
  mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n - 1));
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m - 1));
  return a * b;
}

/// Deterministic generator for property tests.
inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline Rational random_rational(int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  Rational r(num(rng()), den(rng()));
  r.canonicalize();
  return r;
}

}  // namespace oracle
