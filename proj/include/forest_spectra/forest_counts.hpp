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

#include <string>
#include <utility>
#include <variant>

#include "forest_spectra/errors.hpp"
#include "forest_spectra/exact.hpp"
#include "forest_spectra/forest_enum.hpp"
#include "forest_spectra/graph.hpp"

namespace forest_spectra {

/// Forest counts through a fixed pair of edges on K_n:
///   p: forests containing {1,2} and {2,3} (edges sharing a vertex),
///   q: forests containing {1,2} and {3,4} (disjoint edges).
struct CompletePairCounts {
  Integer p;
  Integer q;
};

/// Forest counts through a fixed pair of edges on K_{m,n}:
///   p: {1,1'} and {1,2'} (sharing a left vertex),
///   q: {1,1'} and {2,1'} (sharing a right vertex),
///   r: {1,1'} and {2,2'} (disjoint).
struct BipartitePairCounts {
  Integer p;
  Integer q;
  Integer r;
};

using PairCounts = std::variant<CompletePairCounts, BipartitePairCounts>;

/// p = 3t + f and q = 4t + f, with t collecting trees through all of 1,2,3,4
/// and f the forests separating vertex 4 from {1,2,3}.
struct Decomposition {
  Integer t;
  Integer f;
};

/// Whether k satisfies 0 < k < |V| - 2 together with the size hypotheses
/// (n >= 4 for K_n; m, n >= 2 for K_{m,n}).
inline bool in_theorem_range(const Graph& g, int k) {
  const int vertices = static_cast<int>(g.vertex_count());
  if (g.is_complete() && g.left_size() < 4) return false;
  if (g.is_bipartite() && (g.left_size() < 2 || g.right_size() < 2)) return false;
  return k > 0 && k < vertices - 2;
}

namespace detail {

inline void check_theorem_range(const Graph& g, int k) {
  if (g.is_complete() && g.left_size() < 4) {
    throw InsufficientVertices("pair counts on K_n need n >= 4 (vertices 1..4), got " + g.description());
  }
  if (g.is_bipartite() && (g.left_size() < 2 || g.right_size() < 2)) {
    throw InsufficientVertices("pair counts on K_{m,n} need m, n >= 2, got " + g.description());
  }
  const int vertices = static_cast<int>(g.vertex_count());
  if (k <= 0 || k >= vertices - 2) {
    throw InvalidInput("k=" + std::to_string(k) + " is outside 0 < k < " + std::to_string(vertices - 2) +
                       " for " + g.description());
  }
}

}  // namespace detail

inline CompletePairCounts complete_pair_counts(const Graph& g, int k) {
  if (!g.is_complete()) throw InvalidInput("complete_pair_counts needs a complete graph");
  detail::check_theorem_range(g, k);
  return {count_forests_constrained(g, k, {Edge::of(1, 2), Edge::of(2, 3)}),
          count_forests_constrained(g, k, {Edge::of(1, 2), Edge::of(3, 4)})};
}

inline BipartitePairCounts bipartite_pair_counts(const Graph& g, int k) {
  if (!g.is_bipartite()) throw InvalidInput("bipartite_pair_counts needs a complete bipartite graph");
  detail::check_theorem_range(g, k);
  return {count_forests_constrained(g, k, {Edge::cross(1, 1), Edge::cross(1, 2)}),
          count_forests_constrained(g, k, {Edge::cross(1, 1), Edge::cross(2, 1)}),
          count_forests_constrained(g, k, {Edge::cross(1, 1), Edge::cross(2, 2)})};
}

inline PairCounts edge_pair_counts(const Graph& g, int k) {
  if (g.is_complete()) return complete_pair_counts(g, k);
  return bipartite_pair_counts(g, k);
}

/// Closed-form counts of spanning trees of K_w through two adjacent edges and
/// through two disjoint edges: (3 w^{w-4}, 4 w^{w-4}).
inline std::pair<Integer, Integer> moon_tree_counts(int w) {
  if (w < 4) throw InvalidInput("moon_tree_counts needs w >= 4, got " + std::to_string(w));
  const Integer base = integer_power(Integer(w), static_cast<unsigned long>(w - 4));
  return {3 * base, 4 * base};
}

/// Number of two-component forests on W (a vertex subset of the complete
/// graph g containing vertices 1..4) whose tree through {1,2},{2,3} misses 4.
inline Integer count_separated_forests(const Graph& g, VertexSet w) {
  const std::size_t v1 = g.vertex_index(Vertex::plain(1));
  const std::size_t v4 = g.vertex_index(Vertex::plain(4));
  ForestConstraints through;
  through.required = g.edge_set({Edge::of(1, 2), Edge::of(2, 3)});
  Integer count = 0;
  for (const Forest& f : enumerate_forests_on(g, w, 2, through)) {
    if (!component_containing(g, f, v1).contains(v4)) ++count;
  }
  return count;
}

/// Computes t = sum_W |W|^{|W|-4} #F^{(k-1)}(W^c) and
/// f = sum_W #F'_W #F^{(k-2)}(W^c) over {1,2,3,4} <= W <= {1..n}, where
/// #F^{(j)}(U) counts j-component forests on U.
inline Decomposition pq_decomposition(int n, int k) {
  if (n < 4) throw InvalidInput("pq_decomposition needs n >= 4, got " + std::to_string(n));
  if (k <= 0 || k >= n - 2) {
    throw InvalidInput("pq_decomposition needs 0 < k < n - 2, got n=" + std::to_string(n) +
                       ", k=" + std::to_string(k));
  }
  const Graph g = complete_graph(n);
  const std::size_t extra = static_cast<std::size_t>(n - 4);
  Decomposition d{0, 0};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << extra); ++mask) {
    const VertexSet w = VertexSet::first(4) | VertexSet(mask << 4);
    const int size = static_cast<int>(w.size());
    const int rest = n - size;
    const Integer trees_below = count_labeled_forests(rest, k - 1);
    if (trees_below != 0) d.t += integer_power(Integer(size), static_cast<unsigned long>(size - 4)) * trees_below;
    const Integer forests_below = count_labeled_forests(rest, k - 2);
    if (forests_below != 0) d.f += count_separated_forests(g, w) * forests_below;
  }
  return d;
}

}  // namespace forest_spectra
