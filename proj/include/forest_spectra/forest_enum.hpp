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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "forest_spectra/errors.hpp"
#include "forest_spectra/exact.hpp"
#include "forest_spectra/forest.hpp"
#include "forest_spectra/graph.hpp"
#include "forest_spectra/parallel.hpp"

namespace forest_spectra {

/// Edges a forest must contain / must avoid.
struct ForestConstraints {
  EdgeSet required;
  EdgeSet forbidden;
};

namespace detail {

/// Depth-first edge-inclusion search over the forests of g spanning a vertex
/// subset with a fixed number of edges. Candidate edges are visited in
/// ascending index order and "include" is tried before "exclude", so forests
/// come out in canonical order.
class ForestSearch {
 public:
  ForestSearch(const Graph& g, VertexSet vertices, std::size_t edge_target,
               const ForestConstraints& constraints)
      : graph_(&g), vertices_(vertices), target_(edge_target) {
    const EdgeSet allowed = g.edges_within(vertices) - constraints.forbidden;
    feasible_ = constraints.required.is_subset_of(allowed) && constraints.required.size() <= target_;
    for (std::size_t e : allowed) {
      candidates_.push_back(e);
      required_flags_.push_back(constraints.required.contains(e));
    }
    required_after_.assign(candidates_.size() + 1, 0);
    for (std::size_t i = candidates_.size(); i-- > 0;) {
      required_after_[i] = required_after_[i + 1] + (required_flags_[i] ? 1 : 0);
    }
  }

  /// A partially decided search state: candidates before `position` are
  /// settled and `chosen` holds the included ones.
  struct Prefix {
    std::size_t position;
    EdgeSet chosen;
  };

  /// Splits the search tree into independent prefixes of depth at most
  /// `depth`, in canonical order.
  std::vector<Prefix> prefixes(std::size_t depth) const {
    std::vector<Prefix> out;
    if (!feasible_) return out;
    RollbackUnionFind uf;
    split(0, EdgeSet{}, uf, depth, out);
    return out;
  }

  template <class Visit>
  void run(const Prefix& prefix, Visit& visit) const {
    RollbackUnionFind uf;
    for (std::size_t e : prefix.chosen) {
      auto [u, v] = graph_->endpoints(e);
      uf.unite(u, v);
    }
    descend(prefix.position, prefix.chosen, uf, visit);
  }

  VertexSet vertices() const { return vertices_; }

 private:
  bool viable(std::size_t position, std::size_t count) const {
    if (count + required_after_[position] > target_) return false;
    return count + (candidates_.size() - position) >= target_;
  }

  template <class Visit>
  void descend(std::size_t position, EdgeSet chosen, RollbackUnionFind& uf, Visit& visit) const {
    const std::size_t count = chosen.size();
    if (!viable(position, count)) return;
    if (count == target_) {
      visit(Forest{vertices_, chosen});
      return;
    }
    const std::size_t e = candidates_[position];
    auto [u, v] = graph_->endpoints(e);
    const std::size_t mark = uf.mark();
    if (uf.unite(u, v)) {
      descend(position + 1, chosen.with(e), uf, visit);
      uf.rollback(mark);
    }
    if (!required_flags_[position]) descend(position + 1, chosen, uf, visit);
  }

  void split(std::size_t position, EdgeSet chosen, RollbackUnionFind& uf, std::size_t depth,
             std::vector<Prefix>& out) const {
    const std::size_t count = chosen.size();
    if (!viable(position, count)) return;
    if (count == target_ || depth == 0) {
      out.push_back(Prefix{position, chosen});
      return;
    }
    const std::size_t e = candidates_[position];
    auto [u, v] = graph_->endpoints(e);
    const std::size_t mark = uf.mark();
    if (uf.unite(u, v)) {
      split(position + 1, chosen.with(e), uf, depth - 1, out);
      uf.rollback(mark);
    }
    if (!required_flags_[position]) split(position + 1, chosen, uf, depth - 1, out);
  }

  const Graph* graph_;
  VertexSet vertices_;
  std::size_t target_;
  bool feasible_ = true;
  std::vector<std::size_t> candidates_;
  std::vector<bool> required_flags_;
  std::vector<std::size_t> required_after_;
};

inline constexpr std::size_t kSplitDepth = 6;

inline void check_component_range(std::size_t vertex_count, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > vertex_count) {
    throw InvalidInput("component count k=" + std::to_string(k) + " must lie in [1, " +
                       std::to_string(vertex_count) + "]");
  }
}

inline void check_constraints(const ForestConstraints& c) {
  if (c.required.intersects(c.forbidden)) {
    throw InvalidInput("required and forbidden edge sets overlap");
  }
}

}  // namespace detail

/// All forests of g spanning `vertices` with exactly k components and
/// satisfying the constraints, in canonical order.
inline std::vector<Forest> enumerate_forests_on(const Graph& g, VertexSet vertices, int k,
                                                const ForestConstraints& constraints = {}) {
  detail::check_component_range(vertices.size(), k);
  detail::check_constraints(constraints);
  detail::ForestSearch search(g, vertices, vertices.size() - static_cast<std::size_t>(k), constraints);
  const auto prefixes = search.prefixes(detail::kSplitDepth);
  std::vector<std::vector<Forest>> chunks(prefixes.size());
  parallel_for(prefixes.size(), [&](std::size_t i) {
    auto collect = [&chunk = chunks[i]](const Forest& f) { chunk.push_back(f); };
    search.run(prefixes[i], collect);
  });
  std::vector<Forest> forests;
  for (auto& chunk : chunks) forests.insert(forests.end(), chunk.begin(), chunk.end());
  return forests;
}

/// Spanning forests of g with k components.
inline std::vector<Forest> enumerate_forests(const Graph& g, int k) {
  return enumerate_forests_on(g, g.all_vertices(), k);
}

/// Number of forests spanning `vertices` with k components under the
/// constraints. Unlike enumerate_forests_on, k = 0 is accepted and counts the
/// empty forest on the empty vertex set.
inline Integer count_forests_on(const Graph& g, VertexSet vertices, int k,
                                const ForestConstraints& constraints = {}) {
  detail::check_constraints(constraints);
  if (k < 0 || static_cast<std::size_t>(k) > vertices.size()) return 0;
  if (vertices.empty()) return constraints.required.empty() ? 1 : 0;
  if (k == 0) return 0;
  detail::ForestSearch search(g, vertices, vertices.size() - static_cast<std::size_t>(k), constraints);
  const auto prefixes = search.prefixes(detail::kSplitDepth);
  std::vector<std::uint64_t> counts(prefixes.size(), 0);
  parallel_for(prefixes.size(), [&](std::size_t i) {
    auto tally = [&n = counts[i]](const Forest&) { ++n; };
    search.run(prefixes[i], tally);
  });
  Integer total = 0;
  for (std::uint64_t c : counts) total += Integer(static_cast<unsigned long>(c));
  return total;
}

/// Number of spanning k-component forests of g containing every required
/// edge and no forbidden edge.
inline Integer count_forests_constrained(const Graph& g, int k, std::span<const Edge> required,
                                         std::span<const Edge> forbidden) {
  detail::check_component_range(g.vertex_count(), k);
  ForestConstraints constraints;
  for (const Edge& e : required) constraints.required.insert(g.edge_index(e));
  for (const Edge& e : forbidden) constraints.forbidden.insert(g.edge_index(e));
  return count_forests_on(g, g.all_vertices(), k, constraints);
}

inline Integer count_forests_constrained(const Graph& g, int k, std::initializer_list<Edge> required,
                                         std::initializer_list<Edge> forbidden = {}) {
  return count_forests_constrained(g, k, std::span<const Edge>(required.begin(), required.size()),
                                   std::span<const Edge>(forbidden.begin(), forbidden.size()));
}

/// Number of forests with j components on `size` labeled vertices; the empty
/// vertex set has exactly one forest, with zero components.
inline Integer count_labeled_forests(int size, int j) {
  if (size < 0) throw InvalidInput("negative vertex count");
  if (size == 0) return j == 0 ? 1 : 0;
  const Graph g = complete_graph(size);
  return count_forests_on(g, g.all_vertices(), j);
}

}  // namespace forest_spectra
