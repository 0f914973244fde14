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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "forest_spectra/errors.hpp"
#include "forest_spectra/graph.hpp"
#include "forest_spectra/index_set.hpp"

namespace forest_spectra {

/// An acyclic edge set of a graph spanning a fixed vertex set. Isolated
/// vertices count as components, so a forest on V with E edges has
/// |V| - |E| components. The owning Graph is passed alongside.
struct Forest {
  VertexSet vertices;
  EdgeSet edges;

  std::size_t component_count() const { return vertices.size() - edges.size(); }

  friend bool operator==(const Forest&, const Forest&) = default;
  friend auto operator<=>(const Forest&, const Forest&) = default;
};

/// Lexicographic order on ascending edge-index sequences; this is the order in
/// which forests are enumerated.
inline bool canonical_less(EdgeSet x, EdgeSet y) {
  const EdgeSet diff = (x - y) | (y - x);
  if (diff.empty()) return false;
  const std::size_t first = diff.front();
  const EdgeSet above = EdgeSet(~((std::uint64_t{2} << first) - 1));
  // The set holding the first differing index is smaller unless the other
  // one stops there, in which case the other is a proper prefix.
  if (x.contains(first)) return !(y & above).empty();
  return (x & above).empty();
}

inline bool canonical_less(const Forest& x, const Forest& y) {
  if (x.edges != y.edges) return canonical_less(x.edges, y.edges);
  return x.vertices < y.vertices;
}

namespace detail {

/// Union-find over at most 64 elements without path compression, so merges
/// can be undone in LIFO order.
class RollbackUnionFind {
 public:
  RollbackUnionFind() {
    std::iota(parent_.begin(), parent_.end(), std::uint8_t{0});
    size_.fill(1);
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  /// Merges the classes of a and b; false (and no change) if already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = static_cast<std::uint8_t>(a);
    size_[a] += size_[b];
    history_[depth_++] = static_cast<std::uint8_t>(b);
    return true;
  }

  std::size_t mark() const { return depth_; }

  void rollback(std::size_t mark) {
    while (depth_ > mark) {
      const std::size_t b = history_[--depth_];
      const std::size_t a = parent_[b];
      size_[a] -= size_[b];
      parent_[b] = static_cast<std::uint8_t>(b);
    }
  }

 private:
  std::array<std::uint8_t, 64> parent_{};
  std::array<std::uint8_t, 64> size_{};
  std::array<std::uint8_t, 64> history_{};
  std::size_t depth_ = 0;
};

}  // namespace detail

inline bool is_forest(const Graph& g, const Forest& f) {
  if (!f.vertices.is_subset_of(g.all_vertices())) return false;
  if (!f.edges.is_subset_of(g.edges_within(f.vertices))) return false;
  detail::RollbackUnionFind uf;
  for (std::size_t e : f.edges) {
    auto [u, v] = g.endpoints(e);
    if (!uf.unite(u, v)) return false;
  }
  return true;
}

/// Connected components, ordered by smallest vertex index.
inline std::vector<VertexSet> components(const Graph& g, const Forest& f) {
  detail::RollbackUnionFind uf;
  for (std::size_t e : f.edges) {
    auto [u, v] = g.endpoints(e);
    uf.unite(u, v);
  }
  std::vector<VertexSet> result;
  std::array<int, 64> slot;
  slot.fill(-1);
  for (std::size_t v : f.vertices) {
    const std::size_t root = uf.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(result.size());
      result.emplace_back();
    }
    result[static_cast<std::size_t>(slot[root])].insert(v);
  }
  return result;
}

/// Vertex set of the component containing `vertex` (a vertex index).
inline VertexSet component_containing(const Graph& g, const Forest& f, std::size_t vertex) {
  if (!f.vertices.contains(vertex)) {
    throw InvalidInput("vertex " + g.vertices()[vertex].to_string() + " is not in the forest");
  }
  VertexSet reached{vertex};
  std::vector<std::size_t> stack{vertex};
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t e : f.edges) {
      auto [a, b] = g.endpoints(e);
      std::size_t other;
      if (a == u) {
        other = b;
      } else if (b == u) {
        other = a;
      } else {
        continue;
      }
      if (!reached.contains(other)) {
        reached.insert(other);
        stack.push_back(other);
      }
    }
  }
  return reached;
}

/// The sub-forest induced on a vertex subset.
inline Forest restrict_to(const Graph& g, const Forest& f, VertexSet vertices) {
  return Forest{f.vertices & vertices, f.edges & g.edges_within(f.vertices & vertices)};
}

inline std::string to_string(const Graph& g, const Forest& f) {
  std::string out = "{";
  bool first = true;
  for (std::size_t e : f.edges) {
    if (!first) out += ", ";
    out += g.edges()[e].to_string();
    first = false;
  }
  out += "} on {";
  first = true;
  for (std::size_t v : f.vertices) {
    if (!first) out += ",";
    out += g.vertices()[v].to_string();
    first = false;
  }
  return out + "}";
}

/// The two trees left after deleting an edge from a tree, each tagged with
/// the endpoint of the deleted edge it contains.
struct TreeSplit {
  Vertex first_endpoint;
  Forest first;
  Vertex second_endpoint;
  Forest second;
};

inline TreeSplit split_tree_at_edge(const Graph& g, const Forest& tree, const Edge& edge) {
  const std::size_t e = g.edge_index(edge);
  if (!tree.edges.contains(e)) {
    throw InvalidInput("edge " + edge.to_string() + " is not in the tree " + to_string(g, tree));
  }
  if (!is_forest(g, tree) || tree.component_count() != 1) {
    throw InvalidInput("split_tree_at_edge needs a tree, got " + to_string(g, tree));
  }
  const Forest cut{tree.vertices, tree.edges.without(e)};
  auto [u, v] = g.endpoints(e);
  const VertexSet side_u = component_containing(g, cut, u);
  const VertexSet side_v = tree.vertices - side_u;
  return TreeSplit{g.vertices()[u], restrict_to(g, cut, side_u), g.vertices()[v],
                   restrict_to(g, cut, side_v)};
}

}  // namespace forest_spectra
