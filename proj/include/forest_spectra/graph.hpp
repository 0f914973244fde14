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

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forest_spectra/errors.hpp"
#include "forest_spectra/index_set.hpp"

namespace forest_spectra {

/// Which part a vertex belongs to. Complete graphs only use Plain; the right
/// part of a bipartite graph uses Barred.
enum class Side : unsigned char { Plain, Barred };

struct Vertex {
  Side side = Side::Plain;
  int label = 0;

  static constexpr Vertex plain(int label) { return {Side::Plain, label}; }
  static constexpr Vertex barred(int label) { return {Side::Barred, label}; }

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;

  std::string to_string() const {
    return std::to_string(label) + (side == Side::Barred ? "'" : "");
  }
};

/// Unordered pair of distinct vertices, stored with a < b.
struct Edge {
  Vertex a;
  Vertex b;

  static Edge between(Vertex x, Vertex y) {
    if (x == y) {
      throw InvalidInput("an edge needs two distinct endpoints, got " + x.to_string() + " twice");
    }
    return x < y ? Edge{x, y} : Edge{y, x};
  }
  /// Shorthand for complete graphs: Edge::of(1, 2).
  static Edge of(int x, int y) { return between(Vertex::plain(x), Vertex::plain(y)); }
  /// Shorthand for bipartite graphs: left vertex x, right vertex y.
  static Edge cross(int x, int y) { return between(Vertex::plain(x), Vertex::barred(y)); }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;

  std::string to_string() const { return a.to_string() + "-" + b.to_string(); }
};

enum class GraphKind { Complete, CompleteBipartite };

enum class PairClass { Equal, ShareVertex, ShareLeft, ShareRight, Disjoint };

inline const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::Equal: return "equal";
    case PairClass::ShareVertex: return "share-vertex";
    case PairClass::ShareLeft: return "share-left";
    case PairClass::ShareRight: return "share-right";
    case PairClass::Disjoint: return "disjoint";
  }
  return "?";
}

/// A labeled complete graph K_n or complete bipartite graph K_{m,n}.
///
/// Vertices are numbered 0..V-1 internally: complete graphs map label i to
/// i-1; bipartite graphs map left label i to i-1 and right label j to m+j-1.
/// Edges are kept in lexicographic order of their endpoint labels, which is
/// also the row/column order of every matrix built from the graph.
class Graph {
 public:
  static Graph complete(int n) {
    if (n < 1) throw InvalidInput("complete graph needs n >= 1, got " + std::to_string(n));
    Graph g(GraphKind::Complete, n, 0);
    for (int i = 1; i <= n; ++i) g.vertices_.push_back(Vertex::plain(i));
    g.index_edges();
    return g;
  }

  static Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) {
      throw InvalidInput("complete bipartite graph needs m, n >= 1, got (" + std::to_string(m) +
                         ", " + std::to_string(n) + ")");
    }
    Graph g(GraphKind::CompleteBipartite, m, n);
    for (int i = 1; i <= m; ++i) g.vertices_.push_back(Vertex::plain(i));
    for (int j = 1; j <= n; ++j) g.vertices_.push_back(Vertex::barred(j));
    g.index_edges();
    return g;
  }

  GraphKind kind() const { return kind_; }
  bool is_complete() const { return kind_ == GraphKind::Complete; }
  bool is_bipartite() const { return kind_ == GraphKind::CompleteBipartite; }
  /// n for K_n, m for K_{m,n}.
  int left_size() const { return left_; }
  /// 0 for K_n, n for K_{m,n}.
  int right_size() const { return right_; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  VertexSet all_vertices() const { return VertexSet::first(vertex_count()); }
  EdgeSet all_edges() const { return EdgeSet::first(edge_count()); }

  std::optional<std::size_t> find_vertex(const Vertex& v) const {
    if (v.label < 1) return std::nullopt;
    const auto label = static_cast<std::size_t>(v.label);
    if (kind_ == GraphKind::Complete) {
      if (v.side != Side::Plain || label > static_cast<std::size_t>(left_)) return std::nullopt;
      return label - 1;
    }
    if (v.side == Side::Plain) {
      if (label > static_cast<std::size_t>(left_)) return std::nullopt;
      return label - 1;
    }
    if (label > static_cast<std::size_t>(right_)) return std::nullopt;
    return static_cast<std::size_t>(left_) + label - 1;
  }

  std::size_t vertex_index(const Vertex& v) const {
    if (auto i = find_vertex(v)) return *i;
    throw InvalidInput("vertex " + v.to_string() + " is not in " + description());
  }

  std::optional<std::size_t> find_edge(const Edge& e) const {
    auto u = find_vertex(e.a);
    auto v = find_vertex(e.b);
    if (!u || !v) return std::nullopt;
    return edge_between(*u, *v);
  }

  std::size_t edge_index(const Edge& e) const {
    if (auto i = find_edge(e)) return *i;
    throw InvalidInput("edge " + e.to_string() + " is not in " + description());
  }

  /// Edge joining two vertex indices, if the graph has one.
  std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const {
    const int id = pair_to_edge_[u * vertices_.size() + v];
    if (id < 0) return std::nullopt;
    return static_cast<std::size_t>(id);
  }

  /// Vertex indices of an edge, smaller first.
  std::pair<std::size_t, std::size_t> endpoints(std::size_t edge) const { return endpoints_[edge]; }

  EdgeSet edge_set(const std::vector<Edge>& edges) const {
    EdgeSet set;
    for (const Edge& e : edges) set.insert(edge_index(e));
    return set;
  }

  /// Edges with both endpoints inside `vertices`.
  EdgeSet edges_within(VertexSet vertices) const {
    EdgeSet set;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto [u, v] = endpoints_[e];
      if (vertices.contains(u) && vertices.contains(v)) set.insert(e);
    }
    return set;
  }

  std::string description() const {
    if (kind_ == GraphKind::Complete) return "K_" + std::to_string(left_);
    return "K_{" + std::to_string(left_) + "," + std::to_string(right_) + "}";
  }

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.kind_ == y.kind_ && x.left_ == y.left_ && x.right_ == y.right_;
  }

 private:
  Graph(GraphKind kind, int left, int right) : kind_(kind), left_(left), right_(right) {}

  void index_edges() {
    const std::size_t nv = vertices_.size();
    if (nv > VertexSet::kCapacity) throw InvalidInput(description() + " has too many vertices");
    pair_to_edge_.assign(nv * nv, -1);
    for (std::size_t u = 0; u < nv; ++u) {
      for (std::size_t v = u + 1; v < nv; ++v) {
        if (kind_ == GraphKind::CompleteBipartite && vertices_[u].side == vertices_[v].side) continue;
        if (edges_.size() == EdgeSet::kCapacity) {
          throw InvalidInput(description() + " has more than 64 edges");
        }
        const int id = static_cast<int>(edges_.size());
        pair_to_edge_[u * nv + v] = id;
        pair_to_edge_[v * nv + u] = id;
        edges_.push_back(Edge{vertices_[u], vertices_[v]});
        endpoints_.emplace_back(u, v);
      }
    }
  }

  GraphKind kind_;
  int left_;
  int right_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints_;
  std::vector<int> pair_to_edge_;
};

inline Graph complete_graph(int n) { return Graph::complete(n); }
inline Graph complete_bipartite_graph(int m, int n) { return Graph::complete_bipartite(m, n); }

/// Relation between two edges given by their indices in g.
inline PairClass classify_edge_pair(const Graph& g, std::size_t e, std::size_t f) {
  if (e >= g.edge_count() || f >= g.edge_count()) throw InvalidInput("edge index out of range");
  if (e == f) return PairClass::Equal;
  auto [a, b] = g.endpoints(e);
  auto [c, d] = g.endpoints(f);
  std::optional<std::size_t> shared;
  if (a == c || a == d) shared = a;
  if (b == c || b == d) shared = b;
  if (!shared) return PairClass::Disjoint;
  if (g.is_complete()) return PairClass::ShareVertex;
  return g.vertices()[*shared].side == Side::Plain ? PairClass::ShareLeft : PairClass::ShareRight;
}

inline PairClass classify_edge_pair(const Graph& g, const Edge& e, const Edge& f) {
  return classify_edge_pair(g, g.edge_index(e), g.edge_index(f));
}

}  // namespace forest_spectra
