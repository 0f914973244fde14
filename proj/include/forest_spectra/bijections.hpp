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
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "forest_spectra/errors.hpp"
#include "forest_spectra/exact.hpp"
#include "forest_spectra/forest.hpp"
#include "forest_spectra/forest_enum.hpp"
#include "forest_spectra/graph.hpp"

namespace forest_spectra {

// ---------------------------------------------------------------------------
// Forest surgery

/// Replaces edge `remove` by edge `add`. Fails (nullopt) when `remove` is
/// absent, `add` is already present or leaves the vertex set, or the result
/// has a cycle.
inline std::optional<Forest> exchange_edge(const Graph& g, const Forest& f, const Edge& remove, const Edge& add) {
  const std::size_t out = g.edge_index(remove);
  const std::size_t in = g.edge_index(add);
  if (!f.edges.contains(out) || f.edges.contains(in)) return std::nullopt;
  auto [u, v] = g.endpoints(in);
  if (!f.vertices.contains(u) || !f.vertices.contains(v)) return std::nullopt;
  Forest result{f.vertices, f.edges.without(out).with(in)};
  if (!is_forest(g, result)) return std::nullopt;
  return result;
}

/// Relabels the forest by the transposition of two vertices on the same side.
inline Forest transpose_vertices(const Graph& g, const Forest& f, const Vertex& x, const Vertex& y) {
  if (x.side != y.side) throw InvalidInput("can only transpose vertices on the same side");
  const std::size_t a = g.vertex_index(x);
  const std::size_t b = g.vertex_index(y);
  auto image = [&](std::size_t v) { return v == a ? b : (v == b ? a : v); };
  Forest out;
  for (std::size_t v : f.vertices) out.vertices.insert(image(v));
  for (std::size_t e : f.edges) {
    auto [u, v] = g.endpoints(e);
    out.edges.insert(*g.edge_between(image(u), image(v)));
  }
  return out;
}

/// Vertex set of the piece containing `vertex` once `cut` edges are removed.
inline VertexSet piece_containing(const Graph& g, const Forest& f, std::size_t vertex, EdgeSet cut) {
  return component_containing(g, Forest{f.vertices, f.edges - cut}, vertex);
}

// ---------------------------------------------------------------------------
// Verified bijections

/// Where a claimed bijection broke on a specific forest.
struct MapFailure {
  std::string map;
  Forest input;
  std::optional<Forest> output;
  std::string reason;
};

/// Outcome of an exhaustive, element-wise bijection check.
struct BijectionRecord {
  std::string name;
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::vector<MapFailure> failures;

  bool verified() const { return failures.empty(); }
};

using ForestMap = std::function<std::optional<Forest>(const Forest&)>;

/// Checks that `forward` maps every domain element into the codomain, that
/// `backward` maps every codomain element into the domain, and that both
/// composites are the identity.
inline BijectionRecord verify_bijection(std::string name, const std::vector<Forest>& domain,
                                        const std::vector<Forest>& codomain, const std::string& forward_name,
                                        const ForestMap& forward, const std::string& backward_name,
                                        const ForestMap& backward) {
  BijectionRecord record{std::move(name), domain.size(), codomain.size(), {}};
  const std::set<Forest> domain_set(domain.begin(), domain.end());
  const std::set<Forest> codomain_set(codomain.begin(), codomain.end());

  auto check = [&](const std::vector<Forest>& source, const std::set<Forest>& target, const std::string& there,
                   const ForestMap& go, const std::string& back_name, const ForestMap& back) {
    for (const Forest& x : source) {
      const std::optional<Forest> y = go(x);
      if (!y) {
        record.failures.push_back({there, x, std::nullopt, "map undefined (missing edge or cycle)"});
        continue;
      }
      if (!target.contains(*y)) {
        record.failures.push_back({there, x, y, "image outside the target family"});
        continue;
      }
      const std::optional<Forest> z = back(*y);
      if (!z || *z != x) {
        record.failures.push_back({back_name + " o " + there, x, z, "round trip does not return the input"});
      }
    }
  };
  check(domain, codomain_set, forward_name, forward, backward_name, backward);
  check(codomain, domain_set, backward_name, backward, forward_name, forward);
  return record;
}

// ---------------------------------------------------------------------------
// Complete graphs

/// Families on a vertex subset W of K_n that contains 1, 2, 3, 4.
struct SubsetFamilies {
  VertexSet w;
  std::vector<Forest> trees_adjacent;   // spanning trees of W through {1,2},{2,3}
  std::vector<Forest> trees_disjoint;   // spanning trees of W through {1,2},{3,4}
  std::vector<Forest> split_adjacent;   // 2-forests: {1,2},{2,3} in one tree, 4 in the other
  std::vector<Forest> split_disjoint;   // 2-forests: {1,2} in one tree, {3,4} in the other
};

struct CompleteFamilies {
  int n = 0;
  int k = 0;
  std::vector<Forest> adjacent;  // k-forests through {1,2},{2,3}
  std::vector<Forest> disjoint;  // k-forests through {1,2},{3,4}
  std::vector<SubsetFamilies> subsets;
};

namespace detail {

inline void require_distinguished_complete(const Graph& g) {
  if (!g.is_complete()) throw InvalidInput("expected a complete graph");
  if (g.left_size() < 4) throw InsufficientVertices("need vertices 1..4, got " + g.description());
}

inline void require_distinguished_bipartite(const Graph& g) {
  if (!g.is_bipartite()) throw InvalidInput("expected a complete bipartite graph");
  if (g.left_size() < 2 || g.right_size() < 2) {
    throw InsufficientVertices("need vertices 1, 2, 1', 2', got " + g.description());
  }
}

inline void require_family_range(const Graph& g, int k) {
  const int limit = static_cast<int>(g.vertex_count()) - 2;
  if (k < 1 || k > limit) {
    throw InvalidInput("families need 1 <= k <= " + std::to_string(limit) + " on " + g.description() +
                       ", got k=" + std::to_string(k));
  }
}

inline std::vector<Forest> with_edges(const Graph& g, VertexSet vertices, int k, std::initializer_list<Edge> edges) {
  ForestConstraints c;
  for (const Edge& e : edges) c.required.insert(g.edge_index(e));
  return enumerate_forests_on(g, vertices, k, c);
}

}  // namespace detail

inline SubsetFamilies build_subset_families(const Graph& g, VertexSet w) {
  detail::require_distinguished_complete(g);
  if (!VertexSet::first(4).is_subset_of(w) || !w.is_subset_of(g.all_vertices())) {
    throw InvalidInput("W must contain 1, 2, 3, 4 and lie inside " + g.description());
  }
  const std::size_t v1 = 0;
  const std::size_t v4 = 3;
  SubsetFamilies s;
  s.w = w;
  s.trees_adjacent = detail::with_edges(g, w, 1, {Edge::of(1, 2), Edge::of(2, 3)});
  s.trees_disjoint = detail::with_edges(g, w, 1, {Edge::of(1, 2), Edge::of(3, 4)});
  for (const Forest& f : detail::with_edges(g, w, 2, {Edge::of(1, 2), Edge::of(2, 3)})) {
    if (!component_containing(g, f, v1).contains(v4)) s.split_adjacent.push_back(f);
  }
  for (const Forest& f : detail::with_edges(g, w, 2, {Edge::of(1, 2), Edge::of(3, 4)})) {
    if (!component_containing(g, f, v1).contains(v4)) s.split_disjoint.push_back(f);
  }
  return s;
}

inline CompleteFamilies build_complete_families(const Graph& g, int k) {
  detail::require_distinguished_complete(g);
  detail::require_family_range(g, k);
  CompleteFamilies fam;
  fam.n = g.left_size();
  fam.k = k;
  fam.adjacent = detail::with_edges(g, g.all_vertices(), k, {Edge::of(1, 2), Edge::of(2, 3)});
  fam.disjoint = detail::with_edges(g, g.all_vertices(), k, {Edge::of(1, 2), Edge::of(3, 4)});
  const std::size_t extra = g.vertex_count() - 4;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << extra); ++mask) {
    fam.subsets.push_back(build_subset_families(g, VertexSet::first(4) | VertexSet(mask << 4)));
  }
  return fam;
}

/// Moves a tree's third vertex across: on a 2-forest of W whose tree T_a
/// holds {1,2},{2,3} and whose other tree T_b holds 4, cut T_a at {2,3} and
/// hang the part containing 3 onto T_b via {3,4}. The inverse cuts the tree
/// through {3,4} and hangs the part containing 3 back onto 2.
inline BijectionRecord bijection_forestbij(const Graph& g, VertexSet w) {
  const SubsetFamilies s = build_subset_families(g, w);
  const Edge e12 = Edge::of(1, 2);
  const Edge e23 = Edge::of(2, 3);
  const Edge e34 = Edge::of(3, 4);
  const std::size_t v1 = 0;
  const std::size_t v3 = 2;
  const std::size_t v4 = 3;

  auto forward = [&](const Forest& t) -> std::optional<Forest> {
    if (t.component_count() != 2) return std::nullopt;
    const VertexSet a = component_containing(g, t, v1);
    const Forest tree_a = restrict_to(g, t, a);
    const Forest tree_b = restrict_to(g, t, t.vertices - a);
    if (!tree_a.edges.contains(g.edge_index(e23)) || !tree_b.vertices.contains(v4)) return std::nullopt;
    const TreeSplit cut = split_tree_at_edge(g, tree_a, e23);
    const Forest& keep = cut.first_endpoint == Vertex::plain(2) ? cut.first : cut.second;
    const Forest& moved = cut.first_endpoint == Vertex::plain(2) ? cut.second : cut.first;
    return Forest{t.vertices, keep.edges | moved.edges | tree_b.edges | EdgeSet{g.edge_index(e34)}};
  };
  auto backward = [&](const Forest& t) -> std::optional<Forest> {
    if (t.component_count() != 2) return std::nullopt;
    const VertexSet c = component_containing(g, t, v1);
    const Forest tree_c = restrict_to(g, t, c);
    const Forest tree_d = restrict_to(g, t, t.vertices - c);
    if (!tree_c.edges.contains(g.edge_index(e12)) || !tree_d.edges.contains(g.edge_index(e34))) {
      return std::nullopt;
    }
    const TreeSplit cut = split_tree_at_edge(g, tree_d, e34);
    const Forest& with3 = cut.first.vertices.contains(v3) ? cut.first : cut.second;
    const Forest& with4 = cut.first.vertices.contains(v3) ? cut.second : cut.first;
    return Forest{t.vertices, with3.edges | tree_c.edges | with4.edges | EdgeSet{g.edge_index(e23)}};
  };
  std::string name = "forestbij W={";
  bool first = true;
  for (std::size_t v : w) {
    name += (first ? "" : ",") + g.vertices()[v].to_string();
    first = false;
  }
  name += "}";
  return verify_bijection(name, s.split_adjacent, s.split_disjoint, "f", forward, "g", backward);
}

// ---------------------------------------------------------------------------
// Complete bipartite graphs
//
// Distinguished vertices: a = 1, b = 1', c = 2, d = 2'. The families are
//   shared_left  (P): forests through ab, ad
//   shared_right (Q): forests through ab, bc
//   disjoint     (R): forests through ab, cd
// and their refinements below.

struct BipartiteFamilies {
  int m = 0;
  int n = 0;
  int k = 0;
  std::vector<Forest> shared_left;              // P
  std::vector<Forest> shared_right;             // Q
  std::vector<Forest> disjoint;                 // R
  std::vector<Forest> left_and_disjoint;        // Z  = P with cd
  std::vector<Forest> right_and_disjoint;       // Z' = Q with cd
  std::vector<Forest> shared_left_only;         // P' = P without cd
  std::vector<Forest> disjoint_without_left;    // R' = R without ad
  std::vector<Forest> shared_right_only;        // Q' = Q without cd
  std::vector<Forest> disjoint_without_right;   // R'' = R without bc
  std::array<std::vector<Forest>, 4> shared_left_parts;    // P_1..P_4
  std::array<std::vector<Forest>, 4> shared_right_parts;   // Q_1..Q_4
  std::array<std::vector<Forest>, 5> disjoint_parts;       // R_1..R_5 (refining R')
  std::array<std::vector<Forest>, 5> disjoint_right_parts; // R'_1..R'_5 (refining R'')
};

namespace detail {

struct Distinguished {
  std::size_t a, b, c, d;
  std::size_t ab, ad, bc, cd;

  explicit Distinguished(const Graph& g)
      : a(g.vertex_index(Vertex::plain(1))),
        b(g.vertex_index(Vertex::barred(1))),
        c(g.vertex_index(Vertex::plain(2))),
        d(g.vertex_index(Vertex::barred(2))),
        ab(g.edge_index(Edge::cross(1, 1))),
        ad(g.edge_index(Edge::cross(1, 2))),
        bc(g.edge_index(Edge::cross(2, 1))),
        cd(g.edge_index(Edge::cross(2, 2))) {}
};

/// Part (1..4) of a P' forest: remove ab, ad from the tree through a and
/// locate c among the pieces holding a (1), b (2), d (4), or outside (3).
inline int shared_left_part(const Graph& g, const Distinguished& x, const Forest& f) {
  const EdgeSet cut{x.ab, x.ad};
  if (piece_containing(g, f, x.a, cut).contains(x.c)) return 1;
  if (piece_containing(g, f, x.b, cut).contains(x.c)) return 2;
  if (piece_containing(g, f, x.d, cut).contains(x.c)) return 4;
  return 3;
}

/// Part (1..4) of a Q' forest: remove ab, bc and locate d among the pieces
/// holding a (1), b (2), c (4), or outside (3).
inline int shared_right_part(const Graph& g, const Distinguished& x, const Forest& f) {
  const EdgeSet cut{x.ab, x.bc};
  if (piece_containing(g, f, x.a, cut).contains(x.d)) return 1;
  if (piece_containing(g, f, x.b, cut).contains(x.d)) return 2;
  if (piece_containing(g, f, x.c, cut).contains(x.d)) return 4;
  return 3;
}

/// Part (1..5) of an R forest: remove ab and cd; with A, B the pieces holding
/// a and b, exactly one of c, d lies outside A and B unless both do:
///   1: c in A,  2: c in B,  3: c, d outside,  4: d in A,  5: d in B.
/// Returns 0 if the forest fits none of these (impossible for forests in R).
inline int disjoint_part(const Graph& g, const Distinguished& x, const Forest& f) {
  const EdgeSet cut{x.ab, x.cd};
  const VertexSet pa = piece_containing(g, f, x.a, cut);
  const VertexSet pb = piece_containing(g, f, x.b, cut);
  const bool c_out = !pa.contains(x.c) && !pb.contains(x.c);
  const bool d_out = !pa.contains(x.d) && !pb.contains(x.d);
  if (pa.contains(x.c) && d_out) return 1;
  if (pb.contains(x.c) && d_out) return 2;
  if (c_out && d_out) return 3;
  if (c_out && pa.contains(x.d)) return 4;
  if (c_out && pb.contains(x.d)) return 5;
  return 0;
}

}  // namespace detail

inline BipartiteFamilies build_bipartite_families(const Graph& g, int k) {
  detail::require_distinguished_bipartite(g);
  detail::require_family_range(g, k);
  const detail::Distinguished x(g);
  BipartiteFamilies fam;
  fam.m = g.left_size();
  fam.n = g.right_size();
  fam.k = k;
  fam.shared_left = detail::with_edges(g, g.all_vertices(), k, {Edge::cross(1, 1), Edge::cross(1, 2)});
  fam.shared_right = detail::with_edges(g, g.all_vertices(), k, {Edge::cross(1, 1), Edge::cross(2, 1)});
  fam.disjoint = detail::with_edges(g, g.all_vertices(), k, {Edge::cross(1, 1), Edge::cross(2, 2)});

  for (const Forest& f : fam.shared_left) {
    if (f.edges.contains(x.cd)) {
      fam.left_and_disjoint.push_back(f);
    } else {
      fam.shared_left_only.push_back(f);
      fam.shared_left_parts[detail::shared_left_part(g, x, f) - 1].push_back(f);
    }
  }
  for (const Forest& f : fam.shared_right) {
    if (f.edges.contains(x.cd)) {
      fam.right_and_disjoint.push_back(f);
    } else {
      fam.shared_right_only.push_back(f);
      fam.shared_right_parts[detail::shared_right_part(g, x, f) - 1].push_back(f);
    }
  }
  for (const Forest& f : fam.disjoint) {
    const int part = detail::disjoint_part(g, x, f);
    if (!f.edges.contains(x.ad)) {
      fam.disjoint_without_left.push_back(f);
      if (part > 0) fam.disjoint_parts[part - 1].push_back(f);
    }
    if (!f.edges.contains(x.bc)) {
      fam.disjoint_without_right.push_back(f);
      // The right-hand refinement uses the same piece test on all of R'',
      // which also sorts forests through ad (always part 4).
      if (part > 0) fam.disjoint_right_parts[part - 1].push_back(f);
    }
  }
  return fam;
}

using ForestFamilies = std::variant<CompleteFamilies, BipartiteFamilies>;

inline ForestFamilies build_families(const Graph& g, int k) {
  if (g.is_complete()) return build_complete_families(g, k);
  return build_bipartite_families(g, k);
}

/// Whether `parts` are pairwise disjoint and their union is `whole`.
struct PartitionCheck {
  std::string name;
  bool disjoint = false;
  bool covering = false;

  bool holds() const { return disjoint && covering; }
};

inline PartitionCheck check_partition(std::string name, const std::vector<Forest>& whole,
                                      const std::vector<const std::vector<Forest>*>& parts) {
  std::set<Forest> seen;
  std::size_t total = 0;
  for (const auto* part : parts) {
    total += part->size();
    seen.insert(part->begin(), part->end());
  }
  const std::set<Forest> target(whole.begin(), whole.end());
  return PartitionCheck{std::move(name), seen.size() == total, seen == target};
}

inline std::vector<Forest> intersection(const std::vector<Forest>& x, const std::vector<Forest>& y) {
  const std::set<Forest> ys(y.begin(), y.end());
  std::vector<Forest> out;
  for (const Forest& f : x) {
    if (ys.contains(f)) out.push_back(f);
  }
  return out;
}

inline std::vector<PartitionCheck> check_partitions(const BipartiteFamilies& fam) {
  const auto& pl = fam.shared_left_parts;
  const auto& pr = fam.shared_right_parts;
  const auto& rd = fam.disjoint_parts;
  const auto& rr = fam.disjoint_right_parts;
  const std::vector<Forest> pr_meet = intersection(fam.shared_left, fam.disjoint);
  const std::vector<Forest> qr_meet = intersection(fam.shared_right, fam.disjoint);
  return {
      check_partition("P = Z + P1 + P2 + P3 + P4", fam.shared_left,
                      {&fam.left_and_disjoint, &pl[0], &pl[1], &pl[2], &pl[3]}),
      check_partition("R = Z + R1 + ... + R5", fam.disjoint,
                      {&fam.left_and_disjoint, &rd[0], &rd[1], &rd[2], &rd[3], &rd[4]}),
      check_partition("Q = Z' + Q1 + Q2 + Q3 + Q4", fam.shared_right,
                      {&fam.right_and_disjoint, &pr[0], &pr[1], &pr[2], &pr[3]}),
      check_partition("R = Z' + R'1 + ... + R'5", fam.disjoint,
                      {&fam.right_and_disjoint, &rr[0], &rr[1], &rr[2], &rr[3], &rr[4]}),
      check_partition("Z = P n R", pr_meet, {&fam.left_and_disjoint}),
      check_partition("Z' = Q n R", qr_meet, {&fam.right_and_disjoint}),
  };
}

/// P_i -> R_i for i = 1, 2, 3: trade edge ad for cd; the inverse trades back.
inline BijectionRecord bijections_pr123(const Graph& g, const BipartiteFamilies& fam, int i) {
  if (i < 1 || i > 3) throw InvalidInput("bijections_pr123 index must be 1, 2 or 3");
  const Edge ad = Edge::cross(1, 2);
  const Edge cd = Edge::cross(2, 2);
  const auto idx = static_cast<std::size_t>(i - 1);
  return verify_bijection(
      "pr123 i=" + std::to_string(i), fam.shared_left_parts[idx], fam.disjoint_parts[idx], "f" + std::to_string(i),
      [&](const Forest& f) { return exchange_edge(g, f, ad, cd); }, "g" + std::to_string(i),
      [&](const Forest& f) { return exchange_edge(g, f, cd, ad); });
}

inline BijectionRecord bijections_pr123(const Graph& g, int k, int i) {
  return bijections_pr123(g, build_bipartite_families(g, k), i);
}

/// P_4 -> R_4: swap vertices 1 and 2, then trade edge bc for ab. The same
/// recipe inverts itself.
inline BijectionRecord bijection_pr4(const Graph& g, const BipartiteFamilies& fam) {
  const Edge ab = Edge::cross(1, 1);
  const Edge bc = Edge::cross(2, 1);
  auto swap_then_trade = [&](const Forest& f) {
    return exchange_edge(g, transpose_vertices(g, f, Vertex::plain(1), Vertex::plain(2)), bc, ab);
  };
  return verify_bijection("pr4", fam.shared_left_parts[3], fam.disjoint_parts[3], "h", swap_then_trade, "h'",
                          swap_then_trade);
}

inline BijectionRecord bijection_pr4(const Graph& g, int k) { return bijection_pr4(g, build_bipartite_families(g, k)); }

/// Q_2 -> R_5: trade edge bc for cd; the inverse trades back.
inline BijectionRecord bijection_q2r5(const Graph& g, const BipartiteFamilies& fam) {
  const Edge bc = Edge::cross(2, 1);
  const Edge cd = Edge::cross(2, 2);
  return verify_bijection(
      "q2r5", fam.shared_right_parts[1], fam.disjoint_parts[4], "f'",
      [&](const Forest& f) { return exchange_edge(g, f, bc, cd); }, "g'",
      [&](const Forest& f) { return exchange_edge(g, f, cd, bc); });
}

inline BijectionRecord bijection_q2r5(const Graph& g, int k) {
  return bijection_q2r5(g, build_bipartite_families(g, k));
}

/// Where strict p < r is forced: some forest routes 1' to 2' through a third
/// left vertex, which needs m >= 3 and room for four edges in one tree.
inline bool strict_left_inequality_expected(int m, int n, int k) { return m >= 3 && k <= m + n - 4; }

/// Mirror image of strict_left_inequality_expected.
inline bool strict_right_inequality_expected(int m, int n, int k) { return n >= 3 && k <= m + n - 4; }

/// Exact comparison of p = #P, q = #Q, r = #R.
struct CountInequalityReport {
  Integer p;
  Integer q;
  Integer r;
  Integer p_minus_r;
  Integer q_minus_r;
  Integer r_minus_p_minus_q;
  /// #R_5: the bijections give p = r - #R_5.
  Integer left_surplus;
  /// #R'_1: the mirrored argument gives q = r - #R'_1.
  Integer right_surplus;
  /// Whether the instance admits forests in R_5 (resp. R'_1), which is
  /// exactly when the strict inequality p < r (resp. q < r) can hold.
  bool strict_left_expected = false;
  bool strict_right_expected = false;

  bool p_less_than_r() const { return p_minus_r < 0; }
  bool q_less_than_r() const { return q_minus_r < 0; }
  bool r_less_than_p_plus_q() const { return r_minus_p_minus_q < 0; }
  bool all_strict() const { return p_less_than_r() && q_less_than_r() && r_less_than_p_plus_q(); }
  bool surplus_identities_hold() const { return p == r - left_surplus && q == r - right_surplus; }
  /// Strictness exactly where expected, equality elsewhere, r < p + q, and
  /// both surplus identities.
  bool consistent() const {
    return p_less_than_r() == strict_left_expected && q_less_than_r() == strict_right_expected &&
           (p_less_than_r() || p == r) && (q_less_than_r() || q == r) && r_less_than_p_plus_q() &&
           surplus_identities_hold();
  }
};

inline CountInequalityReport verify_count_inequalities(const BipartiteFamilies& fam) {
  auto count = [](const std::vector<Forest>& v) { return Integer(static_cast<unsigned long>(v.size())); };
  CountInequalityReport rep;
  rep.p = count(fam.shared_left);
  rep.q = count(fam.shared_right);
  rep.r = count(fam.disjoint);
  rep.p_minus_r = rep.p - rep.r;
  rep.q_minus_r = rep.q - rep.r;
  rep.r_minus_p_minus_q = rep.r - rep.p - rep.q;
  rep.left_surplus = count(fam.disjoint_parts[4]);
  rep.right_surplus = count(fam.disjoint_right_parts[0]);
  rep.strict_left_expected = strict_left_inequality_expected(fam.m, fam.n, fam.k);
  rep.strict_right_expected = strict_right_inequality_expected(fam.m, fam.n, fam.k);
  return rep;
}

}  // namespace forest_spectra
