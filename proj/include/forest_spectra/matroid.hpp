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

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "forest_spectra/errors.hpp"
#include "forest_spectra/forest_enum.hpp"
#include "forest_spectra/graph.hpp"
#include "forest_spectra/index_set.hpp"
#include "forest_spectra/parallel.hpp"
#include "forest_spectra/polynomial.hpp"

namespace forest_spectra {

struct ElementTag {};
using ElementSet = IndexSet<ElementTag>;

/// Records that a matroid is the rank-r truncation of the graphic matroid of
/// a complete or complete bipartite graph (r = |V| - 1 means untruncated).
struct GraphicOrigin {
  Graph graph;
  int rank;
};

/// A matroid stored extensionally: an ordered ground set and the full list of
/// bases, kept sorted in canonical order. Nothing is validated on
/// construction beyond membership in the ground set; verify_exchange_axiom
/// decides whether the basis system really is a matroid.
class Matroid {
 public:
  Matroid(std::vector<std::string> ground, std::vector<ElementSet> bases,
          std::optional<GraphicOrigin> origin = std::nullopt)
      : ground_(std::move(ground)), bases_(std::move(bases)), origin_(std::move(origin)) {
    if (ground_.size() > ElementSet::kCapacity) throw InvalidInput("ground set larger than 64 elements");
    const ElementSet everything = ElementSet::first(ground_.size());
    for (ElementSet b : bases_) {
      if (!b.is_subset_of(everything)) throw InvalidInput("basis uses elements outside the ground set");
    }
    std::sort(bases_.begin(), bases_.end(), [](ElementSet x, ElementSet y) {
      return canonical_less(EdgeSet(x.bits()), EdgeSet(y.bits()));
    });
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    lookup_.reserve(bases_.size() * 2);
    for (ElementSet b : bases_) lookup_.insert(b.bits());
  }

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<ElementSet>& bases() const { return bases_; }
  const std::optional<GraphicOrigin>& origin() const { return origin_; }

  /// Size of the first basis (0 when there are none).
  int rank() const { return bases_.empty() ? 0 : static_cast<int>(bases_.front().size()); }

  bool is_basis(ElementSet s) const { return lookup_.contains(s.bits()); }

 private:
  std::vector<std::string> ground_;
  std::vector<ElementSet> bases_;
  std::optional<GraphicOrigin> origin_;
  std::unordered_set<std::uint64_t> lookup_;
};

inline std::vector<std::string> edge_labels(const Graph& g) {
  std::vector<std::string> labels;
  for (const Edge& e : g.edges()) labels.push_back(e.to_string());
  return labels;
}

/// Polynomial variable names x[e] in canonical edge order.
inline std::vector<std::string> edge_variable_names(const Graph& g) {
  std::vector<std::string> names;
  for (const Edge& e : g.edges()) names.push_back("x[" + e.to_string() + "]");
  return names;
}

/// Bases are the spanning trees of g.
inline Matroid graphic_matroid(const Graph& g) {
  std::vector<ElementSet> bases;
  for (const Forest& tree : enumerate_forests(g, 1)) bases.emplace_back(tree.edges.bits());
  return Matroid(edge_labels(g), std::move(bases),
                 GraphicOrigin{g, static_cast<int>(g.vertex_count()) - 1});
}

/// Rank-r truncation: all r-subsets of bases of m.
inline Matroid truncate(const Matroid& m, int r) {
  if (r < 1 || r > m.rank()) {
    throw InvalidInput("truncation rank r=" + std::to_string(r) + " must lie in [1, " +
                       std::to_string(m.rank()) + "]");
  }
  std::unordered_set<std::uint64_t> seen;
  std::vector<ElementSet> bases;
  const std::size_t target = static_cast<std::size_t>(r);
  for (ElementSet b : m.bases()) {
    const std::vector<std::size_t> members = b.to_vector();
    std::vector<bool> pick(members.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(target), true);
    do {
      ElementSet subset;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (pick[i]) subset.insert(members[i]);
      }
      if (seen.insert(subset.bits()).second) bases.push_back(subset);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::optional<GraphicOrigin> origin;
  if (m.origin()) origin = GraphicOrigin{m.origin()->graph, r};
  return Matroid(m.ground(), std::move(bases), std::move(origin));
}

/// Truncated graphic matroid M^r of K_n or K_{m,n}, built directly from the
/// r-edge forests.
inline Matroid truncated_graphic_matroid(const Graph& g, int r) {
  const int vertices = static_cast<int>(g.vertex_count());
  if (r < 1 || r > vertices - 1) {
    throw InvalidInput("rank r=" + std::to_string(r) + " must lie in [1, " + std::to_string(vertices - 1) +
                       "] for " + g.description());
  }
  std::vector<ElementSet> bases;
  for (const Forest& f : enumerate_forests(g, vertices - r)) bases.emplace_back(f.edges.bits());
  return Matroid(edge_labels(g), std::move(bases), GraphicOrigin{g, r});
}

/// Exhaustive check of the matroid basis axioms: a nonempty, equicardinal
/// basis family in which every B1, B2 and x in B1 \ B2 admit y in B2 \ B1
/// with (B1 - x) + y a basis.
inline bool verify_exchange_axiom(const Matroid& m) {
  const auto& bases = m.bases();
  if (bases.empty()) return false;
  const std::size_t size = bases.front().size();
  for (ElementSet b : bases) {
    if (b.size() != size) return false;
  }
  std::atomic<bool> ok{true};
  parallel_for(bases.size(), [&](std::size_t i) {
    if (!ok.load(std::memory_order_relaxed)) return;
    const ElementSet b1 = bases[i];
    for (ElementSet b2 : bases) {
      for (std::size_t x : b1 - b2) {
        const ElementSet reduced = b1.without(x);
        bool found = false;
        for (std::size_t y : b2 - b1) {
          if (m.is_basis(reduced.with(y))) {
            found = true;
            break;
          }
        }
        if (!found) {
          ok.store(false, std::memory_order_relaxed);
          return;
        }
      }
    }
  });
  return ok.load();
}

/// Sum over bases of the product of their variables, variables x[label] in
/// ground order.
inline Polynomial basis_generating_polynomial(const Matroid& m) {
  std::vector<std::string> names;
  for (const std::string& label : m.ground()) names.push_back("x[" + label + "]");
  Polynomial phi(std::move(names));
  Exponents e(m.ground().size(), 0);
  for (ElementSet b : m.bases()) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i : b) e[i] = 1;
    phi.add_term(e, 1);
  }
  return phi;
}

/// Generating function of the spanning k-component forests of g.
inline Polynomial forest_generating_polynomial(const Graph& g, int k) {
  Polynomial phi(edge_variable_names(g));
  Exponents e(g.edge_count(), 0);
  for (const Forest& f : enumerate_forests(g, k)) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i : f.edges) e[i] = 1;
    phi.add_term(e, 1);
  }
  return phi;
}

}  // namespace forest_spectra
