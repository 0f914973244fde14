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

#include "forest_spectra/exact.hpp"
#include "forest_spectra/graph.hpp"
#include "forest_spectra/index_set.hpp"

namespace fs = forest_spectra;

TEST(Exact, RationalsRenderInLowestTerms) {
  EXPECT_EQ(fs::to_string(fs::ratio(6, -4)), "-3/2");
  EXPECT_EQ(fs::to_string(fs::Rational(5)), "5/1");
  EXPECT_EQ(fs::to_string(fs::Rational(0)), "0/1");
}

TEST(Exact, ParseRational) {
  EXPECT_EQ(fs::parse_rational("3"), fs::Rational(3));
  EXPECT_EQ(fs::parse_rational("-4/6"), fs::ratio(-2, 3));
  EXPECT_EQ(fs::parse_rational(" 7/7 "), fs::Rational(1));
  EXPECT_THROW(fs::parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(fs::parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(fs::parse_rational(""), std::invalid_argument);
}

TEST(Exact, BinomialAndPowers) {
  EXPECT_EQ(fs::binomial(7, 2), 21);
  EXPECT_EQ(fs::binomial(3, 5), 0);
  EXPECT_EQ(fs::integer_power(fs::Integer(7), 3), 343);
  EXPECT_EQ(fs::rational_power(fs::ratio(-1, 2), 3), fs::ratio(-1, 8));
}

TEST(IndexSet, BasicOperations) {
  fs::VertexSet s{0, 3, 5};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.front(), 0u);
  EXPECT_EQ(s.to_vector(), (std::vector<std::size_t>{0, 3, 5}));
  EXPECT_EQ((s | fs::VertexSet{1}).size(), 4u);
  EXPECT_EQ(s - fs::VertexSet{3}, (fs::VertexSet{0, 5}));
  EXPECT_TRUE((fs::VertexSet{0, 5}).is_subset_of(s));
  EXPECT_TRUE(s.intersects(fs::VertexSet{5, 6}));
  EXPECT_EQ(fs::VertexSet::first(64).size(), 64u);
}

TEST(Graph, CompleteGraphIndexing) {
  const fs::Graph g = fs::complete_graph(4);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g.description(), "K_4");
  // Edges are listed lexicographically: 12, 13, 14, 23, 24, 34.
  EXPECT_EQ(g.edge_index(fs::Edge::of(1, 2)), 0u);
  EXPECT_EQ(g.edge_index(fs::Edge::of(2, 3)), 3u);
  EXPECT_EQ(g.edge_index(fs::Edge::of(4, 3)), 5u);
  EXPECT_EQ(g.edges()[4].to_string(), "2-4");
  EXPECT_THROW(g.edge_index(fs::Edge::of(1, 5)), fs::InvalidInput);
  EXPECT_THROW(fs::Edge::of(2, 2), fs::InvalidInput);
}

TEST(Graph, BipartiteIndexing) {
  const fs::Graph g = fs::complete_bipartite_graph(2, 3);
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g.description(), "K_{2,3}");
  EXPECT_EQ(g.vertex_index(fs::Vertex::barred(1)), 2u);
  EXPECT_EQ(g.edges()[0].to_string(), "1-1'");
  EXPECT_EQ(g.edge_index(fs::Edge::cross(2, 3)), 5u);
  EXPECT_FALSE(g.find_edge(fs::Edge::of(1, 2)).has_value());
}

TEST(Graph, RejectsDegenerateSizes) {
  EXPECT_THROW(fs::complete_graph(0), fs::InvalidInput);
  EXPECT_THROW(fs::complete_bipartite_graph(0, 3), fs::InvalidInput);
  EXPECT_THROW(fs::complete_graph(13), fs::InvalidInput);  // 78 edges
  EXPECT_NO_THROW(fs::complete_graph(11));
}

TEST(Graph, PairClassification) {
  const fs::Graph k4 = fs::complete_graph(4);
  EXPECT_EQ(fs::classify_edge_pair(k4, fs::Edge::of(1, 2), fs::Edge::of(1, 2)), fs::PairClass::Equal);
  EXPECT_EQ(fs::classify_edge_pair(k4, fs::Edge::of(1, 2), fs::Edge::of(2, 3)), fs::PairClass::ShareVertex);
  EXPECT_EQ(fs::classify_edge_pair(k4, fs::Edge::of(1, 2), fs::Edge::of(3, 4)), fs::PairClass::Disjoint);

  const fs::Graph k22 = fs::complete_bipartite_graph(2, 2);
  EXPECT_EQ(fs::classify_edge_pair(k22, fs::Edge::cross(1, 1), fs::Edge::cross(1, 2)), fs::PairClass::ShareLeft);
  EXPECT_EQ(fs::classify_edge_pair(k22, fs::Edge::cross(1, 1), fs::Edge::cross(2, 1)), fs::PairClass::ShareRight);
  EXPECT_EQ(fs::classify_edge_pair(k22, fs::Edge::cross(1, 1), fs::Edge::cross(2, 2)), fs::PairClass::Disjoint);
}

TEST(Graph, PairClassesAreSymmetric) {
  for (const fs::Graph& g : {fs::complete_graph(6), fs::complete_bipartite_graph(3, 4)}) {
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      for (std::size_t j = 0; j < g.edge_count(); ++j) {
        EXPECT_EQ(fs::classify_edge_pair(g, i, j), fs::classify_edge_pair(g, j, i));
      }
    }
  }
}
