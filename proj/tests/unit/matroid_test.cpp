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

#include "forest_spectra/forest_enum.hpp"
#include "forest_spectra/matroid.hpp"
#include "support/oracles.hpp"

namespace fs = forest_spectra;

TEST(Matroid, GraphicMatroidBasesAreSpanningTrees) {
  for (int n = 2; n <= 5; ++n) {
    const fs::Matroid m = fs::graphic_matroid(fs::complete_graph(n));
    EXPECT_EQ(m.rank(), n - 1);
    EXPECT_EQ(fs::Integer(static_cast<unsigned long>(m.bases().size())), oracle::cayley(n));
    EXPECT_TRUE(fs::verify_exchange_axiom(m));
  }
}

TEST(Matroid, TruncationsAreForests) {
  for (int n = 3; n <= 5; ++n) {
    const fs::Graph g = fs::complete_graph(n);
    const fs::Matroid full = fs::graphic_matroid(g);
    for (int r = 1; r < n; ++r) {
      const fs::Matroid direct = fs::truncated_graphic_matroid(g, r);
      const fs::Matroid cut = fs::truncate(full, r);
      EXPECT_EQ(direct.bases(), cut.bases()) << "n=" << n << " r=" << r;
      EXPECT_EQ(direct.bases().size(), fs::enumerate_forests(g, n - r).size());
      EXPECT_TRUE(fs::verify_exchange_axiom(direct));
    }
  }
}

TEST(Matroid, NonMatroidFailsExchange) {
  // {0,1} and {2,3}: removing 0 from the first admits no replacement.
  const fs::Matroid bad({"a", "b", "c", "d"}, {fs::ElementSet{0, 1}, fs::ElementSet{2, 3}});
  EXPECT_FALSE(fs::verify_exchange_axiom(bad));
  const fs::Matroid mixed({"a", "b", "c"}, {fs::ElementSet{0, 1}, fs::ElementSet{2}});
  EXPECT_FALSE(fs::verify_exchange_axiom(mixed));
  const fs::Matroid empty({"a"}, {});
  EXPECT_FALSE(fs::verify_exchange_axiom(empty));
  const fs::Matroid uniform({"a", "b", "c"}, {fs::ElementSet{0, 1}, fs::ElementSet{0, 2}, fs::ElementSet{1, 2}});
  EXPECT_TRUE(fs::verify_exchange_axiom(uniform));
}

TEST(Matroid, RejectsBadRanksAndElements) {
  const fs::Graph g = fs::complete_graph(4);
  EXPECT_THROW(fs::truncated_graphic_matroid(g, 0), fs::InvalidInput);
  EXPECT_THROW(fs::truncated_graphic_matroid(g, 4), fs::InvalidInput);
  EXPECT_THROW(fs::truncate(fs::graphic_matroid(g), 5), fs::InvalidInput);
  EXPECT_THROW(fs::Matroid({"a"}, {fs::ElementSet{3}}), fs::InvalidInput);
}

TEST(Matroid, BasisGeneratingPolynomial) {
  const fs::Graph g = fs::complete_graph(4);
  const fs::Polynomial phi = fs::basis_generating_polynomial(fs::truncated_graphic_matroid(g, 2));
  EXPECT_EQ(phi.term_count(), 15u);
  EXPECT_TRUE(phi.is_homogeneous());
  EXPECT_TRUE(phi.is_square_free());
  EXPECT_EQ(*phi.degree(), 2);
  EXPECT_EQ(phi.variables().front(), "x[1-2]");
  // Same monomials as the 2-component forest generating function.
  EXPECT_EQ(phi.terms(), fs::forest_generating_polynomial(g, 2).terms());
}
