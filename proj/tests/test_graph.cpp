// Copyright 2026 The lcdgraph Authors
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

#include "lcdgraph/graph.hpp"
#include "lcdgraph/paley.hpp"
#include "lcdgraph/random.hpp"
#include "support/convert.hpp"

namespace lcdg {
namespace {

using testing_support::to_mat;

// Common-neighbour counts straight from the edge list.
std::optional<SrgParams> srg_by_counting(const SimpleGraph& g) {
  const auto a = to_mat(g);
  const std::size_t v = g.order();
  std::set<std::size_t> degrees, lambdas, mus;
  for (std::size_t x = 0; x < v; ++x) {
    degrees.insert(static_cast<std::size_t>(std::accumulate(a[x].begin(), a[x].end(), 0)));
    for (std::size_t y = x + 1; y < v; ++y) {
      std::size_t common = 0;
      for (std::size_t z = 0; z < v; ++z) common += a[x][z] && a[y][z];
      (a[x][y] ? lambdas : mus).insert(common);
    }
  }
  if (degrees.size() != 1 || lambdas.size() > 1 || mus.size() > 1) return std::nullopt;
  const std::size_t k = *degrees.begin();
  if (k == 0 || k + 1 == v) return std::nullopt;
  return SrgParams{v, k, *lambdas.begin(), *mus.begin()};
}

TEST(GraphTest, Basics) {
  auto g = SimpleGraph::from_edges(4, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_TRUE(g.adjacent(1, 0));
  g.toggle_edge(0, 1);
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_THROW(g.add_edge(2, 2), Error);
  EXPECT_THROW(g.add_edge(0, 4), Error);
  EXPECT_EQ(complete_graph(5).complement(), empty_graph(5));
  EXPECT_EQ(cycle_graph(5).degree(3), 2U);
  EXPECT_EQ(petersen_graph().edge_count(), 15U);
  Rng rng(1);
  const auto big = random_graph(150, rng);
  EXPECT_EQ(big.complement().complement(), big);
  std::size_t deg_sum = 0;
  for (std::size_t x = 0; x < big.order(); ++x) deg_sum += big.degree(x);
  EXPECT_EQ(deg_sum, 2 * big.edge_count());
}

TEST(GraphTest, AdjacencyKinds) {
  const auto k3 = complete_graph(3);
  EXPECT_EQ(adjacency(k3), IntMatrix::all_ones(3, 3) - IntMatrix::identity(3));
  EXPECT_EQ(adjacency(k3, AdjacencyKind::pm1), IntMatrix::identity(3) - IntMatrix::all_ones(3, 3));
  EXPECT_EQ(adjacency(empty_graph(3), AdjacencyKind::pm1), IntMatrix::all_ones(3, 3) - IntMatrix::identity(3));
  const FiniteField f3(3);
  const auto m = adjacency(k3, AdjacencyKind::pm1, f3);
  EXPECT_EQ(m(0, 1), 2U);
  EXPECT_EQ(m(0, 0), 0U);
  EXPECT_EQ(SimpleGraph::from_adjacency(adjacency(petersen_graph())), petersen_graph());
  IntMatrix bad = adjacency(k3);
  bad(0, 0) = 1;
  EXPECT_THROW(SimpleGraph::from_adjacency(bad), Error);
  bad = adjacency(k3);
  bad(0, 1) = 0;
  EXPECT_THROW(SimpleGraph::from_adjacency(bad), Error);
}

TEST(GraphTest, RelabelMapsEdges) {
  Rng rng(2);
  const auto g = random_graph(12, rng);
  const auto perm = random_permutation(12, rng);
  const auto h = g.relabel(perm);
  for (std::size_t x = 0; x < 12; ++x)
    for (std::size_t y = 0; y < 12; ++y)
      if (x != y) EXPECT_EQ(g.adjacent(x, y), h.adjacent(perm[x], perm[y]));
}

TEST(GraphTest, SrgExamples) {
  EXPECT_EQ(srg_params(paley_graph(5)), (SrgParams{5, 2, 0, 1}));
  EXPECT_EQ(srg_params(petersen_graph()), (SrgParams{10, 3, 0, 1}));
  EXPECT_EQ(srg_params(path_graph(3)), std::nullopt);
  EXPECT_EQ(srg_params(complete_graph(5)), std::nullopt);
  EXPECT_EQ(srg_params(empty_graph(5)), std::nullopt);
  EXPECT_EQ(srg_params(triangular_graph(5)), (SrgParams{10, 6, 3, 4}));
  EXPECT_EQ(srg_params(rook_graph(4)), (SrgParams{16, 6, 2, 2}));
  EXPECT_EQ(srg_params(shrikhande_graph()), (SrgParams{16, 6, 2, 2}));
}

TEST(GraphTest, SrgAgreesWithCounting) {
  Rng rng(3);
  std::vector<SimpleGraph> graphs{petersen_graph(), triangular_graph(6), cycle_graph(6), rook_graph(3),
                                  disjoint_union(complete_graph(3), complete_graph(3))};
  for (int t = 0; t < 200; ++t) graphs.push_back(random_graph(rng.between(2, 9), rng));
  for (const auto& g : graphs) {
    const auto s = srg_params(g);
    EXPECT_EQ(s, srg_by_counting(g));
    if (s) {
      EXPECT_TRUE(s->feasible());
      // A^2 = kI + lambda A + mu (J - I - A) over the integers
      const auto a = adjacency(g);
      const auto i = IntMatrix::identity(g.order()), j = IntMatrix::all_ones(g.order(), g.order());
      const auto k = static_cast<long long>(s->k), l = static_cast<long long>(s->lambda),
                 m = static_cast<long long>(s->mu);
      EXPECT_EQ(a * a, k * i + l * a + m * (j - i - a));
    }
  }
}

TEST(GraphTest, PaleyParameters) {
  for (std::uint32_t q : {5U, 9U, 13U, 17U, 25U, 29U, 37U, 41U, 49U}) {
    const auto g = paley_graph(q);
    EXPECT_EQ(srg_params(g), paley_params(q)) << q;
    EXPECT_EQ(srg_by_counting(g), paley_params(q)) << q;
  }
  EXPECT_EQ(paley_params(41), (SrgParams{41, 20, 9, 10}));
  EXPECT_EQ(paley_params(9), (SrgParams{9, 4, 1, 2}));
  for (std::uint32_t q : {3U, 7U, 11U, 27U, 15U}) EXPECT_THROW(paley_graph(q), Error) << q;
  try {
    paley_graph(7);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_paley_order);
  }
}

TEST(GraphTest, PaleyFiveIsPentagon) {
  // squares mod 5 are {1, 4}: x ~ x +- 1
  EXPECT_EQ(paley_graph(5), cycle_graph(5));
}

TEST(GraphTest, PaleyNineUsesDefaultModulus) {
  // F_9 = F_3[x]/(x^2 + 1); squares of nonzero a + bx
  const auto g = paley_graph(9);
  std::set<std::size_t> squares;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      const int lo = ((a * a - b * b) % 3 + 3) % 3, hi = (2 * a * b) % 3;
      squares.insert(static_cast<std::size_t>(lo + 3 * hi));
    }
  EXPECT_EQ(squares.size(), 4U);
  for (std::size_t y = 1; y < 9; ++y) EXPECT_EQ(g.adjacent(0, y), squares.count(y) == 1) << y;
}

TEST(GraphTest, IdempotencyExamples) {
  EXPECT_TRUE(is_idempotent_mod2(complete_graph(3)));
  EXPECT_TRUE(is_idempotent_mod2(paley_graph(41)));
  EXPECT_FALSE(is_idempotent_mod2(paley_graph(13)));
  for (std::uint32_t q : {5U, 9U, 13U, 17U, 25U, 29U, 37U, 41U})
    EXPECT_EQ(is_idempotent_mod2(paley_graph(q)), q % 8 == 1) << q;
}

TEST(GraphTest, ParityAgreesWithMatrixAllGraphsUpToSeven) {
  // labelled counts, computed independently of the library
  const std::vector<std::size_t> expected{1, 1, 2, 5, 22, 97, 674};
  for (std::size_t v = 1; v <= 7; ++v) {
    const std::size_t pairs = v * (v - 1) / 2;
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      SimpleGraph g(v);
      std::size_t bit = 0;
      for (std::size_t a = 0; a < v; ++a)
        for (std::size_t b = a + 1; b < v; ++b, ++bit)
          if ((mask >> bit) & 1) g.add_edge(a, b);
      const bool m = idempotent_mod2_by_matrix(g);
      ASSERT_EQ(m, idempotent_mod2_by_parity(g));
      count += m;
    }
    EXPECT_EQ(count, expected[v - 1]) << v;
  }
}

TEST(GraphTest, ParityAgreesOnRandomGraphs) {
  Rng rng(4);
  for (int t = 0; t < 2000; ++t) {
    const auto g = random_graph(rng.between(8, 70), rng);
    const auto sq = oracle::multiply(to_mat(g), to_mat(g), 2);
    EXPECT_EQ(idempotent_mod2_by_parity(g), sq == to_mat(g));
  }
}

TEST(GraphTest, Pm1IdempotentMod3) {
  // K_3: A = -(J - I), A^2 = J + I which is not -(J - I) mod 3
  EXPECT_FALSE(pm1_idempotent_mod3(complete_graph(3)));
  EXPECT_TRUE(pm1_idempotent_mod3(SimpleGraph(1)));
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const auto g = random_graph(rng.between(1, 8), rng);
    oracle::Mat a(g.order(), oracle::Vec(g.order(), 0));
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t y = 0; y < g.order(); ++y)
        if (x != y) a[x][y] = g.adjacent(x, y) ? 2 : 1;
    EXPECT_EQ(pm1_idempotent_mod3(g), oracle::multiply(a, a, 3) == a);
  }
}

}  // namespace
}  // namespace lcdg
