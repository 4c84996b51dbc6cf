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
#include "lcdgraph/matrix.hpp"
#include "lcdgraph/paley.hpp"
#include "lcdgraph/random.hpp"
#include "support/convert.hpp"

namespace lcdg {
namespace {

using testing_support::matrix;
using testing_support::to_mat;

TEST(MatrixTest, RrefExamples) {
  const FiniteField f2(2);
  const auto id = rref(ExactMatrix::identity(f2, 3));
  EXPECT_EQ(id.reduced, ExactMatrix::identity(f2, 3));
  EXPECT_EQ(id.rank, 3U);
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2}));

  const auto ones = rref(ExactMatrix::all_ones(f2, 3, 3));
  EXPECT_EQ(ones.rank, 1U);
  EXPECT_EQ(ones.pivots, (std::vector<std::size_t>{0}));

  EXPECT_EQ(rank(adjacency(complete_graph(3), AdjacencyKind::zero_one, f2)), 2U);
}

TEST(MatrixTest, InvertExamples) {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const FiniteField f(p);
    EXPECT_EQ(invert(ExactMatrix::identity(f, 4)), ExactMatrix::identity(f, 4));
  }
  const FiniteField f3(3);
  IntMatrix i_plus_3j = IntMatrix::identity(3) + 3 * IntMatrix::all_ones(3, 3);
  EXPECT_EQ(invert(ExactMatrix::from_integers(f3, i_plus_3j)), ExactMatrix::identity(f3, 3));
  EXPECT_EQ(invert(matrix(2, {{1, 1}, {1, 0}})), matrix(2, {{0, 1}, {1, 1}}));
  try {
    invert(matrix(3, {{1, 2}, {2, 1}}));  // rows are negatives of each other mod 3
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::singular_matrix);
  }
}

TEST(MatrixTest, PRankExamples) {
  EXPECT_EQ(p_rank(IntMatrix(5, 5), 2), 0U);
  EXPECT_EQ(p_rank(adjacency(paley_graph(25)), 2), 12U);
  EXPECT_EQ(p_rank(adjacency(paley_graph(41)), 2), 20U);
  // J - I of order 4 has determinant -3, so it drops rank mod 3
  EXPECT_EQ(p_rank(adjacency(complete_graph(4), AdjacencyKind::pm1), 3), 3U);
  EXPECT_EQ(p_rank(adjacency(complete_graph(3), AdjacencyKind::pm1), 3), 3U);
}

TEST(MatrixTest, RankMatchesSpanSizeOracle) {
  Rng rng(11);
  for (std::uint32_t p : {2U, 3U}) {
    const FiniteField f(p);
    for (int t = 0; t < 150; ++t) {
      const auto m = random_matrix(f, rng.between(1, 5), rng.between(1, 7), rng);
      const auto red = rref(m);
      EXPECT_EQ(red.rank, oracle::rank(to_mat(m), static_cast<int>(p)));
      EXPECT_EQ(rank(m.transpose()), red.rank);
      // same row span, checked as sets of vectors
      EXPECT_EQ(oracle::span(to_mat(m), m.cols(), p), oracle::span(to_mat(red.reduced), m.cols(), p));
      for (std::size_t i = 1; i < red.pivots.size(); ++i) EXPECT_LT(red.pivots[i - 1], red.pivots[i]);
    }
  }
}

TEST(MatrixTest, RrefRowMembershipBothWays) {
  Rng rng(5);
  for (std::uint32_t p : {2U, 3U}) {
    const FiniteField f(p);
    for (int t = 0; t < 100; ++t) {
      const auto m = random_matrix(f, rng.between(1, 8), rng.between(1, 70), rng);
      const auto red = rref(m);
      for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_TRUE(in_row_space(red, m.row(r)));
      // each reduced row is a combination of the original rows: appending it keeps the rank
      for (std::size_t r = 0; r < red.rank; ++r) {
        auto rows = m.row_list();
        rows.push_back(red.reduced.row(r));
        EXPECT_EQ(rank(ExactMatrix::from_rows(f, rows)), red.rank);
      }
    }
  }
}

TEST(MatrixTest, InverseIsTwoSided) {
  Rng rng(3);
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const FiniteField f(p);
    int inverted = 0;
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = rng.between(1, 70);
      const auto m = random_matrix(f, n, n, rng);
      const bool full = rank(m) == n;
      try {
        const auto inv = invert(m);
        ASSERT_TRUE(full);
        EXPECT_EQ(inv * m, ExactMatrix::identity(f, n));
        EXPECT_EQ(m * inv, ExactMatrix::identity(f, n));
        ++inverted;
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::singular_matrix);
        EXPECT_FALSE(full);
      }
    }
    EXPECT_GT(inverted, 0);
  }
}

TEST(MatrixTest, NullspaceIsKernel) {
  Rng rng(8);
  for (std::uint32_t p : {2U, 3U}) {
    const FiniteField f(p);
    for (int t = 0; t < 100; ++t) {
      const auto m = random_matrix(f, rng.between(1, 6), rng.between(1, 9), rng);
      const auto k = nullspace(m);
      EXPECT_EQ(k.rows(), m.cols() - rank(m));
      EXPECT_EQ(rank(k), k.rows());
      const auto prod = m * k.transpose();
      for (std::size_t i = 0; i < prod.rows(); ++i) EXPECT_TRUE(prod.is_zero_row(i));
    }
  }
}

TEST(MatrixTest, BinaryProductMatchesIntegerProduct) {
  Rng rng(21);
  const FiniteField f2(2);
  for (int t = 0; t < 40; ++t) {
    const std::size_t a = rng.between(1, 90), b = rng.between(1, 90), c = rng.between(1, 90);
    const auto x = random_matrix(f2, a, b, rng), y = random_matrix(f2, b, c, rng);
    EXPECT_EQ(to_mat(x * y), oracle::multiply(to_mat(x), to_mat(y), 2));
  }
}

TEST(MatrixTest, ShapeErrors) {
  const FiniteField f2(2);
  EXPECT_THROW(ExactMatrix(f2, 2, 3) * ExactMatrix(f2, 2, 3), Error);
  EXPECT_THROW(invert(ExactMatrix(f2, 2, 3)), Error);
  EXPECT_THROW(ExactMatrix(f2, 2, 2) * ExactMatrix(FiniteField(3), 2, 2), Error);
  EXPECT_THROW(matrix(2, {{1, 0}, {1}}), Error);
  EXPECT_THROW(matrix(3, {{3}}), Error);
}

TEST(MatrixTest, TransposeInvolution) {
  Rng rng(2);
  const auto m = random_matrix(FiniteField(3), 4, 9, rng);
  EXPECT_EQ(m.transpose().transpose(), m);
  EXPECT_EQ(m.transpose().rows(), 9U);
}

}  // namespace
}  // namespace lcdg
