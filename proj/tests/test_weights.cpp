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

#include "lcdgraph/code.hpp"
#include "lcdgraph/correspondence.hpp"
#include "lcdgraph/paley.hpp"
#include "lcdgraph/random.hpp"
#include "lcdgraph/weights.hpp"
#include "support/convert.hpp"

namespace lcdg {
namespace {

using testing_support::code;
using testing_support::codewords;

TEST(WeightsTest, Examples) {
  const auto k3 = LinearCode(adjacency(complete_graph(3), AdjacencyKind::zero_one, FiniteField(2)));
  EXPECT_EQ(min_weight(k3), 2U);
  EXPECT_EQ(weight_distribution(k3).counts, (std::vector<std::uint64_t>{1, 0, 3, 0}));
  EXPECT_EQ(min_weight(code(3, {{1, 1, 1}})), 3U);
  EXPECT_EQ(weight_distribution(code_from_rows(FiniteField(2), 3, {})).counts, (std::vector<std::uint64_t>{1, 0, 0, 0}));
  EXPECT_EQ(weight_distribution(LinearCode(ExactMatrix::identity(FiniteField(2), 2))).counts,
            (std::vector<std::uint64_t>{1, 2, 1}));
  try {
    min_weight(code_from_rows(FiniteField(2), 3, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_nonzero_codeword);
  }
}

TEST(WeightsTest, Paley41) {
  const auto c = code_from_graph_f2(paley_graph(41));
  EXPECT_EQ(c.dimension(), 20U);
  const auto w = weight_distribution(c);
  EXPECT_EQ(w.total(), std::uint64_t{1} << 20);
  EXPECT_EQ(w.min_nonzero(), 10U);
  EXPECT_EQ(min_weight(c), 10U);
  for (std::size_t i = 1; i < w.counts.size(); i += 2) EXPECT_EQ(w.counts[i], 0U);
  EXPECT_EQ(weight_distribution(c, kDefaultEnumerationBudget, 1), weight_distribution(c, kDefaultEnumerationBudget, 7));
}

TEST(WeightsTest, MatchesEnumerationOracle) {
  Rng rng(9);
  for (std::uint32_t p : {2U, 3U}) {
    const FiniteField f(p);
    for (int t = 0; t < 150; ++t) {
      const std::size_t n = rng.between(1, p == 2 ? 80 : 9);
      const std::size_t k = rng.between(1, std::min<std::size_t>(n, p == 2 ? 10 : 6));
      const auto c = random_code(f, n, k, rng);
      if (c.dimension() == 0) continue;
      const auto words = codewords(c);
      const auto w = weight_distribution(c);
      EXPECT_EQ(w.counts, oracle::weight_counts(words, n));
      EXPECT_EQ(static_cast<int>(min_weight(c)), oracle::min_weight(words));
    }
  }
}

TEST(WeightsTest, ParallelMatchesSerial) {
  Rng rng(10);
  for (int t = 0; t < 6; ++t) {
    const auto c = random_code(FiniteField(2), rng.between(20, 130), 18, rng);
    const auto serial = weight_distribution(c, kDefaultEnumerationBudget, 1);
    for (unsigned jobs : {2U, 3U, 8U}) EXPECT_EQ(weight_distribution(c, kDefaultEnumerationBudget, jobs), serial);
    EXPECT_EQ(serial.total(), std::uint64_t{1} << c.dimension());
  }
  const auto c3 = random_code(FiniteField(3), 14, 11, rng);
  EXPECT_EQ(weight_distribution(c3, kDefaultEnumerationBudget, 1), weight_distribution(c3, kDefaultEnumerationBudget, 4));
}

TEST(WeightsTest, Budget) {
  Rng rng(12);
  const auto c = random_code(FiniteField(2), 30, 12, rng);
  try {
    weight_distribution(c, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::budget_exceeded);
  }
  EXPECT_NO_THROW(weight_distribution(c, 4096));
}

}  // namespace
}  // namespace lcdg
