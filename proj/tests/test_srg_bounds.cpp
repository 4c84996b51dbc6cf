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

#include "lcdgraph/paley.hpp"
#include "lcdgraph/srg_bounds.hpp"
#include "support/convert.hpp"

namespace lcdg {
namespace {

using testing_support::to_mat;

// d(C^⊥) for C = row span of M over F_2, by searching all of F_2^n.
int dual_min_weight_oracle(const oracle::Mat& m) {
  const auto perp = oracle::dual_by_search(m, m.size(), 2);
  return oracle::min_weight(perp);
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational(6, 4).str(), "3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(31, 10).ceil(), 4);
  EXPECT_EQ(Rational(3).ceil(), 3);
  EXPECT_EQ(Rational(1) + Rational(21, 11), Rational(32, 11));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(SrgBoundsTest, FormulaExamples) {
  EXPECT_EQ(bound_dual_minwt_A({10, 3, 0, 1}), Rational(4));
  EXPECT_EQ(bound_dual_minwt_A({41, 20, 9, 10}), Rational(3));
  EXPECT_EQ(bound_dual_minwt_A({5, 2, 0, 1}), Rational(3));
  EXPECT_EQ(bound_dual_minwt_AI({41, 20, 9, 10}), Rational(1) + Rational(21, 11));
  EXPECT_EQ(bound_dual_minwt_AI({10, 3, 0, 1}), Rational(3));
  EXPECT_EQ(bound_dual_minwt_AI({5, 2, 0, 1}), Rational(5, 2));
  // with t = min(lambda, mu) the Paley(41) value is 1 + 21/10, ceiling 4
  EXPECT_EQ(bound_dual_minwt_AI({41, 20, 9, 10}, TChoice::min), Rational(31, 10));
  EXPECT_EQ(bound_dual_minwt_AI({41, 20, 9, 10}, TChoice::min).ceil(), 4);
  EXPECT_EQ(bound_dual_minwt_A({41, 20, 9, 10}, TChoice::min), Rational(29, 9));
  try {
    bound_dual_minwt_A({6, 2, 0, 0}, TChoice::max);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degenerate);
  }
  try {
    bound_dual_minwt_A({5, 2, 0, 1}, TChoice::min);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degenerate);
  }
}

TEST(SrgBoundsTest, OddValencyDualParity) {
  EXPECT_TRUE(parity_corollary_check(petersen_graph()));
  EXPECT_EQ(dual_min_weight_oracle(to_mat(petersen_graph())), 4);
  for (std::uint32_t q : {5U, 9U, 13U}) {
    try {
      parity_corollary_check(paley_graph(q));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::not_applicable);
    }
  }
  try {
    parity_corollary_check(triangular_graph(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_applicable);
  }
  try {
    parity_corollary_check(path_graph(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::precondition_failed);
  }
}

TEST(SrgBoundsTest, VerifyAgainstSearchOracle) {
  for (const auto& g : {paley_graph(5), petersen_graph(), triangular_graph(5), paley_graph(9), paley_graph(13),
                        rook_graph(4), shrikhande_graph(), paley_graph(17)}) {
    const auto r = verify_bounds(g);
    EXPECT_TRUE(r.ok());
    const auto a = to_mat(g);
    auto ai = a;
    for (std::size_t i = 0; i < ai.size(); ++i) ai[i][i] = 1;
    const int da = dual_min_weight_oracle(a), dai = dual_min_weight_oracle(ai);
    EXPECT_EQ(r.dual_minwt_a ? static_cast<int>(*r.dual_minwt_a) : -1, da);
    EXPECT_EQ(r.dual_minwt_ai ? static_cast<int>(*r.dual_minwt_ai) : -1, dai);
    EXPECT_EQ(r.dim_a, oracle::rank(a, 2));
  }
}

TEST(SrgBoundsTest, BuiltInGraphs) {
  const auto petersen = verify_bounds(petersen_graph());
  EXPECT_EQ(petersen.dual_minwt_a, 4U);
  EXPECT_EQ(petersen.parity, true);
  const auto p41 = verify_bounds(paley_graph(41));
  EXPECT_TRUE(p41.ok());
  EXPECT_EQ(p41.dim_a, 20U);
  EXPECT_EQ(p41.dual_minwt_ai, 10U);
  EXPECT_EQ(p41.bound_ai_min, Rational(31, 10));
  EXPECT_EQ(p41.parity, std::nullopt);
  const auto p17 = verify_bounds(paley_graph(17));
  EXPECT_GE(*p17.slack_a(), 0);
  EXPECT_GE(*p17.slack_ai(), 0);
  EXPECT_THROW(verify_bounds(cycle_graph(6)), Error);
  try {
    verify_bounds(paley_graph(49));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::budget_exceeded);
  }
}

TEST(SrgBoundsTest, MonotoneInK) {
  for (long long t = 1; t < 10; ++t)
    for (std::size_t k = 1; k < 30; ++k) {
      const SrgParams a{100, k, static_cast<std::size_t>(t), 1}, b{100, k + 1, static_cast<std::size_t>(t), 1};
      EXPECT_LT(bound_dual_minwt_A(a), bound_dual_minwt_A(b));
      EXPECT_LT(bound_dual_minwt_AI(a), bound_dual_minwt_AI(b));
    }
}

}  // namespace
}  // namespace lcdg
