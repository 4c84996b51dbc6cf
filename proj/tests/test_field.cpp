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

#include "lcdgraph/field.hpp"

namespace lcdg {
namespace {

// Reference F_9 = F_3[x]/(x^2 + 1) with elements a + b x packed as a + 3b.
Element f9_mul(Element u, Element v) {
  const int a = u % 3, b = u / 3, c = v % 3, d = v / 3;
  // (a + bx)(c + dx) = ac + (ad + bc)x + bd x^2, with x^2 = -1
  const int lo = ((a * c - b * d) % 3 + 3) % 3;
  const int hi = (a * d + b * c) % 3;
  return static_cast<Element>(lo + 3 * hi);
}

TEST(FieldTest, SpecExamples) {
  EXPECT_EQ(field_arith(FiniteField(2), FieldOp::add, 1, 1), 0U);
  EXPECT_EQ(field_arith(FiniteField(3), FieldOp::inv, 2), 2U);
  const auto f9 = FiniteField::of_order(9);
  EXPECT_EQ(f9.modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  const Element x = 3;
  EXPECT_EQ(field_arith(f9, FieldOp::mul, x, x), 2U);
}

TEST(FieldTest, DefaultQuadratics) {
  EXPECT_EQ(FiniteField::default_quadratic(3), (std::vector<std::uint32_t>{1, 0, 1}));
  // x^2 + 1 has the root 2 mod 5; x^2 + x + 1 has no root mod 5.
  EXPECT_EQ(FiniteField::default_quadratic(5), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(FiniteField::default_quadratic(2), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(FieldTest, ExtensionMatchesReference) {
  const auto f9 = FiniteField::of_order(9);
  for (Element u = 0; u < 9; ++u)
    for (Element v = 0; v < 9; ++v) {
      EXPECT_EQ(f9.mul(u, v), f9_mul(u, v)) << u << "*" << v;
      EXPECT_EQ(f9.add(u, v), (u % 3 + v % 3) % 3 + 3 * ((u / 3 + v / 3) % 3));
    }
}

TEST(FieldTest, AxiomsOnAllSupportedSmallFields) {
  for (std::uint32_t q : {2U, 3U, 4U, 5U, 7U, 9U, 25U, 49U}) {
    const auto f = FiniteField::of_order(q);
    ASSERT_EQ(f.order(), q);
    for (Element a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0U);
      if (a != 0) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1U) << f.name() << " a=" << a;
      }
      for (Element b = 0; b < q; ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (Element c = 0; c < q; c += (q > 9 ? 7 : 1)) {
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        }
      }
    }
  }
}

TEST(FieldTest, MultiplicativeGroupIsCyclic) {
  for (std::uint32_t q : {9U, 25U, 49U}) {
    const auto f = FiniteField::of_order(q);
    bool found = false;
    for (Element g = 1; g < q && !found; ++g) {
      Element x = 1;
      std::size_t order = 0;
      do {
        x = f.mul(x, g);
        ++order;
      } while (x != 1);
      found = order == q - 1;
    }
    EXPECT_TRUE(found) << q;
  }
}

TEST(FieldTest, Errors) {
  const FiniteField f3(3);
  try {
    f3.inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::division_by_zero);
  }
  try {
    field_arith(f3, FieldOp::add, 3, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::bad_element);
  }
  EXPECT_THROW(FiniteField(4), Error);
  EXPECT_THROW(FiniteField(3, {2, 0, 1}), Error);  // x^2 + 2 = (x - 1)(x + 1)
  EXPECT_THROW(FiniteField::of_order(6), Error);
  EXPECT_NO_THROW(FiniteField(3, {2, 1, 1}));
}

TEST(FieldTest, FromInteger) {
  const FiniteField f3(3);
  EXPECT_EQ(f3.from_integer(-1), 2U);
  EXPECT_EQ(f3.from_integer(7), 1U);
  EXPECT_EQ(FiniteField(2).from_integer(-3), 1U);
}

}  // namespace
}  // namespace lcdg
