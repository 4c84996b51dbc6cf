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

#ifndef LCDGRAPH_CORRESPONDENCE_HPP
#define LCDGRAPH_CORRESPONDENCE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lcdgraph/canonical.hpp"
#include "lcdgraph/code.hpp"
#include "lcdgraph/error.hpp"
#include "lcdgraph/graph.hpp"
#include "lcdgraph/two_graph.hpp"

namespace lcdg {

// Binary side: even LCD codes and graphs whose adjacency matrix is
// idempotent over F_2. The projector of the code is the adjacency matrix.

/// Row span of the adjacency matrix over F_2.
inline LinearCode code_from_graph_f2(const SimpleGraph& g) {
  if (!is_idempotent_mod2(g)) fail(Errc::not_idempotent, "adjacency matrix is not idempotent over F_2");
  const auto a = adjacency(g, AdjacencyKind::zero_one, FiniteField(2));
  LinearCode c(a);
  if (!is_lcd(c)) fail(Errc::theorem_violation, "row span of an idempotent adjacency matrix is not LCD");
  if (!is_even(c)) fail(Errc::theorem_violation, "row span of an idempotent adjacency matrix is not even");
  if (!(projector(c) == a)) fail(Errc::theorem_violation, "projector differs from the adjacency matrix");
  return c;
}

/// Graph whose adjacency matrix is the projector of a binary even LCD code.
inline SimpleGraph graph_from_code_f2(const LinearCode& c) {
  if (!c.field().is_binary()) fail(Errc::wrong_field, "binary code expected");
  if (!is_lcd(c)) fail(Errc::not_lcd, "code is not LCD");
  if (!is_even(c)) fail(Errc::not_even, "code has odd-weight codewords");
  const auto p = projector(c);
  for (std::size_t i = 0; i < p.rows(); ++i)
    if (p(i, i) != 0) fail(Errc::theorem_violation, "projector of an even LCD code has a nonzero diagonal");
  auto g = SimpleGraph::from_adjacency(p);
  if (!(LinearCode(p) == c)) fail(Errc::theorem_violation, "row span of the projector differs from the code");
  return g;
}

// Ternary side: LCD codes whose projector is a ∓1 adjacency matrix, i.e. a
// representative of a two-graph.

/// True iff `m` is symmetric with zero diagonal and nonzero off-diagonal
/// entries, read over F_3 (2 stands for -1).
inline bool is_pm1_adjacency(const ExactMatrix& m) {
  if (!m.is_symmetric()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if ((i == j) != (m(i, j) == 0)) return false;
  return true;
}

/// Graph with x ~ y where the ∓1 matrix holds -1.
inline SimpleGraph graph_from_pm1(const ExactMatrix& m) {
  if (!is_pm1_adjacency(m)) fail(Errc::bad_input, "matrix is not a ∓1 adjacency matrix");
  SimpleGraph g(m.rows());
  const Element minus_one = m.field().neg(1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) == minus_one) g.add_edge(i, j);
  return g;
}

/// Row span over F_3 of the ∓1 adjacency matrix, which must be idempotent.
inline LinearCode code_from_twograph_f3(const SimpleGraph& g) {
  const FiniteField f3(3);
  const auto a = adjacency(g, AdjacencyKind::pm1, f3);
  if (!(a * a == a)) fail(Errc::not_idempotent, "∓1 adjacency matrix is not idempotent over F_3");
  LinearCode c(a);
  if (!is_lcd(c)) fail(Errc::theorem_violation, "row span of an idempotent ∓1 matrix is not LCD");
  if (!(projector(c) == a)) fail(Errc::theorem_violation, "projector differs from the ∓1 adjacency matrix");
  if (c.dimension() % 3) fail(Errc::theorem_violation, "two-graph code dimension is not divisible by 3");
  return c;
}

/// Every projector row has weight divisible by three. Cross-checked against
/// the zero-diagonal test, since (x,x) = 0 iff wt(x) = 0 mod 3 over F_3.
inline bool twograph_rowweight_check(const LinearCode& c) {
  if (c.field().order() != 3) fail(Errc::wrong_field, "ternary code expected");
  if (!is_lcd(c)) fail(Errc::not_lcd, "code is not LCD");
  const auto p = projector(c);
  bool rows_ok = true, diagonal_zero = true;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    rows_ok = rows_ok && p.row_weight(i) % 3 == 0;
    diagonal_zero = diagonal_zero && p(i, i) == 0;
  }
  if (rows_ok != diagonal_zero) fail(Errc::theorem_violation, "row-weight and zero-diagonal tests disagree");
  return rows_ok;
}

/// Ternary code generated by (I_k | a) with a a^T = 0 and 3 | k. It is LCD
/// with dimension divisible by 3, yet its projector has k ones on the
/// diagonal and so is no two-graph adjacency matrix.
inline LinearCode counterexample_code(std::size_t k, const ExactMatrix& a) {
  if (a.field().order() != 3 || !a.field().is_prime_field()) fail(Errc::bad_input, "matrix must be over F_3");
  if (k % 3) fail(Errc::bad_input, "k = " + std::to_string(k) + " is not divisible by 3");
  if (a.rows() != k) fail(Errc::bad_input, "matrix must have k rows");
  if (!(a * a.transpose() == ExactMatrix(a.field(), k, k))) fail(Errc::bad_input, "A A^T is not zero");
  ExactMatrix g(a.field(), k, k + a.cols());
  for (std::size_t i = 0; i < k; ++i) {
    g.set(i, i, 1);
    for (std::size_t j = 0; j < a.cols(); ++j) g.set(i, k + j, a(i, j));
  }
  return LinearCode(g);
}

/// Binary even LCD codes are equivalent iff their graphs are isomorphic.
inline bool equivalence_via_graphs(const LinearCode& c1, const LinearCode& c2) {
  if (c1.length() != c2.length()) return false;
  return is_isomorphic(graph_from_code_f2(c1), graph_from_code_f2(c2)).isomorphic;
}

/// Graph represented by the projector of a ternary LCD code whose projector
/// is a ∓1 adjacency matrix.
inline SimpleGraph twograph_graph_from_code_f3(const LinearCode& c) {
  if (!twograph_rowweight_check(c))
    fail(Errc::not_two_graph_projector, "projector rows do not all have weight divisible by 3");
  const auto p = projector(c);
  if (!is_pm1_adjacency(p))
    fail(Errc::not_two_graph_projector, "projector has zero off-diagonal entries");
  return graph_from_pm1(p);
}

/// Ternary two-graph codes are equivalent iff their graphs lie in
/// isomorphic switching classes (monomial = diagonal ±1 times permutation).
inline bool ternary_equivalence_via_twographs(const LinearCode& c1, const LinearCode& c2) {
  const auto g1 = twograph_graph_from_code_f3(c1);
  const auto g2 = twograph_graph_from_code_f3(c2);
  return switching_class_iso(g1, g2).isomorphic;
}

namespace detail {

// Labeled graphs on v vertices accepted by `pair_ok`, built one vertex at a
// time. After vertex i chooses its neighbors among i+1..v-1, rows 0..i are
// final, so every pair (x, i) with x <= i can be tested right away.
inline std::vector<SimpleGraph> enumerate_graphs(
    std::size_t v, const std::function<bool(const SimpleGraph&, std::size_t, std::size_t)>& pair_ok) {
  std::vector<SimpleGraph> out;
  if (v == 0) return {SimpleGraph(0)};
  SimpleGraph g(v);
  auto step = [&](auto&& self, std::size_t i) -> void {
    if (i == v) {
      out.push_back(g);
      return;
    }
    const std::size_t later = v - 1 - i;
    const std::uint64_t options = std::uint64_t{1} << later;
    for (std::uint64_t mask = 0; mask < options; ++mask) {
      for (std::size_t b = 0; b < later; ++b) {
        if ((mask >> b) & 1)
          g.add_edge(i, i + 1 + b);
        else
          g.remove_edge(i, i + 1 + b);
      }
      bool ok = true;
      for (std::size_t x = 0; x <= i && ok; ++x) ok = pair_ok(g, x, i);
      if (ok) self(self, i + 1);
    }
    for (std::size_t b = 0; b < later; ++b) g.remove_edge(i, i + 1 + b);
  };
  step(step, 0);
  return out;
}

}  // namespace detail

/// Every labeled graph on v vertices whose adjacency matrix is idempotent
/// over F_2, in a fixed deterministic order.
inline std::vector<SimpleGraph> idempotent_graphs_f2(std::size_t v) {
  return detail::enumerate_graphs(v, [](const SimpleGraph& g, std::size_t x, std::size_t y) {
    const bool want = x != y && g.adjacent(x, y);
    return (g.common_neighbors(x, y) % 2 == 1) == want;
  });
}

/// Every labeled graph on v vertices whose ∓1 adjacency matrix is
/// idempotent over F_3.
inline std::vector<SimpleGraph> pm1_idempotent_graphs_f3(std::size_t v) {
  return detail::enumerate_graphs(v, [v](const SimpleGraph& g, std::size_t x, std::size_t y) {
    auto entry = [&](std::size_t a, std::size_t b) -> int { return a == b ? 0 : (g.adjacent(a, b) ? -1 : 1); };
    int sum = 0;
    for (std::size_t z = 0; z < v; ++z) sum += entry(x, z) * entry(z, y);
    return ((sum - entry(x, y)) % 3 + 3) % 3 == 0;
  });
}

}  // namespace lcdg

#endif  // LCDGRAPH_CORRESPONDENCE_HPP
