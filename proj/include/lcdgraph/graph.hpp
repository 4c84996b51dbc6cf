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

#ifndef LCDGRAPH_GRAPH_HPP
#define LCDGRAPH_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcdgraph/error.hpp"
#include "lcdgraph/field.hpp"
#include "lcdgraph/matrix.hpp"

namespace lcdg {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected loopless graph on vertices 0..v-1. Each vertex keeps its
/// neighborhood as a packed bitset.
class SimpleGraph {
 public:
  using Word = std::uint64_t;

  explicit SimpleGraph(std::size_t v = 0) : v_(v), words_((v + 63) / 64), adj_(v * words_, 0) {}

  static SimpleGraph from_edges(std::size_t v, const std::vector<Edge>& edges) {
    SimpleGraph g(v);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
  }

  /// Accepts a symmetric (0,1) matrix with zero diagonal.
  static SimpleGraph from_adjacency(const IntMatrix& a) {
    if (a.rows() != a.cols()) fail(Errc::bad_input, "adjacency matrix must be square");
    SimpleGraph g(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, i) != 0) fail(Errc::bad_input, "adjacency matrix has a nonzero diagonal at " + std::to_string(i));
      for (std::size_t j = i + 1; j < a.cols(); ++j) {
        if (a(i, j) != a(j, i)) fail(Errc::bad_input, "adjacency matrix is not symmetric");
        if (a(i, j) != 0 && a(i, j) != 1) fail(Errc::bad_input, "adjacency entries must be 0 or 1");
        if (a(i, j)) g.add_edge(i, j);
      }
    }
    return g;
  }

  static SimpleGraph from_adjacency(const ExactMatrix& a) {
    IntMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    return from_adjacency(m);
  }

  std::size_t order() const noexcept { return v_; }

  bool adjacent(std::size_t a, std::size_t b) const { return (adj_[a * words_ + b / 64] >> (b % 64)) & 1U; }

  void add_edge(std::size_t a, std::size_t b) {
    check_pair(a, b);
    set_bit(a, b, true);
    set_bit(b, a, true);
  }

  void remove_edge(std::size_t a, std::size_t b) {
    check_pair(a, b);
    set_bit(a, b, false);
    set_bit(b, a, false);
  }

  void toggle_edge(std::size_t a, std::size_t b) {
    if (adjacent(a, b))
      remove_edge(a, b);
    else
      add_edge(a, b);
  }

  std::span<const Word> neighborhood(std::size_t x) const { return {adj_.data() + x * words_, words_}; }

  std::size_t degree(std::size_t x) const {
    std::size_t d = 0;
    for (auto w : neighborhood(x)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::size_t common_neighbors(std::size_t x, std::size_t y) const {
    std::size_t c = 0;
    auto a = neighborhood(x), b = neighborhood(y);
    for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
    return c;
  }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t a = 0; a < v_; ++a)
      for (std::size_t b = a + 1; b < v_; ++b)
        if (adjacent(a, b)) out.emplace_back(a, b);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (std::size_t x = 0; x < v_; ++x) total += degree(x);
    return total / 2;
  }

  SimpleGraph complement() const {
    SimpleGraph g(v_);
    for (std::size_t a = 0; a < v_; ++a)
      for (std::size_t b = a + 1; b < v_; ++b)
        if (!adjacent(a, b)) g.add_edge(a, b);
    return g;
  }

  /// Vertex x of this graph becomes vertex perm[x].
  SimpleGraph relabel(const std::vector<std::size_t>& perm) const {
    if (perm.size() != v_) fail(Errc::bad_input, "relabeling has the wrong size");
    SimpleGraph g(v_);
    for (auto [a, b] : edges()) g.add_edge(perm[a], perm[b]);
    return g;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_pair(std::size_t a, std::size_t b) const {
    if (a >= v_ || b >= v_)
      fail(Errc::bad_input, "edge endpoint outside 0.." + std::to_string(v_ == 0 ? 0 : v_ - 1));
    if (a == b) fail(Errc::bad_input, "loop at vertex " + std::to_string(a));
  }

  void set_bit(std::size_t a, std::size_t b, bool on) {
    Word& w = adj_[a * words_ + b / 64];
    const Word m = Word{1} << (b % 64);
    w = on ? (w | m) : (w & ~m);
  }

  std::size_t v_;
  std::size_t words_;
  std::vector<Word> adj_;
};

// Named graphs used as fixtures.

inline SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

inline SimpleGraph empty_graph(std::size_t n) { return SimpleGraph(n); }

inline SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t a = 0; a + 1 < n; ++a) g.add_edge(a, a + 1);
  return g;
}

inline SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

/// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
inline SimpleGraph petersen_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  SimpleGraph g(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

/// Triangular graph T(m): 2-subsets of {0..m-1}, adjacent when they meet.
inline SimpleGraph triangular_graph(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
  SimpleGraph g(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a == c || a == d || b == c || b == d) g.add_edge(i, j);
    }
  return g;
}

/// Rook's graph on an m x m board; vertex r*m + c.
inline SimpleGraph rook_graph(std::size_t m) {
  SimpleGraph g(m * m);
  for (std::size_t x = 0; x < m * m; ++x)
    for (std::size_t y = x + 1; y < m * m; ++y)
      if (x / m == y / m || x % m == y % m) g.add_edge(x, y);
  return g;
}

/// Cayley graph on Z4 x Z4 with connection set ±(1,0), ±(0,1), ±(1,1).
/// Same parameters as rook_graph(4), not isomorphic to it.
inline SimpleGraph shrikhande_graph() {
  SimpleGraph g(16);
  for (std::size_t x = 0; x < 16; ++x)
    for (std::size_t y = x + 1; y < 16; ++y) {
      const std::size_t da = (y / 4 + 4 - x / 4) % 4, db = (y % 4 + 4 - x % 4) % 4;
      const bool unit = (da == 0 && (db == 1 || db == 3)) || (db == 0 && (da == 1 || da == 3));
      if (unit || (da == db && (da == 1 || da == 3))) g.add_edge(x, y);
    }
  return g;
}

inline SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
  SimpleGraph u(g.order() + h.order());
  for (auto [a, b] : g.edges()) u.add_edge(a, b);
  for (auto [a, b] : h.edges()) u.add_edge(g.order() + a, g.order() + b);
  return u;
}

enum class AdjacencyKind { zero_one, pm1 };

/// zero_one: A[x][y] = 1 iff x ~ y. pm1: zero diagonal, -1 for adjacent
/// and +1 for non-adjacent pairs.
inline IntMatrix adjacency(const SimpleGraph& g, AdjacencyKind kind = AdjacencyKind::zero_one) {
  IntMatrix a(g.order(), g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      if (x == y) continue;
      if (kind == AdjacencyKind::zero_one)
        a(x, y) = g.adjacent(x, y) ? 1 : 0;
      else
        a(x, y) = g.adjacent(x, y) ? -1 : 1;
    }
  return a;
}

inline ExactMatrix adjacency(const SimpleGraph& g, AdjacencyKind kind, const FiniteField& f) {
  return ExactMatrix::from_integers(f, adjacency(g, kind));
}

struct SrgParams {
  std::size_t v = 0, k = 0, lambda = 0, mu = 0;

  bool feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// A^2 = kI + lambda A + mu (J - I - A) over the integers.
inline bool srg_identity_holds(const SimpleGraph& g, const SrgParams& s) {
  const auto a = adjacency(g);
  const auto i = IntMatrix::identity(g.order());
  const auto j = IntMatrix::all_ones(g.order(), g.order());
  const auto rhs = static_cast<long long>(s.k) * i + static_cast<long long>(s.lambda) * a +
                   static_cast<long long>(s.mu) * (j - i - a);
  return a * a == rhs;
}

/// Parameters when the graph is strongly regular with 0 < k < v-1.
inline std::optional<SrgParams> srg_params(const SimpleGraph& g) {
  const std::size_t v = g.order();
  if (v < 3) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (std::size_t x = 1; x < v; ++x)
    if (g.degree(x) != k) return std::nullopt;
  if (k == 0 || k == v - 1) return std::nullopt;
  std::optional<std::size_t> lambda, mu;
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = x + 1; y < v; ++y) {
      auto& slot = g.adjacent(x, y) ? lambda : mu;
      const std::size_t c = g.common_neighbors(x, y);
      if (!slot)
        slot = c;
      else if (*slot != c)
        return std::nullopt;
    }
  SrgParams s{v, k, lambda.value_or(0), mu.value_or(0)};
  if (!srg_identity_holds(g, s) || !s.feasible())
    fail(Errc::theorem_violation, "strongly regular graph violates A^2 = kI + lambda A + mu (J-I-A)");
  return s;
}

/// A^2 = A over F_2, by matrix arithmetic.
inline bool idempotent_mod2_by_matrix(const SimpleGraph& g) {
  const auto a = adjacency(g, AdjacencyKind::zero_one, FiniteField(2));
  return a * a == a;
}

/// Adjacent pairs share an odd number of neighbors, non-adjacent pairs an
/// even number. Even valency follows: summing over y ~ x counts each edge
/// inside N(x) twice.
inline bool idempotent_mod2_by_parity(const SimpleGraph& g) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = x + 1; y < g.order(); ++y)
      if ((g.common_neighbors(x, y) % 2 == 1) != g.adjacent(x, y)) return false;
  }
  return true;
}

/// Runs both tests; disagreement throws TheoremViolation.
inline bool is_idempotent_mod2(const SimpleGraph& g) {
  const bool by_matrix = idempotent_mod2_by_matrix(g);
  if (by_matrix != idempotent_mod2_by_parity(g))
    fail(Errc::theorem_violation, "matrix and common-neighbor parity tests disagree");
  return by_matrix;
}

/// A^2 = A over F_3 for the ∓1 adjacency matrix.
inline bool pm1_idempotent_mod3(const SimpleGraph& g) {
  const auto a = adjacency(g, AdjacencyKind::pm1, FiniteField(3));
  return a * a == a;
}

}  // namespace lcdg

#endif  // LCDGRAPH_GRAPH_HPP
