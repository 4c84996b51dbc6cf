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

#ifndef LCDGRAPH_TWO_GRAPH_HPP
#define LCDGRAPH_TWO_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcdgraph/canonical.hpp"
#include "lcdgraph/error.hpp"
#include "lcdgraph/graph.hpp"

namespace lcdg {

using Triple = std::array<std::size_t, 3>;

struct TwoGraph {
  std::size_t v = 0;
  std::vector<Triple> delta;  // ascending triples, sorted

  friend bool operator==(const TwoGraph&, const TwoGraph&) = default;
};

/// Every 4-subset of 0..v-1 must contain an even number of the triples.
inline bool is_two_graph(std::size_t v, const std::vector<Triple>& delta) {
  std::vector<bool> in(v * v * v, false);
  auto idx = [v](std::size_t a, std::size_t b, std::size_t c) { return (a * v + b) * v + c; };
  for (auto t : delta) {
    std::sort(t.begin(), t.end());
    if (t[2] >= v || t[0] == t[1] || t[1] == t[2])
      fail(Errc::bad_input, "triple is not three distinct vertices below " + std::to_string(v));
    in[idx(t[0], t[1], t[2])] = true;
  }
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b)
      for (std::size_t c = b + 1; c < v; ++c)
        for (std::size_t d = c + 1; d < v; ++d) {
          const int count = in[idx(a, b, c)] + in[idx(a, b, d)] + in[idx(a, c, d)] + in[idx(b, c, d)];
          if (count % 2) return false;
        }
  return true;
}

/// Triples inducing an odd number of edges.
inline TwoGraph twograph_from_graph(const SimpleGraph& g) {
  TwoGraph t{g.order(), {}};
  const std::size_t v = g.order();
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b)
      for (std::size_t c = b + 1; c < v; ++c)
        if ((g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c)) % 2) t.delta.push_back({a, b, c});
  if (!is_two_graph(v, t.delta)) fail(Errc::theorem_violation, "odd-edge triples violate the 4-subset axiom");
  return t;
}

/// Seidel switching: complements adjacency between S and its complement.
inline SimpleGraph seidel_switch(const SimpleGraph& g, const std::vector<std::size_t>& subset) {
  std::vector<bool> in(g.order(), false);
  for (auto x : subset) {
    if (x >= g.order()) fail(Errc::bad_input, "switching vertex " + std::to_string(x) + " out of range");
    in[x] = true;
  }
  SimpleGraph out = g;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (in[a] != in[b]) out.toggle_edge(a, b);
  return out;
}

/// Image of a two-graph under the vertex map x -> perm[x].
inline TwoGraph relabel(const TwoGraph& t, const std::vector<std::size_t>& perm) {
  TwoGraph out{t.v, {}};
  for (auto tr : t.delta) {
    Triple m{perm[tr[0]], perm[tr[1]], perm[tr[2]]};
    std::sort(m.begin(), m.end());
    out.delta.push_back(m);
  }
  std::sort(out.delta.begin(), out.delta.end());
  return out;
}

inline constexpr std::size_t kSwitchingMaxOrder = 16;

namespace detail {

inline void check_switching_budget(std::size_t v) {
  if (v > kSwitchingMaxOrder)
    fail(Errc::budget_exceeded, "switching-class search supports at most " + std::to_string(kSwitchingMaxOrder) +
                                    " vertices, got " + std::to_string(v));
}

inline std::vector<std::size_t> subset_from_mask(std::uint32_t mask) {
  std::vector<std::size_t> s;
  for (std::size_t x = 0; mask; ++x, mask >>= 1)
    if (mask & 1) s.push_back(x);
  return s;
}

inline std::vector<std::size_t> sorted_degrees(const SimpleGraph& g) {
  std::vector<std::size_t> d(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) d[x] = g.degree(x);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace detail

/// Class key: the least canonical form over all switchings with vertex 0
/// outside S (S and its complement switch identically).
inline SimpleGraph switching_class_canonical(const SimpleGraph& g) {
  detail::check_switching_budget(g.order());
  if (g.order() <= 1) return canonical_form(g).graph;
  std::optional<SimpleGraph> best;
  std::vector<Edge> best_key;
  const std::uint32_t count = std::uint32_t{1} << (g.order() - 1);
  for (std::uint32_t m = 0; m < count; ++m) {
    auto c = canonical_form(seidel_switch(g, detail::subset_from_mask(m << 1))).graph;
    auto k = c.edges();
    // fewer edges first, then the lexicographically least edge list
    if (!best || k.size() < best_key.size() || (k.size() == best_key.size() && k < best_key)) {
      best = std::move(c);
      best_key = std::move(k);
    }
  }
  return *best;
}

struct SwitchingIsoResult {
  bool isomorphic = false;
  std::vector<std::size_t> switched;  // S applied to the first graph
  std::vector<std::size_t> perm;      // then vertex x maps to perm[x]
};

/// Decides whether some switching of `a` is isomorphic to `b`.
inline SwitchingIsoResult switching_class_iso(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order()) return {};
  detail::check_switching_budget(a.order());
  if (twograph_from_graph(a).delta.size() != twograph_from_graph(b).delta.size()) return {};
  if (a.order() == 0) return {true, {}, {}};
  const auto target = canonical_form(b);
  const auto target_degrees = detail::sorted_degrees(b);
  std::vector<std::size_t> inverse_b(b.order());
  for (std::size_t y = 0; y < b.order(); ++y) inverse_b[target.relabeling[y]] = y;
  const std::uint32_t count = std::uint32_t{1} << (a.order() - 1);
  for (std::uint32_t m = 0; m < count; ++m) {
    auto s = detail::subset_from_mask(m << 1);
    const auto switched = seidel_switch(a, s);
    if (detail::sorted_degrees(switched) != target_degrees) continue;
    const auto c = canonical_form(switched);
    if (!(c.graph == target.graph)) continue;
    std::vector<std::size_t> perm(a.order());
    for (std::size_t x = 0; x < a.order(); ++x) perm[x] = inverse_b[c.relabeling[x]];
    if (!(switched.relabel(perm) == b)) fail(Errc::theorem_violation, "switching witness does not verify");
    return {true, std::move(s), std::move(perm)};
  }
  return {};
}

}  // namespace lcdg

#endif  // LCDGRAPH_TWO_GRAPH_HPP
