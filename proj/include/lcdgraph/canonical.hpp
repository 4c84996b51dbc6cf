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

#ifndef LCDGRAPH_CANONICAL_HPP
#define LCDGRAPH_CANONICAL_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcdgraph/error.hpp"
#include "lcdgraph/graph.hpp"

namespace lcdg {

inline constexpr std::size_t kCanonicalMaxOrder = 64;

struct CanonicalForm {
  SimpleGraph graph;                   // canonical representative
  std::vector<std::size_t> relabeling;  // vertex x of the input sits at position relabeling[x]
};

namespace detail {

// Individualization-refinement search. Each node refines its ordered
// partition to an equitable one and records a label-invariant trace (cell
// sizes and the quotient matrix). The canonical leaf minimizes (trace,
// permuted adjacency); subtrees with a larger trace prefix are cut, and
// children in one orbit of the discovered automorphisms fixing the current
// prefix are explored once. A leaf equivalent to the first or best leaf
// unwinds the search to the deepest node shared with that leaf.
class CanonicalSearch {
 public:
  using Cells = std::vector<std::vector<int>>;
  using Trace = std::vector<std::vector<long long>>;

  explicit CanonicalSearch(const SimpleGraph& g) : n_(static_cast<int>(g.order())), adj_(g.order(), 0) {
    for (int x = 0; x < n_; ++x) adj_[x] = n_ ? g.neighborhood(x)[0] : 0;
  }

  std::vector<int> run() {
    Cells root(1);
    for (int x = 0; x < n_; ++x) root[0].push_back(x);
    if (n_ == 0) return {};
    std::vector<int> prefix;
    Trace trace;
    search(std::move(root), prefix, trace);
    return best_lab_;
  }

 private:
  static std::uint64_t mask_of(const std::vector<int>& cell) {
    std::uint64_t m = 0;
    for (int x : cell) m |= std::uint64_t{1} << x;
    return m;
  }

  bool split_pass(Cells& cells) const {
    bool changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const std::uint64_t splitter = mask_of(cells[s]);
      Cells next;
      next.reserve(cells.size() + 4);
      bool any = false;
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int x : cell) keyed.emplace_back(std::popcount(adj_[x] & splitter), x);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) {
          next.push_back(std::move(cell));
          continue;
        }
        any = true;
        std::vector<int> group{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(group));
            group.clear();
          }
          group.push_back(keyed[i].second);
        }
        next.push_back(std::move(group));
      }
      cells = std::move(next);
      changed |= any;
    }
    return changed;
  }

  void refine(Cells& cells) const {
    while (split_pass(cells)) {
    }
  }

  std::vector<long long> invariant(const Cells& cells) const {
    std::vector<long long> inv;
    inv.reserve(cells.size() * (cells.size() + 1));
    std::vector<std::uint64_t> masks;
    masks.reserve(cells.size());
    for (const auto& c : cells) masks.push_back(mask_of(c));
    for (const auto& c : cells) {
      inv.push_back(static_cast<long long>(c.size()));
      for (auto m : masks) inv.push_back(std::popcount(adj_[c.front()] & m));
    }
    return inv;
  }

  std::vector<std::uint64_t> permuted(const std::vector<int>& lab) const {
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
    std::vector<std::uint64_t> rows(n_, 0);
    for (int i = 0; i < n_; ++i) {
      std::uint64_t nb = adj_[lab[i]];
      while (nb) {
        const int y = std::countr_zero(nb);
        nb &= nb - 1;
        rows[i] |= std::uint64_t{1} << pos[y];
      }
    }
    return rows;
  }

  // Sign of trace versus the best trace, over their common depth.
  int compare_trace(const Trace& trace) const {
    const std::size_t depth = std::min(trace.size(), best_trace_.size());
    for (std::size_t d = 0; d < depth; ++d) {
      if (trace[d] < best_trace_[d]) return -1;
      if (best_trace_[d] < trace[d]) return 1;
    }
    return 0;
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  bool same_orbit_as_explored(int x, const std::vector<int>& explored, const std::vector<int>& prefix) const {
    if (explored.empty() || autos_.empty()) return false;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& g : autos_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return g[p] == p; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(parent, v), b = find(parent, g[v]);
        if (a != b) parent[a] = b;
      }
    }
    const int rx = find(parent, x);
    return std::any_of(explored.begin(), explored.end(), [&](int y) { return find(parent, y) == rx; });
  }

  static std::size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t d = 0;
    while (d < a.size() && d < b.size() && a[d] == b[d]) ++d;
    return d;
  }

  // Returns the depth at which the search resumes: the node's own depth
  // normally, or a shallower one after a leaf matched an earlier leaf, since
  // an automorphism then maps the rest of this branch onto explored ground.
  std::size_t search(Cells cells, std::vector<int>& prefix, Trace& trace) {
    const std::size_t depth = prefix.size();
    refine(cells);
    trace.push_back(invariant(cells));
    if (has_best_ && compare_trace(trace) > 0) {
      trace.pop_back();
      return depth;
    }
    if (cells.size() == static_cast<std::size_t>(n_)) {
      trace.pop_back();
      std::vector<int> lab(n_);
      for (int i = 0; i < n_; ++i) lab[i] = cells[i].front();
      auto graph = permuted(lab);
      if (!has_best_) {
        has_best_ = true;
        first_graph_ = graph;
        first_lab_ = lab;
        first_prefix_ = prefix;
      }
      const int cmp = compare_trace_full(trace);
      if (first_graph_ == graph && first_lab_ != lab) {
        record_automorphism(first_lab_, lab);
        return common_prefix(prefix, first_prefix_);
      }
      if (best_lab_.empty() || cmp < 0 || (cmp == 0 && graph < best_graph_)) {
        best_trace_ = trace;
        best_trace_.push_back(invariant(cells));
        best_graph_ = std::move(graph);
        best_lab_ = std::move(lab);
        best_prefix_ = prefix;
        return depth;
      }
      if (cmp == 0 && graph == best_graph_) {
        record_automorphism(best_lab_, lab);
        return common_prefix(prefix, best_prefix_);
      }
      return depth;
    }
    std::size_t target = 0, best_size = static_cast<std::size_t>(n_) + 1;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && cells[i].size() < best_size) {
        best_size = cells[i].size();
        target = i;
      }
    std::vector<int> choices = cells[target];
    std::sort(choices.begin(), choices.end());
    std::vector<int> explored;
    for (int x : choices) {
      if (same_orbit_as_explored(x, explored, prefix)) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({x});
        std::vector<int> rest;
        for (int y : cells[i])
          if (y != x) rest.push_back(y);
        child.push_back(std::move(rest));
      }
      prefix.push_back(x);
      const std::size_t resume = search(std::move(child), prefix, trace);
      prefix.pop_back();
      explored.push_back(x);
      if (resume < depth) {
        trace.pop_back();
        return resume;
      }
    }
    trace.pop_back();
    return depth;
  }

  // Sign of the completed leaf trace (without the leaf level) against the best.
  int compare_trace_full(const Trace& trace) const {
    if (best_lab_.empty()) return -1;
    return compare_trace(trace);
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    if (autos_.size() >= kMaxGenerators) return;
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    autos_.push_back(std::move(gamma));
  }

  static constexpr std::size_t kMaxGenerators = 256;

  int n_;
  std::vector<std::uint64_t> adj_;
  bool has_best_ = false;
  Trace best_trace_;
  std::vector<std::uint64_t> best_graph_;
  std::vector<int> best_lab_, best_prefix_;
  std::vector<std::uint64_t> first_graph_;
  std::vector<int> first_lab_, first_prefix_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace detail

/// Relabeling-invariant representative: isomorphic graphs, and only those,
/// get equal `graph` members.
inline CanonicalForm canonical_form(const SimpleGraph& g) {
  if (g.order() > kCanonicalMaxOrder)
    fail(Errc::budget_exceeded, "canonical labeling supports at most " + std::to_string(kCanonicalMaxOrder) +
                                    " vertices, got " + std::to_string(g.order()));
  const auto lab = detail::CanonicalSearch(g).run();
  std::vector<std::size_t> relabeling(g.order());
  for (std::size_t i = 0; i < lab.size(); ++i) relabeling[static_cast<std::size_t>(lab[i])] = i;
  return {g.relabel(relabeling), std::move(relabeling)};
}

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<std::size_t> witness;  // vertex x of the first graph maps to witness[x] of the second
};

inline IsomorphismResult is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return {};
  const auto ca = canonical_form(a);
  const auto cb = canonical_form(b);
  if (!(ca.graph == cb.graph)) return {};
  std::vector<std::size_t> inverse_b(b.order());
  for (std::size_t y = 0; y < b.order(); ++y) inverse_b[cb.relabeling[y]] = y;
  std::vector<std::size_t> witness(a.order());
  for (std::size_t x = 0; x < a.order(); ++x) witness[x] = inverse_b[ca.relabeling[x]];
  if (!(a.relabel(witness) == b)) fail(Errc::theorem_violation, "isomorphism witness does not verify");
  return {true, std::move(witness)};
}

/// Keeps the first graph of every isomorphism class, in input order.
inline std::vector<SimpleGraph> distinct_up_to_isomorphism(const std::vector<SimpleGraph>& graphs) {
  std::vector<SimpleGraph> reps;
  std::vector<SimpleGraph> keys;
  for (const auto& g : graphs) {
    auto key = canonical_form(g).graph;
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
    keys.push_back(std::move(key));
    reps.push_back(g);
  }
  return reps;
}

}  // namespace lcdg

#endif  // LCDGRAPH_CANONICAL_HPP
