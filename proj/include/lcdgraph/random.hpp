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

#ifndef LCDGRAPH_RANDOM_HPP
#define LCDGRAPH_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lcdgraph/code.hpp"
#include "lcdgraph/graph.hpp"
#include "lcdgraph/matrix.hpp"

namespace lcdg {

/// Seeded generator whose draws are identical on every platform (the
/// standard distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  std::size_t between(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(below(hi - lo + 1)); }

  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

inline ExactMatrix random_matrix(const FiniteField& f, std::size_t rows, std::size_t cols, Rng& rng) {
  ExactMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<Element>(rng.below(f.order())));
  return m;
}

/// Row span of k random vectors; the dimension may come out below k.
inline LinearCode random_code(const FiniteField& f, std::size_t n, std::size_t k, Rng& rng) {
  return LinearCode(random_matrix(f, k, n, rng));
}

/// Row span of k random even-weight binary vectors.
inline LinearCode random_even_code(std::size_t n, std::size_t k, Rng& rng) {
  const FiniteField f2(2);
  auto m = random_matrix(f2, k, n, rng);
  for (std::size_t r = 0; r < k; ++r)
    if (m.row_weight(r) % 2) m.set(r, n - 1, m(r, n - 1) ^ 1U);
  return LinearCode(m);
}

inline std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[static_cast<std::size_t>(rng.below(i))]);
  return p;
}

inline Monomial random_monomial(const FiniteField& f, std::size_t n, Rng& rng) {
  Monomial m{random_permutation(n, rng), std::vector<Element>(n)};
  for (auto& s : m.scale) s = static_cast<Element>(1 + rng.below(f.order() - 1));
  return m;
}

inline SimpleGraph random_graph(std::size_t v, Rng& rng) {
  SimpleGraph g(v);
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b)
      if (rng.coin()) g.add_edge(a, b);
  return g;
}

inline std::vector<std::size_t> random_subset(std::size_t v, Rng& rng) {
  std::vector<std::size_t> s;
  for (std::size_t x = 0; x < v; ++x)
    if (rng.coin()) s.push_back(x);
  return s;
}

}  // namespace lcdg

#endif  // LCDGRAPH_RANDOM_HPP
