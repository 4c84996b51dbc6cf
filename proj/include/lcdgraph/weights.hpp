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

#ifndef LCDGRAPH_WEIGHTS_HPP
#define LCDGRAPH_WEIGHTS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "lcdgraph/code.hpp"
#include "lcdgraph/error.hpp"

namespace lcdg {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 28;

struct WeightDistribution {
  std::vector<std::uint64_t> counts;  // counts[w] = number of codewords of weight w

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }

  /// Smallest nonzero weight present, or 0 for the zero code.
  std::size_t min_nonzero() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
      if (counts[w]) return w;
    return 0;
  }

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

namespace detail {

inline std::uint64_t codeword_count(const LinearCode& c, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    if (total > budget / c.field().order())
      fail(Errc::budget_exceeded, std::to_string(c.field().order()) + "^" + std::to_string(c.dimension()) +
                                      " codewords exceed the enumeration budget of " + std::to_string(budget));
    total *= c.field().order();
  }
  if (total > budget) fail(Errc::budget_exceeded, "codeword count exceeds the enumeration budget");
  return total;
}

// Gray-code walk over message indices [begin, end): consecutive codewords
// differ by one generator row, so each step is a word-parallel XOR.
inline void binary_histogram(const ExactMatrix& g, std::uint64_t begin, std::uint64_t end,
                             std::vector<std::uint64_t>& hist) {
  const std::size_t words = g.words_per_row();
  const std::size_t k = g.rows();
  std::vector<ExactMatrix::Word> cur(words, 0);
  const std::uint64_t start_gray = begin ^ (begin >> 1);
  for (std::size_t r = 0; r < k; ++r)
    if ((start_gray >> r) & 1) {
      auto row = g.row_words(r);
      for (std::size_t w = 0; w < words; ++w) cur[w] ^= row[w];
    }
  if (words == 1) {
    ExactMatrix::Word x = cur[0];
    for (std::uint64_t i = begin;;) {
      ++hist[static_cast<std::size_t>(std::popcount(x))];
      if (++i == end) break;
      x ^= g.row_words(static_cast<std::size_t>(std::countr_zero(i)))[0];
    }
    return;
  }
  for (std::uint64_t i = begin;;) {
    std::size_t wt = 0;
    for (auto x : cur) wt += static_cast<std::size_t>(std::popcount(x));
    ++hist[wt];
    if (++i == end) break;
    auto row = g.row_words(static_cast<std::size_t>(std::countr_zero(i)));
    for (std::size_t w = 0; w < words; ++w) cur[w] ^= row[w];
  }
}

// Odometer walk over all p^k messages: bumping digit j adds row j once; a
// digit wrapping back to zero has added its row p times, which is zero.
inline void generic_histogram(const LinearCode& c, std::vector<std::uint64_t>& hist) {
  const auto& f = c.field();
  const auto rows = c.generator().row_list();
  const std::size_t k = rows.size(), n = c.length();
  Vector cur(n, 0), digit(k, 0);
  std::size_t weight = 0;
  ++hist[0];
  for (;;) {
    std::size_t j = 0;
    for (; j < k; ++j) {
      for (std::size_t t = 0; t < n; ++t) {
        if (!rows[j][t]) continue;
        const bool was = cur[t] != 0;
        cur[t] = f.add(cur[t], rows[j][t]);
        weight = weight - was + (cur[t] != 0);
      }
      if (++digit[j] < f.order()) break;
      digit[j] = 0;
    }
    if (j == k) break;
    ++hist[weight];
  }
}

}  // namespace detail

/// Exact weight distribution by exhaustive enumeration. Binary codes are
/// walked in Gray-code order and split across `jobs` workers (0 = hardware
/// concurrency); the merged result does not depend on the split.
inline WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t budget = kDefaultEnumerationBudget,
                                              unsigned jobs = 0) {
  const std::uint64_t total = detail::codeword_count(c, budget);
  WeightDistribution out{std::vector<std::uint64_t>(c.length() + 1, 0)};
  if (!c.field().is_binary()) {
    detail::generic_histogram(c, out.counts);
    return out;
  }
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  if (total < (std::uint64_t{1} << 16)) jobs = 1;
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));
  std::vector<std::vector<std::uint64_t>> parts(jobs, std::vector<std::uint64_t>(c.length() + 1, 0));
  const std::uint64_t chunk = (total + jobs - 1) / jobs;
  auto work = [&](unsigned j) {
    const std::uint64_t b = j * chunk, e = std::min(total, b + chunk);
    if (b < e) detail::binary_histogram(c.generator(), b, e, parts[j]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }
  for (const auto& p : parts)
    for (std::size_t w = 0; w < p.size(); ++w) out.counts[w] += p[w];
  return out;
}

inline std::size_t min_weight(const LinearCode& c, std::uint64_t budget = kDefaultEnumerationBudget,
                              unsigned jobs = 0) {
  if (c.dimension() == 0) fail(Errc::no_nonzero_codeword, "the zero code has no nonzero codeword");
  return weight_distribution(c, budget, jobs).min_nonzero();
}

}  // namespace lcdg

#endif  // LCDGRAPH_WEIGHTS_HPP
