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

#ifndef LCDGRAPH_TESTS_SUPPORT_ORACLES_HPP
#define LCDGRAPH_TESTS_SUPPORT_ORACLES_HPP

// Slow reference implementations for tests. These work on plain integer
// vectors and never call into the library's linear algebra, so agreement
// with the library is meaningful.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

inline int mod(long long x, int p) { return static_cast<int>(((x % p) + p) % p); }

inline int dot(const Vec& a, const Vec& b, int p) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return mod(s, p);
}

inline int weight(const Vec& a) {
  return static_cast<int>(std::count_if(a.begin(), a.end(), [](int x) { return x != 0; }));
}

/// Every vector of F_p^n, in odometer order.
inline std::vector<Vec> all_vectors(std::size_t n, int p) {
  std::vector<Vec> out;
  Vec v(n, 0);
  for (;;) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) return out;
  }
}

/// Set of all linear combinations of `rows`.
inline std::set<Vec> span(const Mat& rows, std::size_t n, int p) {
  std::set<Vec> out;
  for (const auto& coeffs : all_vectors(rows.size(), p)) {
    Vec w(n, 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t j = 0; j < n; ++j) w[j] = mod(w[j] + coeffs[r] * rows[r][j], p);
    out.insert(w);
  }
  return out;
}

inline std::set<Vec> dual_by_search(const Mat& rows, std::size_t n, int p) {
  std::set<Vec> out;
  for (const auto& x : all_vectors(n, p)) {
    bool ok = true;
    for (const auto& r : rows) ok = ok && dot(x, r, p) == 0;
    if (ok) out.insert(x);
  }
  return out;
}

/// log_p of a set size that is a power of p.
inline std::size_t log_size(std::size_t size, int p) {
  std::size_t k = 0;
  while (size > 1) {
    size /= static_cast<std::size_t>(p);
    ++k;
  }
  return k;
}

inline bool lcd(const Mat& rows, std::size_t n, int p) {
  const auto c = span(rows, n, p);
  for (const auto& x : c) {
    if (weight(x) == 0) continue;
    bool orth = true;
    for (const auto& r : rows) orth = orth && dot(x, r, p) == 0;
    if (orth) return false;
  }
  return true;
}

inline int min_weight(const std::set<Vec>& code) {
  int best = -1;
  for (const auto& x : code)
    if (weight(x) > 0 && (best < 0 || weight(x) < best)) best = weight(x);
  return best;
}

inline std::vector<std::uint64_t> weight_counts(const std::set<Vec>& code, std::size_t n) {
  std::vector<std::uint64_t> out(n + 1, 0);
  for (const auto& x : code) ++out[weight(x)];
  return out;
}

inline Mat multiply(const Mat& a, const Mat& b, int p) {
  Mat c(a.size(), Vec(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j) {
      long long s = 0;
      for (std::size_t t = 0; t < b.size(); ++t) s += static_cast<long long>(a[i][t]) * b[t][j];
      c[i][j] = p ? mod(s, p) : static_cast<int>(s);
    }
  return c;
}

/// Determinant-free rank: size of the row span.
inline std::size_t rank(const Mat& rows, int p) {
  if (rows.empty()) return 0;
  return log_size(span(rows, rows[0].size(), p).size(), p);
}

inline Mat adjacency(std::size_t v, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Mat a(v, Vec(v, 0));
  for (auto [x, y] : edges) a[x][y] = a[y][x] = 1;
  return a;
}

/// Permutation search: exists sigma with a[i][j] = b[sigma i][sigma j].
inline bool isomorphic(const Mat& a, const Mat& b) {
  const std::size_t v = a.size();
  if (b.size() != v) return false;
  std::vector<std::size_t> sigma(v);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < v && ok; ++i)
      for (std::size_t j = 0; j < v && ok; ++j) ok = a[i][j] == b[sigma[i]][sigma[j]];
    if (ok) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

/// Switch on the vertex set given by mask: toggle pairs crossing it.
inline Mat switched(const Mat& a, std::uint32_t mask) {
  Mat s = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && (((mask >> i) ^ (mask >> j)) & 1U)) s[i][j] = 1 - s[i][j];
  return s;
}

inline bool switching_isomorphic(const Mat& a, const Mat& b) {
  for (std::uint32_t mask = 0; mask < (1U << a.size()); ++mask)
    if (isomorphic(switched(a, mask), b)) return true;
  return false;
}

/// Exists a permutation and nonzero scaling taking span(a) onto span(b).
inline bool equivalent(const Mat& a, const Mat& b, std::size_t n, int p) {
  const auto ca = span(a, n, p), cb = span(b, n, p);
  if (ca.size() != cb.size()) return false;
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  const auto scalings = all_vectors(n, p - 1);  // digit d means scalar d + 1
  do {
    for (const auto& sc : scalings) {
      bool ok = true;
      for (auto it = ca.begin(); it != ca.end() && ok; ++it) {
        Vec y(n, 0);
        for (std::size_t j = 0; j < n; ++j) y[sigma[j]] = mod((*it)[j] * (sc[j] + 1), p);
        ok = cb.count(y) > 0;
      }
      if (ok) return true;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

}  // namespace oracle

#endif  // LCDGRAPH_TESTS_SUPPORT_ORACLES_HPP
