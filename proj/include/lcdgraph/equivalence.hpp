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

#ifndef LCDGRAPH_EQUIVALENCE_HPP
#define LCDGRAPH_EQUIVALENCE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcdgraph/code.hpp"
#include "lcdgraph/error.hpp"
#include "lcdgraph/matrix.hpp"
#include "lcdgraph/weights.hpp"

namespace lcdg {

inline constexpr std::size_t kBruteForceMaxLength = 10;

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<Monomial> witness;  // C2 = C1 * witness
};

/// All p^k codewords, in odometer order over the generator rows.
inline std::vector<Vector> all_codewords(const LinearCode& c, std::uint64_t budget = kDefaultEnumerationBudget) {
  detail::codeword_count(c, budget);
  const auto& f = c.field();
  const auto rows = c.generator().row_list();
  std::vector<Vector> out{Vector(c.length(), 0)};
  for (const auto& r : rows) {
    const std::size_t base = out.size();
    for (Element s = 1; s < f.order(); ++s)
      for (std::size_t i = 0; i < base; ++i) {
        Vector w = out[i];
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.add(w[j], f.mul(s, r[j]));
        out.push_back(std::move(w));
      }
  }
  return out;
}

namespace detail {

inline std::size_t weight_of(const Vector& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Element x) { return x != 0; }));
}

// For every coordinate j, the weight histogram of codewords nonzero at j.
// Monomial maps carry these histograms along with the coordinates.
inline std::vector<std::vector<std::uint64_t>> coordinate_profiles(const std::vector<Vector>& words, std::size_t n) {
  std::vector<std::vector<std::uint64_t>> prof(n, std::vector<std::uint64_t>(n + 1, 0));
  for (const auto& w : words) {
    const std::size_t wt = weight_of(w);
    for (std::size_t j = 0; j < n; ++j)
      if (w[j]) ++prof[j][wt];
  }
  return prof;
}

// Given the coordinate permutation, finds nonzero scalars d with
// C1 * diag(d) * P = C2. The condition G1 diag(d) P H2^T = 0 is linear in d.
inline std::optional<std::vector<Element>> solve_scaling(const LinearCode& c1, const LinearCode& c2,
                                                         const ExactMatrix& h2, const std::vector<std::size_t>& perm) {
  const auto& f = c1.field();
  const std::size_t n = c1.length();
  const auto& g1 = c1.generator();
  if (f.is_binary()) {
    for (std::size_t r = 0; r < g1.rows(); ++r) {
      Vector img(n, 0);
      for (std::size_t j = 0; j < n; ++j) img[perm[j]] = g1(r, j);
      if (!c2.contains(img)) return std::nullopt;
    }
    return std::vector<Element>(n, 1);
  }
  ExactMatrix system(f, g1.rows() * h2.rows(), n);
  for (std::size_t r = 0; r < g1.rows(); ++r)
    for (std::size_t s = 0; s < h2.rows(); ++s)
      for (std::size_t j = 0; j < n; ++j) system.set(r * h2.rows() + s, j, f.mul(g1(r, j), h2(s, perm[j])));
  const auto basis = nullspace(system);
  const std::size_t dim = basis.rows();
  if (dim == 0) return std::nullopt;
  // Walk the kernel looking for a vector without zero entries.
  std::vector<Element> coeff(dim, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < dim && ++coeff[i] == f.order()) coeff[i++] = 0;
    if (i == dim) return std::nullopt;
    std::vector<Element> d(n, 0);
    for (std::size_t b = 0; b < dim; ++b)
      if (coeff[b])
        for (std::size_t j = 0; j < n; ++j) d[j] = f.add(d[j], f.mul(coeff[b], basis(b, j)));
    if (std::all_of(d.begin(), d.end(), [](Element x) { return x != 0; })) return d;
  }
}

}  // namespace detail

/// Decides monomial equivalence by searching coordinate permutations, pruned
/// by weight distribution and per-coordinate weight profiles; scalings are
/// solved per permutation. Factorial in n, so n is capped.
inline EquivalenceResult equivalent_bruteforce(const LinearCode& c1, const LinearCode& c2,
                                               std::size_t max_length = kBruteForceMaxLength) {
  if (!(c1.field() == c2.field())) fail(Errc::bad_input, "codes are over different fields");
  if (c1.length() != c2.length()) fail(Errc::bad_input, "codes have different lengths");
  const std::size_t n = c1.length();
  if (n > max_length)
    fail(Errc::budget_exceeded, "brute-force equivalence supports length at most " + std::to_string(max_length));
  if (c1.dimension() != c2.dimension()) return {};
  if (c1 == c2) return {true, Monomial::identity(n)};
  if (!(weight_distribution(c1, kDefaultEnumerationBudget, 1) == weight_distribution(c2, kDefaultEnumerationBudget, 1)))
    return {};

  const auto p1 = detail::coordinate_profiles(all_codewords(c1), n);
  const auto p2 = detail::coordinate_profiles(all_codewords(c2), n);
  {
    auto s1 = p1, s2 = p2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return {};
  }
  const auto h2 = dual(c2).generator();

  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  std::optional<std::vector<Element>> scaling;
  auto search = [&](auto&& self, std::size_t j) -> bool {
    if (j == n) {
      scaling = detail::solve_scaling(c1, c2, h2, perm);
      return scaling.has_value();
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || p1[j] != p2[t]) continue;
      used[t] = true;
      perm[j] = t;
      if (self(self, j + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  if (!search(search, 0)) return {};
  Monomial m{perm, *scaling};
  if (!(apply_monomial(c1, m) == c2)) fail(Errc::theorem_violation, "monomial witness does not verify");
  return {true, std::move(m)};
}

}  // namespace lcdg

#endif  // LCDGRAPH_EQUIVALENCE_HPP
