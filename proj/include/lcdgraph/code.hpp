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

#ifndef LCDGRAPH_CODE_HPP
#define LCDGRAPH_CODE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "lcdgraph/error.hpp"
#include "lcdgraph/field.hpp"
#include "lcdgraph/matrix.hpp"

namespace lcdg {

/// A linear [n,k] code over F_2 or F_3, held as its RREF generator matrix.
/// The RREF is the canonical representative of the subspace, so two codes
/// compare equal exactly when they are the same subspace.
class LinearCode {
 public:
  /// The zero code of length n.
  LinearCode(const FiniteField& field, std::size_t n) : gen_(field, 0, n) { check_field(field); }

  /// Row span of `rows`, canonicalized. Zero rows are dropped.
  static LinearCode from_rows(const FiniteField& field, std::size_t n, const std::vector<Vector>& rows) {
    check_field(field);
    return LinearCode(ExactMatrix::from_rows(field, rows, n));
  }

  /// Row span of an arbitrary matrix.
  explicit LinearCode(const ExactMatrix& rows) : gen_(rows.field()) {
    check_field(rows.field());
    auto red = rref(rows);
    std::vector<std::size_t> keep(red.rank);
    std::iota(keep.begin(), keep.end(), std::size_t{0});
    gen_ = red.reduced.select_rows(keep);
    pivots_ = std::move(red.pivots);
  }

  const FiniteField& field() const noexcept { return gen_.field(); }
  std::size_t length() const noexcept { return gen_.cols(); }
  std::size_t dimension() const noexcept { return gen_.rows(); }
  const ExactMatrix& generator() const noexcept { return gen_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const {
    if (v.size() != length()) return false;
    return in_row_space(RrefResult{gen_, dimension(), pivots_}, v);
  }

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gen_ == b.gen_; }

 private:
  static void check_field(const FiniteField& f) {
    if (!f.is_prime_field() || (f.order() != 2 && f.order() != 3))
      fail(Errc::wrong_field, "codes are supported over F_2 and F_3 only, got " + f.name());
  }

  ExactMatrix gen_;
  std::vector<std::size_t> pivots_;
};

inline LinearCode code_from_rows(const FiniteField& field, std::size_t n, const std::vector<Vector>& rows) {
  return LinearCode::from_rows(field, n, rows);
}

inline LinearCode dual(const LinearCode& c) { return LinearCode(nullspace(c.generator())); }

/// Gram matrix G G^T of the canonical generator.
inline ExactMatrix gram(const LinearCode& c) { return c.generator() * c.generator().transpose(); }

/// LCD test through the rank of G G^T.
inline bool is_lcd(const LinearCode& c) { return rank(gram(c)) == c.dimension(); }

/// dim(C ∩ C^⊥) computed as dim C + dim C^⊥ - dim(C + C^⊥). Independent of
/// the Gram-matrix route used by is_lcd.
inline std::size_t hull_dimension(const LinearCode& c) {
  const auto d = dual(c);
  ExactMatrix both(c.field(), c.dimension() + d.dimension(), c.length());
  for (std::size_t r = 0; r < c.dimension(); ++r)
    for (std::size_t j = 0; j < c.length(); ++j) both.set(r, j, c.generator()(r, j));
  for (std::size_t r = 0; r < d.dimension(); ++r)
    for (std::size_t j = 0; j < c.length(); ++j) both.set(c.dimension() + r, j, d.generator()(r, j));
  return c.dimension() + d.dimension() - rank(both);
}

/// Orthogonal projector G^T (G G^T)^{-1} G. The zero code projects onto {0}.
inline ExactMatrix projector(const LinearCode& c) {
  const auto& g = c.generator();
  if (c.dimension() == 0) return ExactMatrix(c.field(), c.length(), c.length());
  ExactMatrix inv(c.field());
  try {
    inv = invert(gram(c));
  } catch (const Error& e) {
    if (e.code() == Errc::singular_matrix) fail(Errc::not_lcd, "G G^T is singular, the code is not LCD");
    throw;
  }
  return g.transpose() * inv * g;
}

/// Binary codes only. Even-weight words form a subspace, so checking the
/// generator rows suffices.
inline bool is_even(const LinearCode& c) {
  if (!c.field().is_binary()) fail(Errc::wrong_field, "evenness is defined for binary codes");
  for (std::size_t r = 0; r < c.dimension(); ++r)
    if (c.generator().row_weight(r) % 2) return false;
  return true;
}

namespace detail {

inline std::vector<bool> coordinate_mask(std::size_t n, const std::vector<std::size_t>& coords) {
  std::vector<bool> mask(n, false);
  for (auto i : coords) {
    if (i >= n)
      fail(Errc::bad_input, "coordinate " + std::to_string(i + 1) + " outside 1.." + std::to_string(n));
    mask[i] = true;
  }
  return mask;
}

inline std::vector<std::size_t> complement(std::size_t n, const std::vector<bool>& mask) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j)
    if (!mask[j]) keep.push_back(j);
  return keep;
}

}  // namespace detail

/// Deletes coordinates (0-indexed) from every codeword.
inline LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& coords) {
  const auto keep = detail::complement(c.length(), detail::coordinate_mask(c.length(), coords));
  return LinearCode(c.generator().select_columns(keep));
}

/// Subcode vanishing on `coords`, then punctured there.
inline LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& coords) {
  const auto mask = detail::coordinate_mask(c.length(), coords);
  std::vector<std::size_t> on_t;
  for (std::size_t j = 0; j < c.length(); ++j)
    if (mask[j]) on_t.push_back(j);
  // Codewords are u G; they vanish on T iff u lies in the left kernel of G|_T.
  const auto restricted = c.generator().select_columns(on_t);
  const auto combos = nullspace(restricted.transpose());
  const auto sub = combos * c.generator();
  return LinearCode(sub.select_columns(detail::complement(c.length(), mask)));
}

/// Monomial map x -> x N where N[j][perm[j]] = scale[j].
struct Monomial {
  std::vector<std::size_t> perm;
  std::vector<Element> scale;

  static Monomial identity(std::size_t n) {
    Monomial m{std::vector<std::size_t>(n), std::vector<Element>(n, 1)};
    std::iota(m.perm.begin(), m.perm.end(), std::size_t{0});
    return m;
  }

  std::size_t size() const noexcept { return perm.size(); }

  ExactMatrix to_matrix(const FiniteField& f) const {
    ExactMatrix n(f, perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) n.set(j, perm[j], scale[j]);
    return n;
  }

  Vector apply(const FiniteField& f, const Vector& x) const {
    Vector y(x.size(), 0);
    for (std::size_t j = 0; j < x.size(); ++j) y[perm[j]] = f.mul(x[j], scale[j]);
    return y;
  }

  bool is_valid(const FiniteField& f) const {
    if (scale.size() != perm.size()) return false;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t j = 0; j < perm.size(); ++j) {
      if (perm[j] >= perm.size() || seen[perm[j]] || scale[j] == 0 || !f.contains(scale[j])) return false;
      seen[perm[j]] = true;
    }
    return true;
  }
};

/// The code { c N : c in C }.
inline LinearCode apply_monomial(const LinearCode& c, const Monomial& m) {
  if (m.size() != c.length()) fail(Errc::bad_input, "monomial size differs from code length");
  return LinearCode(c.generator() * m.to_matrix(c.field()));
}

enum class Dichotomy { punctured_is_lcd, shortened_is_lcd };

/// For a binary LCD code with d(C), d(C^⊥) >= 2, exactly one of the punctured
/// and shortened codes on coordinate i is LCD, and the projector diagonal
/// entry at i says which. Both facts are checked; a violation throws
/// TheoremViolation.
inline Dichotomy puncture_shorten_dichotomy(const LinearCode& c, std::size_t i) {
  const std::string at = " (coordinate " + std::to_string(i + 1) + ")";
  if (!c.field().is_binary()) fail(Errc::precondition_failed, "code must be binary" + at);
  if (i >= c.length()) fail(Errc::precondition_failed, "coordinate out of range" + at);
  if (c.dimension() == 0 || c.dimension() == c.length())
    fail(Errc::precondition_failed, "code and its dual must be nonzero" + at);
  if (!is_lcd(c)) fail(Errc::precondition_failed, "code is not LCD" + at);
  for (std::size_t j = 0; j < c.length(); ++j) {
    Vector e(c.length(), 0);
    e[j] = 1;
    if (c.contains(e)) fail(Errc::precondition_failed, "d(C) = 1" + at);
    bool zero_column = true;
    for (std::size_t r = 0; r < c.dimension() && zero_column; ++r) zero_column = c.generator()(r, j) == 0;
    if (zero_column) fail(Errc::precondition_failed, "d(C^perp) = 1" + at);
  }
  const bool punctured = is_lcd(puncture(c, {i}));
  const bool shortened = is_lcd(shorten(c, {i}));
  if (punctured == shortened)
    fail(Errc::theorem_violation, std::string(punctured ? "both" : "neither") +
                                      " punctured and shortened codes are LCD" + at);
  const bool diagonal_one = projector(c)(i, i) == 1;
  if (diagonal_one == punctured)
    fail(Errc::theorem_violation, "projector diagonal disagrees with the LCD derived code" + at);
  return punctured ? Dichotomy::punctured_is_lcd : Dichotomy::shortened_is_lcd;
}

/// Largest d with sum_{i<k} ceil(d / q^i) <= n; 0 when even d = 1 fails.
inline std::size_t griesmer_max_d(std::size_t n, std::size_t k, std::size_t q) {
  if (k < 1 || k > n) fail(Errc::bad_input, "Griesmer bound needs 1 <= k <= n");
  if (q < 2) fail(Errc::bad_input, "field order must be at least 2");
  auto length_needed = [&](std::size_t d) {
    std::size_t total = 0, qi = 1;
    for (std::size_t i = 0; i < k; ++i) {
      total += (d + qi - 1) / qi;
      if (total > n) return total;
      if (qi <= n) qi *= q;  // once q^i > d every further term is 1
    }
    return total;
  };
  std::size_t best = 0;
  for (std::size_t d = 1; d <= n; ++d)
    if (length_needed(d) <= n) best = d;
  return best;
}

}  // namespace lcdg

#endif  // LCDGRAPH_CODE_HPP
