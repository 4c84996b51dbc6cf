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

#ifndef LCDGRAPH_MATRIX_HPP
#define LCDGRAPH_MATRIX_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcdgraph/error.hpp"
#include "lcdgraph/field.hpp"

namespace lcdg {

using Vector = std::vector<Element>;

/// Dense integer matrix. Carries (0,1) and (0,-1,+1) adjacency matrices and
/// identities that must hold over the integers before any reduction.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, long long fill = 0)
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix all_ones(std::size_t r, std::size_t c) { return IntMatrix(r, c, 1); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  long long& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  long long operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) fail(Errc::bad_input, "integer matrix product dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const long long x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
      }
    return out;
  }
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Errc::bad_input, "integer matrix sum dimension mismatch");
    for (std::size_t i = 0; i < a.cells_.size(); ++i) a.cells_[i] += b.cells_[i];
    return a;
  }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Errc::bad_input, "integer matrix difference dimension mismatch");
    for (std::size_t i = 0; i < a.cells_.size(); ++i) a.cells_[i] -= b.cells_[i];
    return a;
  }
  friend IntMatrix operator*(long long s, IntMatrix a) {
    for (auto& x : a.cells_) x *= s;
    return a;
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<long long> cells_;
};

/// Dense matrix over a FiniteField. Over F_2 every row is a packed run of
/// 64-bit words so row operations and products run word-parallel; other
/// fields store one Element per cell.
class ExactMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  explicit ExactMatrix(FiniteField field, std::size_t rows = 0, std::size_t cols = 0)
      : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (field_.is_binary()) {
      words_ = (cols_ + kWordBits - 1) / kWordBits;
      bits_.assign(rows_ * words_, 0);
    } else {
      cells_.assign(rows_ * cols_, 0);
    }
  }

  static ExactMatrix identity(const FiniteField& f, std::size_t n) {
    ExactMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  static ExactMatrix all_ones(const FiniteField& f, std::size_t rows, std::size_t cols) {
    ExactMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, 1);
    return m;
  }

  /// All rows must have equal length and canonical entries.
  static ExactMatrix from_rows(const FiniteField& f, const std::vector<Vector>& rows, std::size_t cols) {
    ExactMatrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols)
        fail(Errc::bad_input, "row " + std::to_string(r + 1) + " has length " + std::to_string(rows[r].size()) +
                                  ", expected " + std::to_string(cols));
      for (std::size_t c = 0; c < cols; ++c) {
        f.check(rows[r][c]);
        m.set(r, c, rows[r][c]);
      }
    }
    return m;
  }

  static ExactMatrix from_rows(const FiniteField& f, const std::vector<Vector>& rows) {
    return from_rows(f, rows, rows.empty() ? 0 : rows.front().size());
  }

  /// Reduces an integer matrix through the prime subfield.
  static ExactMatrix from_integers(const FiniteField& f, const IntMatrix& a) {
    ExactMatrix m(f, a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) m.set(r, c, f.from_integer(a(r, c)));
    return m;
  }

  const FiniteField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_binary() const noexcept { return field_.is_binary(); }
  std::size_t words_per_row() const noexcept { return words_; }

  Element operator()(std::size_t r, std::size_t c) const {
    if (is_binary()) return (bits_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    return cells_[r * cols_ + c];
  }

  void set(std::size_t r, std::size_t c, Element v) {
    if (is_binary()) {
      Word& w = bits_[r * words_ + c / kWordBits];
      const Word mask = Word{1} << (c % kWordBits);
      w = v ? (w | mask) : (w & ~mask);
    } else {
      cells_[r * cols_ + c] = v;
    }
  }

  std::span<const Word> row_words(std::size_t r) const { return {bits_.data() + r * words_, words_}; }
  std::span<Word> row_words(std::size_t r) { return {bits_.data() + r * words_, words_}; }

  Vector row(std::size_t r) const {
    Vector out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
    return out;
  }

  std::vector<Vector> row_list() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  bool is_zero_row(std::size_t r) const {
    if (is_binary()) {
      auto w = row_words(r);
      return std::all_of(w.begin(), w.end(), [](Word x) { return x == 0; });
    }
    for (std::size_t c = 0; c < cols_; ++c)
      if (cells_[r * cols_ + c] != 0) return false;
    return true;
  }

  std::size_t row_weight(std::size_t r) const {
    if (is_binary()) {
      std::size_t w = 0;
      for (Word x : row_words(r)) w += static_cast<std::size_t>(std::popcount(x));
      return w;
    }
    std::size_t w = 0;
    for (std::size_t c = 0; c < cols_; ++c) w += cells_[r * cols_ + c] != 0;
    return w;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    if (is_binary()) {
      for (std::size_t w = 0; w < words_; ++w) std::swap(bits_[a * words_ + w], bits_[b * words_ + w]);
    } else {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(cells_[a * cols_ + c], cells_[b * cols_ + c]);
    }
  }

  void scale_row(std::size_t r, Element s) {
    if (is_binary()) {
      if (s == 0) std::fill_n(bits_.begin() + static_cast<std::ptrdiff_t>(r * words_), words_, 0);
      return;
    }
    for (std::size_t c = 0; c < cols_; ++c) cells_[r * cols_ + c] = field_.mul(cells_[r * cols_ + c], s);
  }

  /// row[dst] += s * row[src]
  void add_scaled_row(std::size_t dst, std::size_t src, Element s) {
    if (s == 0) return;
    if (is_binary()) {
      for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] ^= bits_[src * words_ + w];
      return;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      const Element x = cells_[src * cols_ + c];
      if (x) cells_[dst * cols_ + c] = field_.add(cells_[dst * cols_ + c], field_.mul(s, x));
    }
  }

  ExactMatrix transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (Element x = (*this)(r, c)) t.set(c, r, x);
    return t;
  }

  bool is_square() const noexcept { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  ExactMatrix select_columns(std::span<const std::size_t> keep) const {
    ExactMatrix out(field_, rows_, keep.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < keep.size(); ++j) out.set(r, j, (*this)(r, keep[j]));
    return out;
  }

  ExactMatrix select_rows(std::span<const std::size_t> keep) const {
    ExactMatrix out(field_, keep.size(), cols_);
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t c = 0; c < cols_; ++c) out.set(i, c, (*this)(keep[i], c));
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_ &&
           a.cells_ == b.cells_;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (!(a.field_ == b.field_)) fail(Errc::bad_input, "matrix product over different fields");
    if (a.cols_ != b.rows_)
      fail(Errc::bad_input, "matrix product dimension mismatch: " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
    ExactMatrix out(a.field_, a.rows_, b.cols_);
    if (a.is_binary()) {
      for (std::size_t i = 0; i < a.rows_; ++i) {
        auto dst = out.row_words(i);
        for (std::size_t k = 0; k < a.cols_; ++k) {
          if (!a(i, k)) continue;
          auto src = b.row_words(k);
          for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
        }
      }
      return out;
    }
    const auto& f = a.field_;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Element x = a(i, k);
        if (!x) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Element y = b(k, j);
          if (y) out.cells_[i * out.cols_ + j] = f.add(out.cells_[i * out.cols_ + j], f.mul(x, y));
        }
      }
    return out;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_)
      fail(Errc::bad_input, "matrix sum shape or field mismatch");
    if (a.is_binary()) {
      for (std::size_t i = 0; i < a.bits_.size(); ++i) a.bits_[i] ^= b.bits_[i];
    } else {
      for (std::size_t i = 0; i < a.cells_.size(); ++i) a.cells_[i] = a.field_.add(a.cells_[i], b.cells_[i]);
    }
    return a;
  }

  ExactMatrix operator-() const {
    ExactMatrix out = *this;
    if (!is_binary())
      for (auto& x : out.cells_) x = field_.neg(x);
    return out;
  }

  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + (-b); }

 private:
  FiniteField field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
  std::vector<Element> cells_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination. Pivot rows come first
/// and are normalized to a leading 1.
inline RrefResult rref(ExactMatrix m) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    m.swap_rows(r, pr);
    if (!m.is_binary()) m.scale_row(r, f.inv(m(r, c)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      if (Element x = m(i, c)) m.add_scaled_row(i, r, f.neg(x));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

/// Rank of an integer matrix reduced mod p.
inline std::size_t p_rank(const IntMatrix& a, std::uint32_t p) {
  return rank(ExactMatrix::from_integers(FiniteField(p), a));
}

inline ExactMatrix invert(const ExactMatrix& m) {
  if (!m.is_square()) fail(Errc::bad_input, "cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m(r, c));
    aug.set(r, n + r, 1);
  }
  auto red = rref(std::move(aug));
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1))
    fail(Errc::singular_matrix, "matrix of order " + std::to_string(n) + " is singular");
  std::vector<std::size_t> right(n);
  for (std::size_t i = 0; i < n; ++i) right[i] = n + i;
  return red.reduced.select_columns(right);
}

/// Basis (as rows) of {x : m * x^T = 0}.
inline ExactMatrix nullspace(const ExactMatrix& m) {
  const auto& f = m.field();
  const auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;
  ExactMatrix basis(f, m.cols() - red.rank, m.cols());
  std::size_t b = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(b, free, 1);
    for (std::size_t i = 0; i < red.rank; ++i)
      if (Element x = red.reduced(i, free)) basis.set(b, red.pivots[i], f.neg(x));
    ++b;
  }
  return basis;
}

/// Reduces `v` against a matrix already in RREF; the result is zero iff `v`
/// lies in the row span.
inline Vector reduce_against(const RrefResult& red, Vector v) {
  const auto& f = red.reduced.field();
  for (std::size_t i = 0; i < red.rank; ++i) {
    const Element x = v[red.pivots[i]];
    if (!x) continue;
    const Element s = f.neg(x);
    for (std::size_t c = 0; c < v.size(); ++c)
      if (Element y = red.reduced(i, c)) v[c] = f.add(v[c], f.mul(s, y));
  }
  return v;
}

inline bool in_row_space(const RrefResult& red, const Vector& v) {
  const auto r = reduce_against(red, v);
  return std::all_of(r.begin(), r.end(), [](Element x) { return x == 0; });
}

}  // namespace lcdg

#endif  // LCDGRAPH_MATRIX_HPP
