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

#ifndef LCDGRAPH_FIELD_HPP
#define LCDGRAPH_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lcdgraph/error.hpp"

namespace lcdg {

/// Canonical field element. Prime fields use 0..p-1; F_{p^2} packs the
/// polynomial a0 + a1*x as the base-p number a0 + a1*p.
using Element = std::uint32_t;

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// A prime field F_p or a quadratic extension F_{p^2} given by a monic
/// irreducible modulus. Values are immutable after construction.
class FiniteField {
 public:
  /// Prime field F_p.
  explicit FiniteField(std::uint32_t p) : FiniteField(p, {}) {}

  /// F_{p^k} with monic modulus given low-to-high: {c0, c1, ..., 1}.
  /// An empty modulus means the prime field.
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p) || p > 65521) fail(Errc::bad_input, "field characteristic " + std::to_string(p) + " is not a supported prime");
    if (modulus_.empty()) {
      order_ = p;
      return;
    }
    if (modulus_.size() != 3)
      fail(Errc::bad_input, "only extension degree 2 is supported");
    if (modulus_.back() != 1) fail(Errc::bad_input, "modulus polynomial must be monic");
    for (auto c : modulus_)
      if (c >= p) fail(Errc::bad_input, "modulus coefficient out of range");
    if (!irreducible_quadratic(p, modulus_[0], modulus_[1]))
      fail(Errc::bad_input, "modulus polynomial is reducible over F_" + std::to_string(p));
    order_ = p * p;
  }

  /// Field of order q = p or p^2. Extension fields get the default modulus:
  /// the lexicographically least irreducible monic quadratic, comparing the
  /// coefficient list low-to-high (x^2+1 over F_3, x^2+x+1 over F_5).
  static FiniteField of_order(std::uint32_t q) {
    if (is_prime(q)) return FiniteField(q);
    for (std::uint32_t p = 2; p * p <= q; ++p) {
      if (p * p == q && is_prime(p)) return FiniteField(p, default_quadratic(p));
    }
    fail(Errc::bad_input, "order " + std::to_string(q) + " is not p or p^2 for a prime p");
  }

  static std::vector<std::uint32_t> default_quadratic(std::uint32_t p) {
    for (std::uint32_t c0 = 0; c0 < p; ++c0)
      for (std::uint32_t c1 = 0; c1 < p; ++c1)
        if (irreducible_quadratic(p, c0, c1)) return {c0, c1, 1};
    fail(Errc::bad_input, "no irreducible quadratic found");  // unreachable for prime p
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return modulus_.empty() ? 1 : 2; }
  std::uint32_t order() const noexcept { return order_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool is_prime_field() const noexcept { return modulus_.empty(); }
  bool is_binary() const noexcept { return order_ == 2; }

  bool contains(Element a) const noexcept { return a < order_; }

  void check(Element a) const {
    if (!contains(a))
      fail(Errc::bad_element, std::to_string(a) + " is not a canonical element of F_" + std::to_string(order_));
  }

  Element add(Element a, Element b) const {
    if (is_prime_field()) return (a + b) % p_;
    return pack((lo(a) + lo(b)) % p_, (hi(a) + hi(b)) % p_);
  }

  Element neg(Element a) const {
    if (is_prime_field()) return a == 0 ? 0 : p_ - a;
    return pack((p_ - lo(a)) % p_, (p_ - hi(a)) % p_);
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    if (is_prime_field()) return static_cast<Element>((std::uint64_t{a} * b) % p_);
    // (a0 + a1 x)(b0 + b1 x) with x^2 = -c1 x - c0
    const std::uint64_t a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    const std::uint64_t top = a1 * b1 % p_;
    std::uint64_t c0 = (a0 * b0 + top * (p_ - modulus_[0])) % p_;
    std::uint64_t c1 = (a0 * b1 + a1 * b0 + top * (p_ - modulus_[1])) % p_;
    return pack(static_cast<std::uint32_t>(c0), static_cast<std::uint32_t>(c1));
  }

  Element pow(Element a, std::uint64_t e) const {
    Element result = 1, base = a;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  Element inv(Element a) const {
    check(a);
    if (a == 0) fail(Errc::division_by_zero, "inverse of zero");
    return pow(a, order_ - 2);
  }

  /// Embeds an integer through the prime subfield.
  Element from_integer(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }

  std::string name() const {
    std::string s = "F_" + std::to_string(order_);
    if (!is_prime_field())
      s += "[x^2+" + std::to_string(modulus_[1]) + "x+" + std::to_string(modulus_[0]) + "]";
    return s;
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  static bool irreducible_quadratic(std::uint32_t p, std::uint32_t c0, std::uint32_t c1) {
    // A quadratic is reducible iff it has a root.
    for (std::uint64_t x = 0; x < p; ++x)
      if ((x * x + c1 * x + c0) % p == 0) return false;
    return true;
  }

  std::uint32_t lo(Element a) const noexcept { return a % p_; }
  std::uint32_t hi(Element a) const noexcept { return a / p_; }
  Element pack(std::uint32_t a0, std::uint32_t a1) const noexcept { return a0 + a1 * p_; }

  std::uint32_t p_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t order_ = 0;
};

enum class FieldOp { add, mul, neg, inv };

/// Checked single field operation; `b` is ignored for neg and inv.
inline Element field_arith(const FiniteField& f, FieldOp op, Element a, Element b = 0) {
  f.check(a);
  switch (op) {
    case FieldOp::add: f.check(b); return f.add(a, b);
    case FieldOp::mul: f.check(b); return f.mul(a, b);
    case FieldOp::neg: return f.neg(a);
    case FieldOp::inv: return f.inv(a);
  }
  fail(Errc::bad_input, "unknown field operation");
}

}  // namespace lcdg

#endif  // LCDGRAPH_FIELD_HPP
