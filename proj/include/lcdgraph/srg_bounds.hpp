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

#ifndef LCDGRAPH_SRG_BOUNDS_HPP
#define LCDGRAPH_SRG_BOUNDS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "lcdgraph/code.hpp"
#include "lcdgraph/error.hpp"
#include "lcdgraph/graph.hpp"
#include "lcdgraph/weights.hpp"

namespace lcdg {

/// Exact nonnegative-denominator rational, always in lowest terms.
class Rational {
 public:
  Rational(long long num = 0, long long den = 1) : num_(num), den_(den) {
    if (den_ == 0) fail(Errc::bad_input, "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num() const noexcept { return num_; }
  long long den() const noexcept { return den_; }

  long long ceil() const {
    const long long q = num_ / den_;
    return (num_ % den_ > 0) ? q + 1 : q;
  }

  std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  long long num_, den_;
};

/// Which of lambda, mu plays the role of t in the bounds. The proven bounds
/// use the maximum; the minimum gives the sharper, unproven reading.
enum class TChoice { max, min };

inline long long pick_t(const SrgParams& s, TChoice choice) {
  return static_cast<long long>(choice == TChoice::max ? std::max(s.lambda, s.mu) : std::min(s.lambda, s.mu));
}

/// d(C^⊥) >= 1 + k/t for C spanned by A over F_2.
inline Rational bound_dual_minwt_A(const SrgParams& s, TChoice choice = TChoice::max) {
  const long long t = pick_t(s, choice);
  if (t == 0) fail(Errc::degenerate, "t = 0 leaves the bound undefined");
  return Rational(1) + Rational(static_cast<long long>(s.k), t);
}

/// d(C^⊥) >= 1 + (k+1)/(t+1) for C spanned by A + I over F_2.
inline Rational bound_dual_minwt_AI(const SrgParams& s, TChoice choice = TChoice::max) {
  return Rational(1) + Rational(static_cast<long long>(s.k) + 1, pick_t(s, choice) + 1);
}

inline LinearCode adjacency_code_f2(const SimpleGraph& g, bool plus_identity = false) {
  auto a = adjacency(g, AdjacencyKind::zero_one, FiniteField(2));
  if (plus_identity) a = a + ExactMatrix::identity(a.field(), a.rows());
  return LinearCode(a);
}

/// Minimum weight of the dual, or nullopt when the dual is the zero code.
inline std::optional<std::size_t> dual_min_weight(const LinearCode& c, std::uint64_t budget = kDefaultEnumerationBudget) {
  const auto d = dual(c);
  if (d.dimension() == 0) return std::nullopt;
  return min_weight(d, budget);
}

/// For odd valency k, d(C^⊥) must be even. Returns that parity fact for the
/// actual dual; a false return means the parity fact failed.
inline bool parity_corollary_check(const SimpleGraph& g, std::uint64_t budget = kDefaultEnumerationBudget) {
  const auto s = srg_params(g);
  if (!s) fail(Errc::precondition_failed, "graph is not strongly regular");
  if (s->k % 2 == 0) fail(Errc::not_applicable, "valency " + std::to_string(s->k) + " is even");
  const auto d = dual_min_weight(adjacency_code_f2(g), budget);
  return !d || *d % 2 == 0;
}

inline constexpr std::size_t kBoundsMaxOrder = 45;

struct BoundsReport {
  SrgParams params;
  std::size_t dim_a = 0, dim_ai = 0;
  std::optional<std::size_t> dual_minwt_a, dual_minwt_ai;  // nullopt: dual is zero
  std::optional<Rational> bound_a;                          // nullopt when t = 0
  Rational bound_ai, bound_ai_min;
  std::optional<Rational> bound_a_min;
  bool holds_a = true, holds_ai = true;
  std::optional<bool> parity;  // only for odd valency

  bool ok() const { return holds_a && holds_ai && parity.value_or(true); }

  /// actual - ceil(bound), when both exist
  std::optional<long long> slack_a() const {
    if (!dual_minwt_a || !bound_a) return std::nullopt;
    return static_cast<long long>(*dual_minwt_a) - bound_a->ceil();
  }
  std::optional<long long> slack_ai() const {
    if (!dual_minwt_ai) return std::nullopt;
    return static_cast<long long>(*dual_minwt_ai) - bound_ai.ceil();
  }
};

/// Computes the actual dual minimum weights for the generators A and A + I
/// and checks both lower bounds (t = max{lambda, mu}); the min{lambda, mu}
/// readings are reported alongside.
inline BoundsReport verify_bounds(const SimpleGraph& g, std::uint64_t budget = kDefaultEnumerationBudget) {
  if (g.order() > kBoundsMaxOrder)
    fail(Errc::budget_exceeded, "bounds verification supports at most " + std::to_string(kBoundsMaxOrder) + " vertices");
  const auto s = srg_params(g);
  if (!s) fail(Errc::precondition_failed, "graph is not strongly regular");
  BoundsReport r;
  r.params = *s;
  const auto ca = adjacency_code_f2(g, false);
  const auto cai = adjacency_code_f2(g, true);
  r.dim_a = ca.dimension();
  r.dim_ai = cai.dimension();
  r.dual_minwt_a = dual_min_weight(ca, budget);
  r.dual_minwt_ai = dual_min_weight(cai, budget);
  if (pick_t(*s, TChoice::max) > 0) r.bound_a = bound_dual_minwt_A(*s);
  if (pick_t(*s, TChoice::min) > 0) r.bound_a_min = bound_dual_minwt_A(*s, TChoice::min);
  r.bound_ai = bound_dual_minwt_AI(*s);
  r.bound_ai_min = bound_dual_minwt_AI(*s, TChoice::min);
  if (r.dual_minwt_a && r.bound_a) r.holds_a = static_cast<long long>(*r.dual_minwt_a) >= r.bound_a->ceil();
  if (r.dual_minwt_ai) r.holds_ai = static_cast<long long>(*r.dual_minwt_ai) >= r.bound_ai.ceil();
  if (s->k % 2 == 1) r.parity = !r.dual_minwt_a || *r.dual_minwt_a % 2 == 0;
  return r;
}

}  // namespace lcdg

#endif  // LCDGRAPH_SRG_BOUNDS_HPP
