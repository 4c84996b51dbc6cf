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

#ifndef LCDGRAPH_VERIFY_HPP
#define LCDGRAPH_VERIFY_HPP

// Verification suites behind `lcdg verify`. Each suite reruns one family of
// claims on fixed-seed random instances or exhaustive small cases and
// reports one Claim per property, with the instance count in the details.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcdgraph/canonical.hpp"
#include "lcdgraph/code.hpp"
#include "lcdgraph/correspondence.hpp"
#include "lcdgraph/equivalence.hpp"
#include "lcdgraph/graph.hpp"
#include "lcdgraph/io.hpp"
#include "lcdgraph/paley.hpp"
#include "lcdgraph/random.hpp"
#include "lcdgraph/srg_bounds.hpp"
#include "lcdgraph/two_graph.hpp"
#include "lcdgraph/weights.hpp"

namespace lcdg {

/// Files plus the command line that reproduce a failing instance.
struct ReproBundle {
  std::string command;
  std::vector<std::pair<std::string, std::string>> files;  // name, contents
};

struct Claim {
  std::string id;
  bool pass = true;
  std::string details;
  std::optional<ReproBundle> repro;
};

struct SuiteReport {
  std::string name;
  std::vector<Claim> claims;

  bool ok() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 500;
};

inline std::vector<std::string> suite_names() {
  return {"projector", "dichotomy", "binary-bijection", "ternary-bijection", "bounds", "paley"};
}

inline std::string code_text(const LinearCode& c) {
  std::ostringstream s;
  write_code(s, c);
  return s.str();
}

inline std::string graph_text(const SimpleGraph& g) {
  std::ostringstream s;
  write_graph(s, g);
  return s.str();
}

namespace detail {

// Accumulates one claim: counts instances, keeps the first failure.
class ClaimCheck {
 public:
  explicit ClaimCheck(std::string id) { claim_.id = std::move(id); }

  void pass() { ++checked_; }

  void fail(const std::string& why, ReproBundle bundle = {}) {
    ++checked_;
    ++failures_;
    if (claim_.pass) {
      claim_.pass = false;
      first_ = why;
      claim_.repro = std::move(bundle);
    }
  }

  void expect(bool ok, const std::string& why, const std::function<ReproBundle()>& bundle = {}) {
    if (ok)
      pass();
    else
      fail(why, bundle ? bundle() : ReproBundle{});
  }

  /// Runs `body`; a library exception counts as a failure.
  void run(const std::function<void()>& body, const std::function<ReproBundle()>& bundle = {}) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(e.what(), bundle ? bundle() : ReproBundle{});
    }
  }

  Claim finish(const std::string& extra = {}) {
    std::ostringstream d;
    d << "checked=" << checked_;
    if (!claim_.pass) d << " failures=" << failures_ << " first=\"" << first_ << "\"";
    if (!extra.empty()) d << ' ' << extra;
    claim_.details = d.str();
    return std::move(claim_);
  }

 private:
  Claim claim_;
  std::size_t checked_ = 0, failures_ = 0;
  std::string first_;
};

inline ReproBundle code_bundle(const LinearCode& c, const std::string& verb) {
  return {"lcdg " + verb + " instance.code", {{"instance.code", code_text(c)}}};
}

inline ReproBundle graph_bundle(const SimpleGraph& g, const std::string& verb) {
  return {"lcdg " + verb + " instance.graph", {{"instance.graph", graph_text(g)}}};
}

// C ∩ C^⊥ = {0} checked codeword by codeword.
inline bool lcd_by_enumeration(const LinearCode& c) {
  const auto& f = c.field();
  for (const auto& w : all_codewords(c)) {
    bool zero = true, orthogonal = true;
    for (auto x : w) zero = zero && x == 0;
    if (zero) continue;
    for (std::size_t r = 0; r < c.dimension() && orthogonal; ++r) {
      Element dot = 0;
      for (std::size_t j = 0; j < c.length(); ++j) dot = f.add(dot, f.mul(w[j], c.generator()(r, j)));
      orthogonal = dot == 0;
    }
    if (orthogonal) return false;
  }
  return true;
}

inline bool distances_at_least_two(const LinearCode& c) {
  if (c.dimension() == 0 || c.dimension() == c.length()) return false;
  return min_weight(c, kDefaultEnumerationBudget, 1) >= 2 && min_weight(dual(c), kDefaultEnumerationBudget, 1) >= 2;
}

inline LinearCode sample_lcd(const FiniteField& f, std::size_t n_max, Rng& rng) {
  for (;;) {
    const std::size_t n = rng.between(2, n_max);
    auto c = random_code(f, n, rng.between(1, n), rng);
    if (c.dimension() > 0 && is_lcd(c)) return c;
  }
}

inline LinearCode sample_dichotomy_code(std::size_t n_max, bool even, Rng& rng) {
  for (;;) {
    const std::size_t n = rng.between(3, n_max);
    const std::size_t k = rng.between(1, n - 1);
    auto c = even ? random_even_code(n, k, rng) : random_code(FiniteField(2), n, k, rng);
    if (is_lcd(c) && distances_at_least_two(c)) return c;
  }
}

inline Element dot(const FiniteField& f, const Vector& a, const Vector& b) {
  Element s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s = f.add(s, f.mul(a[j], b[j]));
  return s;
}

inline SuiteReport projector_suite(const VerifyOptions& opt) {
  SuiteReport rep{"projector", {}};
  Rng rng(opt.seed);
  ClaimCheck props("projector.symmetric-idempotent-rowspan");
  ClaimCheck routes("projector.lcd-three-routes");
  ClaimCheck zero_diag("projector.zero-diagonal-iff-self-orthogonal-rows");
  ClaimCheck transfer("projector.monomial-transfer");
  for (std::uint32_t p : {2U, 3U}) {
    const FiniteField f(p);
    for (std::size_t i = 0; i < opt.samples; ++i) {
      const std::size_t n = rng.between(1, 10);
      const auto any = random_code(f, n, rng.between(0, n), rng);
      routes.run([&] {
        const bool a = is_lcd(any), b = hull_dimension(any) == 0, c = lcd_by_enumeration(any);
        routes.expect(a == b && b == c, "LCD tests disagree", [&] { return code_bundle(any, "lcd"); });
      });

      const auto c = sample_lcd(f, 14, rng);
      props.run([&] {
        const auto pi = projector(c);
        bool ok = pi.is_symmetric() && pi * pi == pi && LinearCode(pi) == c;
        ok = ok && c.generator() * pi == c.generator();
        props.expect(ok, "projector properties fail", [&] { return code_bundle(c, "projector"); });

        bool diag_zero = true, rows_self_orth = true;
        for (std::size_t r = 0; r < pi.rows(); ++r) {
          diag_zero = diag_zero && pi(r, r) == 0;
          rows_self_orth = rows_self_orth && dot(f, pi.row(r), pi.row(r)) == 0;
        }
        zero_diag.expect(diag_zero == rows_self_orth, "diagonal and row self-orthogonality disagree",
                     [&] { return code_bundle(c, "projector"); });

        const auto mono = random_monomial(f, c.length(), rng);
        const auto nm = mono.to_matrix(f);
        transfer.expect(projector(apply_monomial(c, mono)) == nm.transpose() * pi * nm,
                        "projector(C N) != N^T projector(C) N", [&] { return code_bundle(c, "projector"); });
      }, [&] { return code_bundle(c, "projector"); });
    }
  }
  rep.claims.push_back(props.finish());
  rep.claims.push_back(routes.finish());
  rep.claims.push_back(zero_diag.finish());
  rep.claims.push_back(transfer.finish());
  return rep;
}

inline SuiteReport dichotomy_suite(const VerifyOptions& opt) {
  SuiteReport rep{"dichotomy", {}};
  Rng rng(opt.seed);
  ClaimCheck one("dichotomy.exactly-one-lcd-with-diagonal-rule");
  std::size_t punctured = 0, shortened = 0;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const auto c = sample_dichotomy_code(14, false, rng);
    one.run([&] {
      for (std::size_t j = 0; j < c.length(); ++j)
        (puncture_shorten_dichotomy(c, j) == Dichotomy::punctured_is_lcd ? punctured : shortened)++;
      one.pass();
    }, [&] { return code_bundle(c, "lcd"); });
  }
  rep.claims.push_back(
      one.finish("coordinates=" + std::to_string(punctured + shortened) + " punctured_lcd=" +
                 std::to_string(punctured) + " shortened_lcd=" + std::to_string(shortened)));

  ClaimCheck even("dichotomy.even-code-punctures-are-lcd");
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const auto c = sample_dichotomy_code(14, true, rng);
    even.run([&] {
      bool ok = true;
      for (std::size_t j = 0; j < c.length(); ++j) ok = ok && is_lcd(puncture(c, {j}));
      even.expect(ok, "a puncture of an even LCD code is not LCD", [&] { return code_bundle(c, "lcd"); });
    }, [&] { return code_bundle(c, "lcd"); });
  }
  rep.claims.push_back(even.finish());
  return rep;
}

inline SuiteReport binary_bijection_suite(const VerifyOptions& opt) {
  SuiteReport rep{"binary-bijection", {}};
  Rng rng(opt.seed);

  ClaimCheck graphs("binary.graph-roundtrip-exhaustive-v8");
  std::vector<std::vector<SimpleGraph>> by_order(9);
  for (std::size_t v = 1; v <= 8; ++v) {
    by_order[v] = idempotent_graphs_f2(v);
    for (const auto& g : by_order[v])
      graphs.run([&] {
        const auto c = code_from_graph_f2(g);
        graphs.expect(is_even(c) && is_lcd(c) && graph_from_code_f2(c) == g, "graph does not round-trip",
                      [&] { return graph_bundle(g, "code-from-graph --field 2"); });
      }, [&] { return graph_bundle(g, "code-from-graph --field 2"); });
  }
  rep.claims.push_back(graphs.finish());

  ClaimCheck codes("binary.code-roundtrip-random");
  for (std::size_t i = 0; i < opt.samples; ++i) {
    std::optional<LinearCode> c;
    while (!c) {
      const std::size_t n = rng.between(1, 12);
      auto cand = random_even_code(n, rng.between(1, n), rng);
      if (cand.dimension() > 0 && is_lcd(cand)) c = std::move(cand);
    }
    codes.run([&] {
      codes.expect(code_from_graph_f2(graph_from_code_f2(*c)) == *c, "code does not round-trip",
                   [&] { return code_bundle(*c, "graph-from-code"); });
    }, [&] { return code_bundle(*c, "graph-from-code"); });
  }
  rep.claims.push_back(codes.finish());

  ClaimCheck parity("binary.parity-characterization");
  for (std::size_t v = 1; v <= 6; ++v) {
    const std::size_t pairs = v * (v - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      SimpleGraph g(v);
      std::size_t bit = 0;
      for (std::size_t a = 0; a < v; ++a)
        for (std::size_t b = a + 1; b < v; ++b, ++bit)
          if ((mask >> bit) & 1) g.add_edge(a, b);
      parity.expect(idempotent_mod2_by_matrix(g) == idempotent_mod2_by_parity(g), "tests disagree",
                    [&] { return graph_bundle(g, "code-from-graph --field 2"); });
    }
  }
  for (std::size_t i = 0; i < 4 * opt.samples; ++i) {
    const auto g = random_graph(rng.between(7, 16), rng);
    parity.expect(idempotent_mod2_by_matrix(g) == idempotent_mod2_by_parity(g), "tests disagree",
                  [&] { return graph_bundle(g, "code-from-graph --field 2"); });
  }
  rep.claims.push_back(parity.finish());

  // All ordered-free pairs of labeled graphs; canonical forms are cached.
  ClaimCheck iso("binary.isomorphism-iff-equivalence-v7");
  std::size_t equivalent_pairs = 0;
  for (std::size_t v = 1; v <= 7; ++v) {
    const auto& pool = by_order[v];
    std::vector<SimpleGraph> canon;
    std::vector<LinearCode> pool_codes;
    for (const auto& g : pool) {
      canon.push_back(canonical_form(g).graph);
      pool_codes.push_back(code_from_graph_f2(g));
    }
    for (std::size_t a = 0; a < pool.size(); ++a)
      for (std::size_t b = a; b < pool.size(); ++b)
        iso.run([&] {
          const bool by_graph = canon[a] == canon[b];
          const bool by_codes = equivalent_bruteforce(pool_codes[a], pool_codes[b]).equivalent;
          equivalent_pairs += by_codes;
          iso.expect(by_graph == by_codes, "isomorphism and equivalence disagree", [&] {
            return ReproBundle{"lcdg equiv a.code b.code",
                               {{"a.code", code_text(pool_codes[a])}, {"b.code", code_text(pool_codes[b])}}};
          });
        });
  }
  rep.claims.push_back(iso.finish("equivalent_pairs=" + std::to_string(equivalent_pairs)));
  return rep;
}

inline SuiteReport ternary_bijection_suite(const VerifyOptions& opt) {
  SuiteReport rep{"ternary-bijection", {}};
  Rng rng(opt.seed);
  ClaimCheck codes("ternary.twograph-codes");
  std::vector<std::vector<SimpleGraph>> by_order(8);
  std::size_t found = 0;
  for (std::size_t v = 1; v <= 7; ++v) {
    by_order[v] = pm1_idempotent_graphs_f3(v);
    found += by_order[v].size();
    for (const auto& g : by_order[v])
      codes.run([&] {
        const auto c = code_from_twograph_f3(g);
        const auto pi = projector(c);
        bool diag_zero = true;
        for (std::size_t i = 0; i < pi.rows(); ++i) diag_zero = diag_zero && pi(i, i) == 0;
        codes.expect(is_lcd(c) && c.dimension() % 3 == 0 && diag_zero && twograph_rowweight_check(c),
                     "two-graph code fails LCD, divisibility or diagonal checks",
                     [&] { return graph_bundle(g, "code-from-graph --field 3"); });
      }, [&] { return graph_bundle(g, "code-from-graph --field 3"); });
  }
  rep.claims.push_back(codes.finish("graphs=" + std::to_string(found)));

  ClaimCheck iso("ternary.switching-iff-equivalence");
  for (std::size_t v = 1; v <= 7; ++v) {
    std::vector<SimpleGraph> pool = by_order[v];
    // add switched and relabeled copies so that equivalent pairs are not all trivial
    const std::size_t base = pool.size();
    for (std::size_t i = 0; i < base; ++i)
      pool.push_back(seidel_switch(pool[i], random_subset(v, rng)).relabel(random_permutation(v, rng)));
    std::vector<LinearCode> pool_codes;
    for (const auto& g : pool) pool_codes.push_back(code_from_twograph_f3(g));
    for (std::size_t a = 0; a < pool.size(); ++a)
      for (std::size_t b = a; b < pool.size(); ++b)
        iso.run([&] {
          const bool by_switching = switching_class_iso(pool[a], pool[b]).isomorphic;
          const bool by_codes = equivalent_bruteforce(pool_codes[a], pool_codes[b]).equivalent;
          const bool by_projectors = v < 2 || ternary_equivalence_via_twographs(pool_codes[a], pool_codes[b]);
          iso.expect(by_switching == by_codes && (v < 2 || by_projectors == by_codes),
                     "switching isomorphism and equivalence disagree", [&] {
                       return ReproBundle{"lcdg equiv a.code b.code",
                                          {{"a.code", code_text(pool_codes[a])}, {"b.code", code_text(pool_codes[b])}}};
                     });
        });
  }
  rep.claims.push_back(iso.finish());

  ClaimCheck counter("ternary.counterexample-I3-J3");
  counter.run([&] {
    const FiniteField f3(3);
    const auto c = counterexample_code(3, ExactMatrix::all_ones(f3, 3, 3));
    const auto pi = projector(c);
    counter.expect(is_lcd(c) && c.dimension() % 3 == 0 && !twograph_rowweight_check(c) && pi(0, 0) == 1,
                   "(I3 | J3) should be LCD with 3 | k and fail the two-graph condition");
  });
  rep.claims.push_back(counter.finish());

  ClaimCheck inv("ternary.twograph-switching-invariant");
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const auto g = random_graph(rng.between(1, 9), rng);
    const auto s = random_subset(g.order(), rng);
    const auto h = seidel_switch(g, s);
    inv.expect(twograph_from_graph(h) == twograph_from_graph(g) && seidel_switch(h, s) == g,
               "switching changed the two-graph", [&] { return graph_bundle(g, "twograph"); });
  }
  rep.claims.push_back(inv.finish());
  return rep;
}

struct NamedSrg {
  std::string name;
  SimpleGraph graph;
};

inline std::vector<NamedSrg> builtin_srgs() {
  std::vector<NamedSrg> out{{"pentagon", paley_graph(5)}, {"petersen", petersen_graph()}, {"T5", triangular_graph(5)}};
  for (std::uint32_t q : {9U, 13U, 17U, 25U, 29U, 37U, 41U}) out.push_back({"paley" + std::to_string(q), paley_graph(q)});
  return out;
}

inline std::string bounds_details(const BoundsReport& r) {
  auto opt = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string("none"); };
  std::ostringstream d;
  const auto& s = r.params;
  d << "srg=(" << s.v << ',' << s.k << ',' << s.lambda << ',' << s.mu << ')' << " dimA=" << r.dim_a
    << " dimAI=" << r.dim_ai << " dualA=" << opt(r.dual_minwt_a) << " boundA=" << (r.bound_a ? r.bound_a->str() : "undefined")
    << " dualAI=" << opt(r.dual_minwt_ai) << " boundAI=" << r.bound_ai.str() << " boundAI_min=" << r.bound_ai_min.str();
  if (auto sa = r.slack_a()) d << " slackA=" << *sa;
  if (auto sai = r.slack_ai()) d << " slackAI=" << *sai;
  if (r.parity) d << " parity=" << (*r.parity ? "even" : "odd");
  return d.str();
}

inline SuiteReport bounds_suite(const VerifyOptions&) {
  SuiteReport rep{"bounds", {}};
  for (const auto& [name, g] : builtin_srgs()) {
    ClaimCheck c("bounds." + name);
    std::string details;
    c.run([&] {
      const auto r = verify_bounds(g);
      details = bounds_details(r);
      c.expect(r.ok(), "a lower bound or the dual parity fact fails", [&] { return graph_bundle(g, "bounds"); });
    }, [&] { return graph_bundle(g, "bounds"); });
    rep.claims.push_back(c.finish(details));
  }
  ClaimCheck mono("bounds.monotone-in-k");
  for (std::size_t t = 1; t <= 12; ++t)
    for (std::size_t k = 1; k < 40; ++k) {
      const SrgParams a{100, k, t, t}, b{100, k + 1, t, t};
      mono.expect(bound_dual_minwt_A(a) < bound_dual_minwt_A(b) && bound_dual_minwt_AI(a) < bound_dual_minwt_AI(b),
                  "bound not increasing in k");
    }
  rep.claims.push_back(mono.finish());
  return rep;
}

inline SuiteReport paley_suite(const VerifyOptions&) {
  SuiteReport rep{"paley", {}};
  const std::vector<std::uint32_t> orders{5, 9, 13, 17, 25, 29, 37, 41};

  ClaimCheck params("paley.srg-parameters");
  ClaimCheck pattern("paley.idempotent-iff-1-mod-8");
  ClaimCheck codes("paley.codes-even-lcd");
  ClaimCheck selfc("paley.self-complementary");
  for (auto q : orders) {
    const auto g = paley_graph(q);
    const auto bundle = [&] { return graph_bundle(g, "code-from-graph --field 2"); };
    params.run([&] { params.expect(srg_params(g) == paley_params(q), "wrong parameters", bundle); }, bundle);
    pattern.run([&] { pattern.expect(is_idempotent_mod2(g) == (q % 8 == 1), "idempotency pattern broken", bundle); },
                bundle);
    if (q % 8 == 1)
      codes.run([&] {
        const auto c = code_from_graph_f2(g);
        codes.expect(is_even(c) && is_lcd(c) && projector(c) == adjacency(g, AdjacencyKind::zero_one, FiniteField(2)),
                     "code not even LCD with projector A", bundle);
      }, bundle);
    selfc.run([&] { selfc.expect(is_isomorphic(g, g.complement()).isomorphic, "not self-complementary", bundle); },
              bundle);
  }
  rep.claims.push_back(params.finish());
  rep.claims.push_back(pattern.finish());
  rep.claims.push_back(codes.finish());
  rep.claims.push_back(selfc.finish());

  ClaimCheck p41("paley.41-code-parameters");
  std::string p41_details;
  p41.run([&] {
    const auto g = paley_graph(41);
    const auto c = code_from_graph_f2(g);
    const auto d = min_weight(c);
    p41_details = "[41," + std::to_string(c.dimension()) + "," + std::to_string(d) +
                  "] griesmer_max_d=" + std::to_string(griesmer_max_d(41, 20, 2));
    p41.expect(c.length() == 41 && c.dimension() == 20 && d == 10 && is_even(c) && is_lcd(c),
               "expected an even LCD [41,20,10] code", [&] { return graph_bundle(g, "code-from-graph --field 2 --minweight"); });
  });
  rep.claims.push_back(p41.finish(p41_details));

  ClaimCheck p25("paley.25-dimension");
  std::string p25_details;
  p25.run([&] {
    const auto c = code_from_graph_f2(paley_graph(25));
    p25_details = "dim=" + std::to_string(c.dimension());
    p25.expect(c.dimension() == 12, "expected dimension 12");
  });
  rep.claims.push_back(p25.finish(p25_details));
  return rep;
}

}  // namespace detail

/// Runs one named suite. Throws BadInput for an unknown name.
inline SuiteReport verify_suite(std::string_view name, const VerifyOptions& opt = {}) {
  if (name == "projector") return detail::projector_suite(opt);
  if (name == "dichotomy") return detail::dichotomy_suite(opt);
  if (name == "binary-bijection") return detail::binary_bijection_suite(opt);
  if (name == "ternary-bijection") return detail::ternary_bijection_suite(opt);
  if (name == "bounds") return detail::bounds_suite(opt);
  if (name == "paley") return detail::paley_suite(opt);
  fail(Errc::bad_input, "unknown suite '" + std::string(name) + "'");
}

inline std::string format_claim(const Claim& c) {
  return "CLAIM " + c.id + (c.pass ? " PASS " : " FAIL ") + c.details;
}

}  // namespace lcdg

#endif  // LCDGRAPH_VERIFY_HPP
