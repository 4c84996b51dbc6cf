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

#ifndef LCDGRAPH_PALEY_HPP
#define LCDGRAPH_PALEY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lcdgraph/error.hpp"
#include "lcdgraph/field.hpp"
#include "lcdgraph/graph.hpp"

namespace lcdg {

/// Paley graph on F_q: vertices are the canonical elements 0..q-1 and x ~ y
/// iff x - y is a nonzero square. Needs q = 1 mod 4 so that -1 is a square
/// and adjacency is symmetric.
inline SimpleGraph paley_graph(const FiniteField& f) {
  const std::uint32_t q = f.order();
  if (q % 4 != 1) fail(Errc::not_paley_order, "q = " + std::to_string(q) + " is not 1 mod 4");
  std::vector<bool> square(q, false);
  for (Element x = 1; x < q; ++x) square[f.mul(x, x)] = true;
  SimpleGraph g(q);
  for (Element x = 0; x < q; ++x)
    for (Element y = x + 1; y < q; ++y)
      if (square[f.sub(x, y)]) g.add_edge(x, y);
  return g;
}

inline SimpleGraph paley_graph(std::uint32_t q) {
  if (q % 4 != 1) fail(Errc::not_paley_order, "q = " + std::to_string(q) + " is not 1 mod 4");
  return paley_graph(FiniteField::of_order(q));
}

/// srg(q, (q-1)/2, (q-5)/4, (q-1)/4)
inline SrgParams paley_params(std::uint32_t q) { return {q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4}; }

}  // namespace lcdg

#endif  // LCDGRAPH_PALEY_HPP
