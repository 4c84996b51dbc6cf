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

#ifndef LCDGRAPH_IO_HPP
#define LCDGRAPH_IO_HPP

// Flat text formats:
//   EXMAT v1  "rows cols p k", then rows lines of canonical integers
//   CODE v1   "n k p", then k generator rows as digit strings
//   GRAPH v1  "v m", then m lines "u v" with 0-indexed endpoints, u < v
//   TG v1     "v t", then t lines "a b c" ascending
// Readers skip blank lines and lines starting with '#'.

#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lcdgraph/code.hpp"
#include "lcdgraph/error.hpp"
#include "lcdgraph/field.hpp"
#include "lcdgraph/graph.hpp"
#include "lcdgraph/matrix.hpp"
#include "lcdgraph/two_graph.hpp"

namespace lcdg {

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next significant line split into tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ss(line);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return true;
    }
    return false;
  }

  std::vector<std::string> expect(const char* what) {
    std::vector<std::string> t;
    if (!next(t)) error(std::string("unexpected end of input, expected ") + what);
    return t;
  }

  void expect_end() {
    std::vector<std::string> t;
    if (next(t)) error("unexpected trailing content");
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::parse_error, "line " + std::to_string(number_) + ": " + msg);
  }

  std::size_t number(const std::string& token) const {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(token, &pos);
    } catch (const std::exception&) {
      error("'" + token + "' is not a nonnegative integer");
    }
    if (pos != token.size() || token.front() == '-') error("'" + token + "' is not a nonnegative integer");
    return static_cast<std::size_t>(v);
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

inline FiniteField field_from_header(std::size_t p, std::size_t k, const LineReader& r) {
  try {
    if (k == 1) return FiniteField(static_cast<std::uint32_t>(p));
    if (k == 2) return FiniteField(static_cast<std::uint32_t>(p), FiniteField::default_quadratic(static_cast<std::uint32_t>(p)));
  } catch (const Error& e) {
    r.error(e.message());
  }
  r.error("extension degree " + std::to_string(k) + " is not supported");
}

inline ExactMatrix read_exmat_body(LineReader& r, const std::vector<std::string>& header) {
  const std::size_t rows = r.number(header[0]), cols = r.number(header[1]);
  const auto f = field_from_header(r.number(header[2]), r.number(header[3]), r);
  ExactMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto t = r.expect("a matrix row");
    if (t.size() != cols)
      r.error("row has " + std::to_string(t.size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t x = r.number(t[j]);
      if (x >= f.order()) r.error("entry " + t[j] + " is not canonical in " + f.name());
      m.set(i, j, static_cast<Element>(x));
    }
  }
  r.expect_end();
  return m;
}

}  // namespace detail

inline void write_exmat(std::ostream& out, const ExactMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.field().characteristic() << ' ' << m.field().degree() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

inline ExactMatrix read_exmat(std::istream& in) {
  detail::LineReader r(in);
  const auto header = r.expect("header 'rows cols p k'");
  if (header.size() != 4) r.error("header must be 'rows cols p k'");
  return detail::read_exmat_body(r, header);
}

inline void write_code(std::ostream& out, const LinearCode& c) {
  out << c.length() << ' ' << c.dimension() << ' ' << c.field().characteristic() << '\n';
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    for (std::size_t j = 0; j < c.length(); ++j) out << c.generator()(i, j);
    out << '\n';
  }
}

inline LinearCode read_code(std::istream& in) {
  detail::LineReader r(in);
  const auto header = r.expect("header 'n k p'");
  if (header.size() != 3) r.error("header must be 'n k p'");
  const std::size_t n = r.number(header[0]), k = r.number(header[1]), p = r.number(header[2]);
  if (p != 2 && p != 3) r.error("codes must be over F_2 or F_3");
  const FiniteField f(static_cast<std::uint32_t>(p));
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < k; ++i) {
    const auto t = r.expect("a generator row");
    if (t.size() != 1 || t[0].size() != n)
      r.error("generator row must be a single digit string of length " + std::to_string(n));
    Vector row(n);
    for (std::size_t j = 0; j < n; ++j) {
      const char ch = t[0][j];
      if (ch < '0' || static_cast<std::size_t>(ch - '0') >= p) r.error(std::string("bad digit '") + ch + "'");
      row[j] = static_cast<Element>(ch - '0');
    }
    rows.push_back(std::move(row));
  }
  r.expect_end();
  auto c = LinearCode::from_rows(f, n, rows);
  if (c.dimension() != k) fail(Errc::parse_error, "generator rows are linearly dependent (rank " +
                                                      std::to_string(c.dimension()) + " < " + std::to_string(k) + ")");
  return c;
}

inline void write_graph(std::ostream& out, const SimpleGraph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [a, b] : edges) out << a << ' ' << b << '\n';
}

/// Reads GRAPH v1, or an EXMAT v1 symmetric 0/1 matrix with zero diagonal.
inline SimpleGraph read_graph(std::istream& in) {
  detail::LineReader r(in);
  const auto header = r.expect("header 'v m' or 'rows cols p k'");
  if (header.size() == 4) {
    const auto m = detail::read_exmat_body(r, header);
    if (m.rows() != m.cols()) fail(Errc::parse_error, "adjacency matrix must be square");
    IntMatrix a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
    try {
      return SimpleGraph::from_adjacency(a);
    } catch (const Error& e) {
      fail(Errc::parse_error, e.message());
    }
  }
  if (header.size() != 2) r.error("header must be 'v m'");
  const std::size_t v = r.number(header[0]), m = r.number(header[1]);
  SimpleGraph g(v);
  for (std::size_t i = 0; i < m; ++i) {
    const auto t = r.expect("an edge line 'u v'");
    if (t.size() != 2) r.error("edge line must be 'u v'");
    const std::size_t a = r.number(t[0]), b = r.number(t[1]);
    if (b >= v) r.error("endpoint " + t[1] + " outside 0.." + std::to_string(v == 0 ? 0 : v - 1));
    if (a >= b) r.error("edge endpoints must satisfy u < v");
    if (g.adjacent(a, b)) r.error("duplicate edge " + t[0] + " " + t[1]);
    g.add_edge(a, b);
  }
  r.expect_end();
  return g;
}

inline void write_twograph(std::ostream& out, const TwoGraph& t) {
  out << t.v << ' ' << t.delta.size() << '\n';
  for (const auto& tr : t.delta) out << tr[0] << ' ' << tr[1] << ' ' << tr[2] << '\n';
}

inline TwoGraph read_twograph(std::istream& in) {
  detail::LineReader r(in);
  const auto header = r.expect("header 'v t'");
  if (header.size() != 2) r.error("header must be 'v t'");
  TwoGraph t{r.number(header[0]), {}};
  const std::size_t count = r.number(header[1]);
  for (std::size_t i = 0; i < count; ++i) {
    const auto tok = r.expect("a triple 'a b c'");
    if (tok.size() != 3) r.error("triple line must be 'a b c'");
    Triple tr{r.number(tok[0]), r.number(tok[1]), r.number(tok[2])};
    if (!(tr[0] < tr[1] && tr[1] < tr[2])) r.error("triple must be strictly ascending");
    if (tr[2] >= t.v) r.error("vertex " + tok[2] + " out of range");
    t.delta.push_back(tr);
  }
  r.expect_end();
  std::sort(t.delta.begin(), t.delta.end());
  return t;
}

template <class T, class Reader>
T read_file(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_input, "cannot open '" + path + "'");
  try {
    return reader(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message());
  }
}

inline ExactMatrix read_exmat_file(const std::string& path) { return read_file<ExactMatrix>(path, read_exmat); }
inline LinearCode read_code_file(const std::string& path) { return read_file<LinearCode>(path, read_code); }
inline SimpleGraph read_graph_file(const std::string& path) { return read_file<SimpleGraph>(path, read_graph); }
inline TwoGraph read_twograph_file(const std::string& path) { return read_file<TwoGraph>(path, read_twograph); }

}  // namespace lcdg

#endif  // LCDGRAPH_IO_HPP
