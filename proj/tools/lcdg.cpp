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

// lcdg: command-line front end for the lcdgraph headers.
//
// Exit status: 0 on success, 1 when a check or a library precondition
// fails, 2 on usage and parse errors.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lcdgraph.hpp"

namespace {

using namespace lcdg;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::uint32_t field = 2;
  std::string out;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) fail(Errc::bad_input, "cannot write '" + o.out + "'");
  f << text;
}

template <class T, class Writer>
std::string render(const T& value, Writer writer) {
  std::ostringstream s;
  writer(s, value);
  return s.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string parameters(const LinearCode& c, std::optional<std::size_t> d) {
  std::string s = "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension());
  if (d) s += "," + std::to_string(*d);
  return s + "]";
}

// 1-indexed coordinate list to 0-indexed.
std::vector<std::size_t> zero_based(const std::vector<std::size_t>& coords) {
  std::vector<std::size_t> out;
  for (auto c : coords) {
    if (c == 0) fail(Errc::bad_input, "coordinates are 1-indexed");
    out.push_back(c - 1);
  }
  return out;
}

// Reads a graph, or an EXMAT matrix read as integers, for p-rank.
IntMatrix integer_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_input, "cannot open '" + path + "'");
  std::string first;
  while (std::getline(in, first)) {
    std::istringstream ls(first);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    std::size_t count = 1;
    while (ls >> tok) ++count;
    if (count == 2) return adjacency(read_graph_file(path));
    break;
  }
  const auto m = read_exmat_file(path);
  IntMatrix a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
  return a;
}

void write_bundle(const std::string& dir, const Claim& c) {
  namespace fs = std::filesystem;
  const fs::path base = fs::path(dir) / c.id;
  fs::create_directories(base);
  std::ofstream(base / "command.txt") << c.repro->command << '\n';
  for (const auto& [name, contents] : c.repro->files) std::ofstream(base / name) << contents;
  std::ofstream(base / "claim.txt") << format_claim(c) << '\n';
}

int run_verify(const Options& o, const std::string& which, const std::string& bundle_dir) {
  std::vector<std::string> names;
  if (which == "paper" || which == "all")
    names = suite_names();
  else
    names = {which};
  for (const auto& n : names) {
    const auto known = suite_names();
    if (std::find(known.begin(), known.end(), n) == known.end())
      fail(Errc::bad_input, "unknown suite '" + n + "'");
  }
  VerifyOptions vo;
  vo.seed = o.seed;

  std::vector<SuiteReport> reports(names.size());
  if (o.jobs <= 1) {
    for (std::size_t i = 0; i < names.size(); ++i) reports[i] = verify_suite(names[i], vo);
  } else {
    std::size_t next = 0;
    while (next < names.size()) {
      std::vector<std::future<SuiteReport>> batch;
      const std::size_t start = next;
      for (; next < names.size() && next - start < o.jobs; ++next)
        batch.push_back(std::async(std::launch::async, [&, i = next] { return verify_suite(names[i], vo); }));
      for (std::size_t i = 0; i < batch.size(); ++i) reports[start + i] = batch[i].get();
    }
  }

  std::ostringstream s;
  std::size_t passed = 0, total = 0;
  for (const auto& r : reports)
    for (const auto& c : r.claims) {
      s << format_claim(c) << '\n';
      ++total;
      if (c.pass)
        ++passed;
      else if (c.repro && !bundle_dir.empty())
        write_bundle(bundle_dir, c);
    }
  s << "SUMMARY " << passed << '/' << total << " claims passed\n";
  emit(o, s.str());
  return passed == total ? kOk : kCheckFailed;
}

int run_bounds(const Options& o, const std::vector<std::string>& args) {
  std::ostringstream s;
  if (args.size() == 4) {
    SrgParams p;
    std::size_t* slots[] = {&p.v, &p.k, &p.lambda, &p.mu};
    for (std::size_t i = 0; i < 4; ++i) {
      try {
        std::size_t used = 0;
        *slots[i] = std::stoul(args[i], &used);
        if (used != args[i].size()) throw std::invalid_argument(args[i]);
      } catch (const std::logic_error&) {
        fail(Errc::bad_input, "'" + args[i] + "' is not a nonnegative integer");
      }
    }
    if (!p.feasible()) fail(Errc::bad_input, "parameters violate k(k-lambda-1) = (v-k-1)mu");
    for (auto choice : {TChoice::max, TChoice::min}) {
      const char* tag = choice == TChoice::max ? "max" : "min";
      s << "t_" << tag << '=' << pick_t(p, choice) << " boundA_" << tag << '=';
      if (pick_t(p, choice) == 0)
        s << "undefined";
      else
        s << bound_dual_minwt_A(p, choice).str() << " ceil=" << bound_dual_minwt_A(p, choice).ceil();
      s << " boundAI_" << tag << '=' << bound_dual_minwt_AI(p, choice).str()
        << " ceil=" << bound_dual_minwt_AI(p, choice).ceil() << '\n';
    }
    emit(o, s.str());
    return kOk;
  }
  if (args.size() != 1) fail(Errc::bad_input, "bounds takes 'v k lambda mu' or one graph file");
  const auto r = verify_bounds(read_graph_file(args[0]), o.budget);
  s << detail::bounds_details(r) << " holds=" << yes_no(r.ok()) << '\n';
  emit(o, s.str());
  return r.ok() ? kOk : kCheckFailed;
}

int run_iso(const Options& o, const std::vector<std::string>& files) {
  std::vector<SimpleGraph> graphs;
  for (const auto& f : files) graphs.push_back(read_graph_file(f));
  std::ostringstream s;
  if (graphs.size() == 2) {
    const auto r = is_isomorphic(graphs[0], graphs[1]);
    s << "isomorphic=" << yes_no(r.isomorphic);
    if (r.isomorphic) {
      s << " map=";
      for (std::size_t i = 0; i < r.witness.size(); ++i) s << (i ? "," : "") << r.witness[i];
    }
    s << '\n';
    emit(o, s.str());
    return kOk;
  }
  // Class labels in first-seen order, keyed by canonical form.
  std::vector<SimpleGraph> reps;
  std::vector<std::size_t> label;
  for (const auto& g : graphs) {
    const auto c = canonical_form(g).graph;
    std::size_t i = 0;
    while (i < reps.size() && !(reps[i] == c)) ++i;
    if (i == reps.size()) reps.push_back(c);
    label.push_back(i);
  }
  s << "classes=" << reps.size() << " graphs=" << graphs.size() << '\n';
  for (std::size_t i = 0; i < files.size(); ++i) s << files[i] << ' ' << label[i] << '\n';
  emit(o, s.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for LCD codes, graphs and two-graphs"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* cmd, bool with_field) {
    cmd->add_option("--out", o.out, "Write the result to FILE");
    cmd->add_option("--budget", o.budget, "Maximum number of codewords to enumerate");
    if (with_field) cmd->add_option("--field", o.field, "Field order")->check(CLI::IsMember({2, 3}));
  };

  std::function<int()> action;
  std::string file, file2;
  std::vector<std::string> files;
  std::vector<std::size_t> coords;
  std::uint32_t q = 0, p = 2;
  bool want_minweight = false;

  auto* paley = app.add_subcommand("paley", "Paley graph of order q (q = 1 mod 4)");
  paley->add_option("q", q)->required();
  common(paley, false);
  paley->callback([&] { action = [&] { emit(o, render(paley_graph(q), write_graph)); return kOk; }; });

  auto* cfg = app.add_subcommand("code-from-graph", "Code spanned by an idempotent adjacency matrix");
  cfg->add_option("graph", file)->required();
  cfg->add_flag("--minweight", want_minweight, "Also compute the minimum weight");
  common(cfg, true);
  cfg->callback([&] {
    action = [&] {
      const auto g = read_graph_file(file);
      if (o.field == 2) {
        const auto c = code_from_graph_f2(g);
        if (!o.out.empty()) emit(o, render(c, write_code));
        std::optional<std::size_t> d;
        if (want_minweight) d = min_weight(c, o.budget);
        std::cout << parameters(c, d) << " even=" << yes_no(is_even(c)) << " lcd=" << yes_no(is_lcd(c)) << '\n';
      } else {
        const auto c = code_from_twograph_f3(g);
        if (!o.out.empty()) emit(o, render(c, write_code));
        std::optional<std::size_t> d;
        if (want_minweight && c.dimension() > 0) d = min_weight(c, o.budget);
        std::cout << parameters(c, d) << " lcd=" << yes_no(is_lcd(c))
                  << " twograph=" << yes_no(twograph_rowweight_check(c)) << '\n';
      }
      return kOk;
    };
  });

  auto* gfc = app.add_subcommand("graph-from-code", "Graph whose adjacency matrix is the projector");
  gfc->add_option("code", file)->required();
  common(gfc, false);
  gfc->callback([&] {
    action = [&] {
      const auto c = read_code_file(file);
      const auto g = c.field().is_binary() ? graph_from_code_f2(c) : twograph_graph_from_code_f3(c);
      emit(o, render(g, write_graph));
      return kOk;
    };
  });

  auto* mw = app.add_subcommand("minweight", "Minimum weight by exhaustive enumeration");
  mw->add_option("code", file)->required();
  common(mw, false);
  mw->callback([&] {
    action = [&] { emit(o, std::to_string(min_weight(read_code_file(file), o.budget)) + "\n"); return kOk; };
  });

  auto* wd = app.add_subcommand("weightdist", "Weight distribution as CSV");
  wd->add_option("code", file)->required();
  common(wd, false);
  wd->callback([&] {
    action = [&] {
      const auto w = weight_distribution(read_code_file(file), o.budget);
      std::ostringstream s;
      s << "weight,count\n";
      for (std::size_t i = 0; i < w.counts.size(); ++i) s << i << ',' << w.counts[i] << '\n';
      emit(o, s.str());
      return kOk;
    };
  });

  auto* du = app.add_subcommand("dual", "Dual code");
  du->add_option("code", file)->required();
  common(du, false);
  du->callback([&] { action = [&] { emit(o, render(dual(read_code_file(file)), write_code)); return kOk; }; });

  auto* lcd = app.add_subcommand("lcd", "Decide whether a code is LCD");
  lcd->add_option("code", file)->required();
  common(lcd, false);
  lcd->callback([&] {
    action = [&] {
      const auto c = read_code_file(file);
      emit(o, "lcd=" + yes_no(is_lcd(c)) + " hull=" + std::to_string(hull_dimension(c)) + "\n");
      return kOk;
    };
  });

  auto* proj = app.add_subcommand("projector", "Orthogonal projector of an LCD code");
  proj->add_option("code", file)->required();
  common(proj, false);
  proj->callback([&] { action = [&] { emit(o, render(projector(read_code_file(file)), write_exmat)); return kOk; }; });

  auto* pun = app.add_subcommand("puncture", "Delete coordinates");
  auto* sho = app.add_subcommand("shorten", "Keep codewords vanishing on coordinates, then delete them");
  for (auto* cmd : {pun, sho}) {
    cmd->add_option("code", file)->required();
    cmd->add_option("--coords", coords, "1-indexed coordinates")->required()->delimiter(',');
    common(cmd, false);
  }
  pun->callback([&] {
    action = [&] { emit(o, render(puncture(read_code_file(file), zero_based(coords)), write_code)); return kOk; };
  });
  sho->callback([&] {
    action = [&] { emit(o, render(shorten(read_code_file(file), zero_based(coords)), write_code)); return kOk; };
  });

  auto* eq = app.add_subcommand("equiv", "Monomial equivalence by exhaustive search");
  eq->add_option("a", file)->required();
  eq->add_option("b", file2)->required();
  common(eq, false);
  eq->callback([&] {
    action = [&] {
      const auto r = equivalent_bruteforce(read_code_file(file), read_code_file(file2));
      std::ostringstream s;
      s << "equivalent=" << yes_no(r.equivalent);
      if (r.witness) {
        s << " perm=";
        for (std::size_t i = 0; i < r.witness->perm.size(); ++i) s << (i ? "," : "") << r.witness->perm[i];
        s << " scale=";
        for (std::size_t i = 0; i < r.witness->scale.size(); ++i) s << (i ? "," : "") << r.witness->scale[i];
      }
      s << '\n';
      emit(o, s.str());
      return kOk;
    };
  });

  auto* iso = app.add_subcommand("iso", "Isomorphism test, or classes for three or more graphs");
  iso->add_option("graphs", files)->required()->expected(2, -1);
  common(iso, false);
  iso->callback([&] { action = [&] { return run_iso(o, files); }; });

  auto* tg = app.add_subcommand("twograph", "Two-graph of a graph");
  tg->add_option("graph", file)->required();
  common(tg, false);
  tg->callback([&] { action = [&] { emit(o, render(twograph_from_graph(read_graph_file(file)), write_twograph)); return kOk; }; });

  std::vector<std::size_t> subset;
  auto* sw = app.add_subcommand("switch", "Seidel switching with respect to a vertex set");
  sw->add_option("graph", file)->required();
  sw->add_option("--set", subset, "0-indexed vertices")->delimiter(',');
  common(sw, false);
  sw->callback([&] { action = [&] { emit(o, render(seidel_switch(read_graph_file(file), subset), write_graph)); return kOk; }; });

  std::vector<std::string> bound_args;
  auto* bo = app.add_subcommand("bounds", "Dual minimum weight bounds for a strongly regular graph");
  bo->add_option("args", bound_args, "v k lambda mu, or a graph file")->required()->expected(1, 4);
  common(bo, false);
  bo->callback([&] { action = [&] { return run_bounds(o, bound_args); }; });

  auto* pr = app.add_subcommand("prank", "Rank of an integer matrix modulo p");
  pr->add_option("matrix", file)->required();
  pr->add_option("--p", p, "Prime modulus");
  common(pr, false);
  pr->callback([&] { action = [&] { emit(o, std::to_string(p_rank(integer_matrix(file), p)) + "\n"); return kOk; }; });

  std::string suite, bundle_dir = "lcdg-repro";
  auto* ve = app.add_subcommand("verify", "Run verification suites ('paper' runs all)");
  ve->add_option("suite", suite)->required();
  ve->add_option("--seed", o.seed);
  ve->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  ve->add_option("--bundle-dir", bundle_dir, "Where failing instances are written");
  common(ve, false);
  ve->callback([&] { action = [&] { return run_verify(o, suite, bundle_dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "lcdg: " << e.what() << '\n';
    return e.code() == Errc::parse_error || e.code() == Errc::bad_input ? kUsage : kCheckFailed;
  }
}
