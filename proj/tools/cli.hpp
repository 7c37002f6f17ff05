#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gsplit/check.hpp"
#include "gsplit/chordal.hpp"
#include "gsplit/io.hpp"
#include "gsplit/optimize.hpp"
#include "gsplit/oracle.hpp"
#include "gsplit/perfect_code.hpp"
#include "gsplit/recognition.hpp"
#include "gsplit/twosat.hpp"

namespace gsplit::cli {

namespace detail {

inline std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

inline Graph load_graph(const std::string& path) {
  auto in = open(path);
  return io::read_graph(in);
}

inline void write_set_line(std::ostream& out, const VertexSet& s) {
  io::write_vertex_list(out, s);
  out << '\n';
}

// Checks a supplied certificate against the graph it claims to describe.
inline void require_valid(const Graph& g, const GsResult& r) {
  if (!r.split) throw Error("split file is empty");
  const bool ok = r.kind == GsKind::Unipolar ? validate_clique_split(g, *r.split)
                                             : validate_clique_split(complement(g), *r.split);
  if (!ok) throw Error("supplied split does not validate");
}

struct NotInClass {
  std::string message;
};

inline int recognize(std::ostream& out, std::ostream& err, const std::string& path, bool dump) {
  Graph g = load_graph(path);
  RecognitionOptions opts;
  if (dump) opts.on_twosat = [&err](const twosat::Instance& inst) { twosat::write_dimacs(err, inst); };
  GsResult r = generalized_split_test(g, opts);
  if (r.split) require_valid(g, r);
  io::write_gs_result(out, r);
  return r.kind == GsKind::Neither ? 1 : 0;
}

inline int solve(std::ostream& out, const std::string& problem, const std::string& path,
                 const std::string& split_path) {
  static const std::map<std::string, Problem> kProblems{
      {"mis", Problem::Mis}, {"clique", Problem::Clique}, {"cover", Problem::Cover},
      {"coloring", Problem::Coloring}};
  const Problem p = kProblems.at(problem);
  Graph g = load_graph(path);
  GsResult r;
  if (!split_path.empty()) {
    auto in = open(split_path);
    r = io::read_split(in);
    require_valid(g, r);
  } else {
    r = recognize_for(g, p);
  }
  if (r.kind == GsKind::Neither) throw NotInClass{"graph is not generalized split"};

  switch (p) {
    case Problem::Mis: {
      VertexSet s = gs_max_independent_set(g, r);
      if (!is_independent(g, s)) throw Error("internal: witness is not independent");
      out << "mis " << s.size() << '\n';
      write_set_line(out, s);
      break;
    }
    case Problem::Clique: {
      VertexSet s = gs_max_clique(g, r);
      if (!is_clique(g, s)) throw Error("internal: witness is not a clique");
      out << "clique " << s.size() << '\n';
      write_set_line(out, s);
      break;
    }
    case Problem::Cover: {
      CliqueCover c = gs_min_clique_cover(g, r);
      if (!is_clique_cover(g, c)) throw Error("internal: witness is not a clique cover");
      out << "cover " << c.parts.size() << '\n';
      for (std::size_t i = 0; i < c.parts.size(); ++i) {
        out << "part " << i + 1 << ':';
        for (Vertex v : c.parts[i]) out << ' ' << v;
        out << '\n';
      }
      break;
    }
    case Problem::Coloring: {
      Coloring c = gs_min_coloring(g, r);
      if (!is_proper_coloring(g, c)) throw Error("internal: witness is not a proper coloring");
      out << "coloring " << c.palette_size << '\n';
      auto classes = c.classes();
      for (std::size_t i = 0; i < classes.size(); ++i) {
        out << "color " << i + 1 << ':';
        for (Vertex v : classes[i]) out << ' ' << v;
        out << '\n';
      }
      break;
    }
  }
  return 0;
}

inline int perfect_code(std::ostream& out, const std::string& path, const std::string& k_path,
                        int bound) {
  Graph g = load_graph(path);
  std::optional<VertexSet> code;
  if (!k_path.empty()) {
    auto in = open(k_path);
    VertexSet k_side = io::read_vertex_list(in, g.n());
    VertexSet i_side;
    for (Vertex v = 0; v < g.n(); ++v)
      if (!std::binary_search(k_side.begin(), k_side.end(), v)) i_side.push_back(v);
    code = split_graph_perfect_code(g, k_side, i_side);
  } else {
    code = exact_perfect_code(g, bound);
  }
  if (!code) {
    out << "perfect-code none\n";
    return 1;
  }
  if (!is_perfect_code(g, *code)) throw Error("internal: witness is not a perfect code");
  out << "perfect-code " << code->size() << '\n';
  write_set_line(out, *code);
  return 0;
}

inline int reduce(std::ostream& out, const std::string& path, bool bipartite) {
  auto in = open(path);
  Formula f = io::read_formula(in);
  ReductionMap rm = reduce_one_in_three(f, bipartite ? GadgetVariant::Bipartite : GadgetVariant::Unipolar);
  io::write_reduction(out, rm);
  return 0;
}

struct GenArgs {
  std::string model;
  std::uint64_t seed = 1;
  int n = 10;
  double p = 0.5;
  int k = 2;
  double q = 0.5;
  std::string name;
};

inline int gen(std::ostream& out, const GenArgs& a) {
  oracle::GeneratorConfig cfg{a.seed, a.n, a.p, a.k, a.q};
  if (a.model == "gnp") {
    io::write_graph(out, oracle::gen_gnp(cfg));
  } else if (a.model == "unipolar") {
    auto planted = oracle::gen_random_unipolar(cfg);
    io::write_graph(out, planted.graph);
    out << "# planted split:\n# center:";
    for (Vertex v : planted.split.center) out << ' ' << v;
    out << '\n';
    for (std::size_t i = 0; i < planted.split.k(); ++i) {
      out << "# clique " << i + 1 << ':';
      for (Vertex v : planted.split.peripherals[i]) out << ' ' << v;
      out << '\n';
    }
  } else if (a.model == "named") {
    if (a.name.empty()) throw Error("gen named: --name is required");
    io::write_graph(out, oracle::gen_named(a.name));
  } else {
    throw Error("unknown model `" + a.model + "`; known: gnp, unipolar, named");
  }
  return 0;
}

inline int triangulate(std::ostream& out, const std::string& path) {
  Triangulation t = lex_m(load_graph(path));
  if (!is_perfect_elimination_order(t.filled, t.order) || !verify_minimal(t)) {
    throw Error("internal: triangulation failed certification");
  }
  io::write_graph(out, t.filled);
  out << "# fill:\n";
  for (auto [u, v] : t.fill) out << "# " << u << ' ' << v << '\n';
  return 0;
}

}  // namespace detail

/// Runs the command line; returns the process exit code. 0 = success or
/// in class, 1 = not in class / no solution, 2 = bad input or flags.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unipolar and generalized split graph toolkit", "gsplit"};
  app.require_subcommand(1, 1);

  std::string graph_path, split_path, k_path, formula_path, problem, triangulation_path, suite_name;
  bool dump_2sat = false, bipartite = false;
  int bound = kDefaultPerfectCodeBound, budget = 100;
  std::uint64_t check_seed = 1;
  detail::GenArgs gen_args;

  auto* recognize = app.add_subcommand("recognize", "Classify a graph and print a clique-split certificate");
  recognize->add_option("graph", graph_path, "Edge-list file")->required();
  recognize->add_flag("--dump-2sat", dump_2sat, "Write each 2-SAT instance to stderr (DIMACS)");

  auto* solve = app.add_subcommand("solve", "Solve an optimization problem on a generalized split graph");
  solve->add_option("--problem", problem, "mis | clique | cover | coloring")
      ->required()
      ->check(CLI::IsMember({"mis", "clique", "cover", "coloring"}));
  solve->add_option("graph", graph_path, "Edge-list file")->required();
  solve->add_option("--split", split_path, "Clique-split file in `recognize` output format");

  auto* pcode = app.add_subcommand("perfect-code", "Find a perfect code");
  pcode->add_option("graph", graph_path, "Edge-list file")->required();
  pcode->add_option("--split-graph", k_path, "File listing the clique side of a split graph");
  pcode->add_option("--max-n", bound, "Vertex bound for the exact search");

  auto* reduce = app.add_subcommand("reduce", "Build the perfect-code gadget for a One-in-Three 3SAT formula");
  reduce->add_option("formula", formula_path, "Formula file")->required();
  reduce->add_flag("--bipartite", bipartite, "Keep clause vertices independent");

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("model", gen_args.model, "gnp | unipolar | named")->required();
  gen->add_option("--seed", gen_args.seed, "Generator seed");
  gen->add_option("--n", gen_args.n, "Vertex count");
  gen->add_option("--p", gen_args.p, "Edge probability (gnp)");
  gen->add_option("--k", gen_args.k, "Peripheral count (unipolar)");
  gen->add_option("--q", gen_args.q, "Center-peripheral edge probability (unipolar)");
  gen->add_option("--name", gen_args.name, "Instance name (named)");

  auto* check = app.add_subcommand("check", "Cross-check algorithms against brute-force oracles");
  check->add_option("--suite", suite_name, "recognition | optimize | perfect-code")
      ->check(CLI::IsMember({"recognition", "optimize", "perfect-code"}));
  check->add_option("--budget", budget, "Number of instances")->check(CLI::NonNegativeNumber);
  check->add_option("--seed", check_seed, "Base seed");
  check->add_option("--triangulation", triangulation_path,
                    "Instead of a suite, print the LEX M triangulation of this graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "gsplit: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*recognize) return detail::recognize(out, err, graph_path, dump_2sat);
    if (*solve) return detail::solve(out, problem, graph_path, split_path);
    if (*pcode) return detail::perfect_code(out, graph_path, k_path, bound);
    if (*reduce) return detail::reduce(out, formula_path, bipartite);
    if (*gen) return detail::gen(out, gen_args);
    if (*check) {
      if (!triangulation_path.empty()) return detail::triangulate(out, triangulation_path);
      if (suite_name.empty()) throw Error("check: --suite or --triangulation is required");
      const auto suite = suite_name == "recognition" ? check::Suite::Recognition
                         : suite_name == "optimize"  ? check::Suite::Optimize
                                                     : check::Suite::PerfectCode;
      return check::run(out, suite, check_seed, budget).mismatches == 0 ? 0 : 1;
    }
  } catch (const detail::NotInClass& e) {
    err << "gsplit: " << e.message << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "gsplit: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace gsplit::cli
