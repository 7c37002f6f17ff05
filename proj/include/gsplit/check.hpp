#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

#include "gsplit/io.hpp"
#include "gsplit/optimize.hpp"
#include "gsplit/oracle.hpp"
#include "gsplit/perfect_code.hpp"
#include "gsplit/recognition.hpp"

/// Seeded oracle-versus-algorithm sweeps behind `gsplit check`. Reports are
/// plain text and depend only on (suite, seed, budget).
namespace gsplit::check {

enum class Suite { Recognition, Optimize, PerfectCode };

inline const char* to_string(Suite s) {
  switch (s) {
    case Suite::Recognition: return "recognition";
    case Suite::Optimize: return "optimize";
    case Suite::PerfectCode: return "perfect-code";
  }
  return "";
}

struct Summary {
  int checked = 0;
  int mismatches = 0;
};

namespace detail {

class Reporter {
 public:
  explicit Reporter(std::ostream& out) : out_(out) {}

  void mismatch(int instance, const std::string& what, const Graph& g) {
    ++summary.mismatches;
    out_ << "MISMATCH instance " << instance << ": " << what << '\n';
    std::istringstream lines(io::graph_to_string(g));
    for (std::string line; std::getline(lines, line);) out_ << "  " << line << '\n';
  }

  void mismatch(int instance, const std::string& what, const Formula& f) {
    ++summary.mismatches;
    out_ << "MISMATCH instance " << instance << ": " << what << '\n';
    std::ostringstream text;
    io::write_formula(text, f);
    std::istringstream lines(text.str());
    for (std::string line; std::getline(lines, line);) out_ << "  " << line << '\n';
  }

  Summary summary;

 private:
  std::ostream& out_;
};

inline std::uint64_t instance_seed(std::uint64_t seed, int i) {
  return seed * 1000003ull + static_cast<std::uint64_t>(i);
}

inline void recognition(Reporter& rep, std::uint64_t seed, int budget) {
  static constexpr double kDensities[] = {0.2, 0.5, 0.8};
  for (int i = 0; i < budget; ++i) {
    oracle::GeneratorConfig cfg;
    cfg.seed = instance_seed(seed, i);
    cfg.n = 6 + i % 5;
    cfg.p = kDensities[(i / 5) % 3];
    Graph g = oracle::gen_gnp(cfg);
    auto fast = unipolar_test(g);
    auto slow = oracle::brute_unipolar(g);
    ++rep.summary.checked;
    if (fast.has_value() != slow.has_value()) {
      rep.mismatch(i, fast ? "unipolar_test yes, oracle no" : "unipolar_test no, oracle yes", g);
    } else if (fast && !validate_clique_split(g, *fast)) {
      rep.mismatch(i, "split does not validate", g);
    }
  }
}

inline void optimize(Reporter& rep, std::uint64_t seed, int budget) {
  for (int i = 0; i < budget; ++i) {
    oracle::Rng rng(instance_seed(seed, i));
    oracle::GeneratorConfig cfg;
    cfg.seed = rng.next();
    cfg.n = 1 + static_cast<int>(rng.below(12));
    cfg.k = static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.n) + 1));
    cfg.q = rng.unit();
    auto planted = oracle::gen_random_unipolar(cfg);
    // Odd instances are complemented to exercise the co-unipolar paths.
    Graph g = i % 2 ? complement(planted.graph) : planted.graph;
    GsResult r = generalized_split_test(g);
    ++rep.summary.checked;
    if (r.kind == GsKind::Neither) {
      rep.mismatch(i, "planted instance not recognized", g);
      continue;
    }
    VertexSet mis = gs_max_independent_set(g, r);
    VertexSet clique = gs_max_clique(g, r);
    CliqueCover cover = gs_min_clique_cover(g, r);
    Coloring coloring = gs_min_coloring(g, r);
    const int alpha = oracle::brute_alpha(g), omega = oracle::brute_omega(g);
    const int chi = oracle::brute_chi(g), theta = oracle::brute_theta(g);
    if (!is_independent(g, mis) || static_cast<int>(mis.size()) != alpha)
      rep.mismatch(i, "independent set", g);
    if (!is_clique(g, clique) || static_cast<int>(clique.size()) != omega)
      rep.mismatch(i, "clique", g);
    if (!is_clique_cover(g, cover) || static_cast<int>(cover.parts.size()) != theta)
      rep.mismatch(i, "clique cover", g);
    if (!is_proper_coloring(g, coloring) || coloring.palette_size != chi)
      rep.mismatch(i, "coloring", g);
  }
}

inline void perfect_code(Reporter& rep, std::uint64_t seed, int budget) {
  for (int i = 0; i < budget; ++i) {
    Formula f = oracle::gen_random_formula(instance_seed(seed, i), 6, 6);
    const bool satisfiable = oracle::brute_one_in_three(f).has_value();
    ++rep.summary.checked;
    for (auto variant : {GadgetVariant::Unipolar, GadgetVariant::Bipartite}) {
      ReductionMap rm = reduce_one_in_three(f, variant);
      auto code = exact_perfect_code(rm.graph);
      if (code.has_value() != satisfiable) {
        rep.mismatch(i, variant == GadgetVariant::Unipolar ? "unipolar gadget" : "bipartite gadget", f);
      } else if (code && !one_in_three(f, extract_assignment(rm, *code))) {
        rep.mismatch(i, "extracted assignment", f);
      }
    }
    oracle::GeneratorConfig cfg;
    cfg.seed = instance_seed(seed, i) ^ 0x5bd1e995ull;
    cfg.n = 1 + i % 14;
    cfg.p = 0.3;
    auto split = oracle::gen_random_split(cfg);
    auto fast = split_graph_perfect_code(split.graph, split.k_side, split.i_side);
    auto slow = oracle::brute_perfect_codes(split.graph);
    if (fast.has_value() == slow.empty()) rep.mismatch(i, "split-graph perfect code", split.graph);
  }
}

}  // namespace detail

/// Runs one suite, writing mismatch details and a closing summary line.
inline Summary run(std::ostream& out, Suite suite, std::uint64_t seed, int budget) {
  detail::Reporter rep(out);
  out << "suite " << to_string(suite) << " seed " << seed << " budget " << budget << '\n';
  switch (suite) {
    case Suite::Recognition: detail::recognition(rep, seed, budget); break;
    case Suite::Optimize: detail::optimize(rep, seed, budget); break;
    case Suite::PerfectCode: detail::perfect_code(rep, seed, budget); break;
  }
  out << "summary: " << rep.summary.checked << " checked, " << rep.summary.mismatches
      << " mismatches\n";
  return rep.summary;
}

}  // namespace gsplit::check
