#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <vector>

#include "gsplit/graph.hpp"
#include "gsplit/io.hpp"
#include "gsplit/recognition.hpp"

namespace gsplit {

/// True iff d is independent and every vertex outside d has exactly one
/// neighbor in d.
inline bool is_perfect_code(const Graph& g, std::span<const Vertex> d) {
  check_members(g, d);
  std::vector<int> hits(g.n(), 0);
  std::vector<char> in_code(g.n(), 0);
  for (Vertex v : d) {
    if (in_code[v]) return false;
    in_code[v] = 1;
    for (Vertex w : g.neighbors(v)) ++hits[w];
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (hits[v] != (in_code[v] ? 0 : 1)) return false;
  return true;
}

inline constexpr int kDefaultPerfectCodeBound = 24;

/// Exact perfect-code search. Repeatedly takes the first undominated vertex
/// in (degree, index) order and branches on which member of its closed
/// neighborhood enters the code; a candidate is admissible only if its
/// whole closed neighborhood is still undominated.
inline std::optional<VertexSet> exact_perfect_code(const Graph& g, int bound = kDefaultPerfectCodeBound) {
  if (g.n() > bound) {
    throw Error("exact_perfect_code: n=" + std::to_string(g.n()) + " exceeds bound " +
                std::to_string(bound));
  }
  const int n = g.n();
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<char> dominated(n, 0);
  VertexSet code;

  auto closed = [&](Vertex v) {
    std::vector<Vertex> out{v};
    out.insert(out.end(), g.neighbors(v).begin(), g.neighbors(v).end());
    return out;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t from) -> bool {
    while (from < order.size() && dominated[order[from]]) ++from;
    if (from == order.size()) return true;
    auto choices = closed(order[from]);
    std::sort(choices.begin(), choices.end());
    for (Vertex c : choices) {
      auto ball = closed(c);
      if (std::any_of(ball.begin(), ball.end(), [&](Vertex w) { return dominated[w]; })) continue;
      for (Vertex w : ball) dominated[w] = 1;
      code.push_back(c);
      if (search(from + 1)) return true;
      code.pop_back();
      for (Vertex w : ball) dominated[w] = 0;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  VertexSet out = make_vertex_set(code);
  if (!is_perfect_code(g, out)) throw Error("exact_perfect_code: internal consistency failure");
  return out;
}

/// Polynomial perfect-code decision on a split graph with clique k_side and
/// independent set i_side. Either the code holds one clique vertex x, which
/// must be adjacent to every non-isolated independent vertex, together with
/// the isolated ones; or it is the whole independent side and the
/// independent vertices' neighborhoods partition the clique.
inline std::optional<VertexSet> split_graph_perfect_code(const Graph& g, const VertexSet& k_side,
                                                         const VertexSet& i_side) {
  check_members(g, k_side);
  check_members(g, i_side);
  VertexSet ks = make_vertex_set(k_side), is = make_vertex_set(i_side);
  VertexSet all;
  std::merge(ks.begin(), ks.end(), is.begin(), is.end(), std::back_inserter(all));
  if (static_cast<int>(all.size()) != g.n() || std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw Error("split_graph_perfect_code: sides do not partition V");
  }
  if (!is_clique(g, ks)) throw Error("split_graph_perfect_code: K side is not a clique");
  if (!is_independent(g, is)) throw Error("split_graph_perfect_code: I side is not independent");

  VertexSet isolated;
  for (Vertex v : is)
    if (g.degree(v) == 0) isolated.push_back(v);

  for (Vertex x : ks) {
    bool ok = std::all_of(is.begin(), is.end(),
                          [&](Vertex v) { return g.degree(v) == 0 || g.adjacent(x, v); });
    if (!ok) continue;
    VertexSet d = make_vertex_set([&] {
      auto d0 = isolated;
      d0.push_back(x);
      return d0;
    }());
    if (is_perfect_code(g, d)) return d;
  }
  if (is_perfect_code(g, is)) return is;
  return std::nullopt;
}

/// One-in-Three 3SAT instance without negations.
struct Formula {
  int var_count = 0;
  std::vector<std::array<int, 3>> clauses;

  Formula() = default;
  Formula(int vars, std::vector<std::array<int, 3>> cls) : var_count(vars), clauses(std::move(cls)) {
    if (var_count < 0) throw Error("formula: negative variable count");
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      auto [a, b, c] = clauses[i];
      for (int x : clauses[i])
        if (x < 0 || x >= var_count) {
          throw Error("formula: clause " + std::to_string(i) + " has variable out of range");
        }
      if (a == b || b == c || a == c) {
        throw Error("formula: clause " + std::to_string(i) + " repeats a variable");
      }
    }
  }
};

/// True iff every clause has exactly one true variable.
inline bool one_in_three(const Formula& f, const std::vector<bool>& truth) {
  if (static_cast<int>(truth.size()) != f.var_count) return false;
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
    return truth[c[0]] + truth[c[1]] + truth[c[2]] == 1;
  });
}

enum class GadgetVariant { Unipolar, Bipartite };

/// Reduction graph. Layout: clause vertices 0..s-1, variable vertices
/// s..s+k-1, pendant vertices s+k..s+2k-1.
struct ReductionMap {
  Graph graph;
  std::optional<CliqueSplit> split;  // unipolar variant only
  std::vector<Vertex> clause_vertices;
  std::vector<Vertex> var_vertices;
  std::vector<Vertex> pendant_vertices;
  GadgetVariant variant = GadgetVariant::Unipolar;
  Formula formula;
};

/// Clause vertices attach to the vertices of their variables, each variable
/// vertex carries a pendant. Clause vertices form a clique in the unipolar
/// variant, yielding the split (Q, {x_1,a_1}, ..., {x_k,a_k}); in the
/// bipartite variant they stay independent.
inline ReductionMap reduce_one_in_three(const Formula& f, GadgetVariant variant) {
  const int s = static_cast<int>(f.clauses.size());
  const int k = f.var_count;
  ReductionMap rm;
  rm.variant = variant;
  rm.formula = f;
  for (int i = 0; i < s; ++i) rm.clause_vertices.push_back(i);
  for (int i = 0; i < k; ++i) rm.var_vertices.push_back(s + i);
  for (int i = 0; i < k; ++i) rm.pendant_vertices.push_back(s + k + i);

  std::vector<Edge> edges;
  if (variant == GadgetVariant::Unipolar)
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) edges.emplace_back(i, j);
  for (int i = 0; i < s; ++i)
    for (int x : f.clauses[i]) edges.emplace_back(i, rm.var_vertices[x]);
  for (int i = 0; i < k; ++i) edges.emplace_back(rm.var_vertices[i], rm.pendant_vertices[i]);
  rm.graph = Graph(s + 2 * k, edges);

  if (variant == GadgetVariant::Unipolar) {
    CliqueSplit split{rm.clause_vertices, {}};
    for (int i = 0; i < k; ++i) split.peripherals.push_back({rm.var_vertices[i], rm.pendant_vertices[i]});
    if (!validate_clique_split(rm.graph, split)) throw Error("reduce_one_in_three: split does not validate");
    rm.split = std::move(split);
  }
  return rm;
}

/// Recovers the truth assignment x_i = (x_i in d) from a perfect code of a
/// reduction graph. Throws if d is not a perfect code or the assignment is
/// not one-in-three satisfying for the source formula.
inline std::vector<bool> extract_assignment(const ReductionMap& rm, const VertexSet& d) {
  if (!is_perfect_code(rm.graph, d)) throw Error("extract_assignment: not a perfect code");
  for (Vertex q : rm.clause_vertices)
    if (std::binary_search(d.begin(), d.end(), q)) {
      throw Error("extract_assignment: clause vertex " + std::to_string(q) + " in code");
    }
  std::vector<bool> truth(rm.var_vertices.size());
  for (std::size_t i = 0; i < truth.size(); ++i)
    truth[i] = std::binary_search(d.begin(), d.end(), rm.var_vertices[i]);
  if (!one_in_three(rm.formula, truth)) throw Error("extract_assignment: assignment is not one-in-three");
  return truth;
}

/// The code T + {a_i : x_i false} for a one-in-three assignment T.
inline VertexSet embed_assignment(const ReductionMap& rm, const std::vector<bool>& truth) {
  if (!one_in_three(rm.formula, truth)) throw Error("embed_assignment: assignment is not one-in-three");
  std::vector<Vertex> d;
  for (std::size_t i = 0; i < truth.size(); ++i)
    d.push_back(truth[i] ? rm.var_vertices[i] : rm.pendant_vertices[i]);
  VertexSet out = make_vertex_set(d);
  if (!is_perfect_code(rm.graph, out)) throw Error("embed_assignment: result is not a perfect code");
  return out;
}

namespace io {

/// Formula format: `k s`, then s lines of three variable indices.
inline Formula read_formula(std::istream& in) {
  auto lines = detail::data_lines(in);
  if (lines.empty()) throw Error("formula: missing header line `k s`");
  auto header = detail::parse_numbers(lines[0].second, lines[0].first);
  if (header.size() != 2) throw Error("formula: header must be `k s`");
  if (static_cast<long long>(lines.size()) - 1 != header[1]) {
    throw Error("formula: header declares " + std::to_string(header[1]) + " clauses, found " +
                std::to_string(lines.size() - 1));
  }
  std::vector<std::array<int, 3>> clauses;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto nums = detail::parse_numbers(lines[i].second, lines[i].first);
    if (nums.size() != 3) throw Error("formula line " + std::to_string(lines[i].first) + ": expected 3 variables");
    clauses.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1]), static_cast<int>(nums[2])});
  }
  return Formula(static_cast<int>(header[0]), std::move(clauses));
}

inline void write_formula(std::ostream& out, const Formula& f) {
  out << f.var_count << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
}

/// Edge list followed by a `# map:` block naming every gadget vertex.
inline void write_reduction(std::ostream& out, const ReductionMap& rm) {
  write_graph(out, rm.graph);
  out << "# map:\n";
  for (std::size_t i = 0; i < rm.clause_vertices.size(); ++i)
    out << "# clause " << i << " -> " << rm.clause_vertices[i] << '\n';
  for (std::size_t i = 0; i < rm.var_vertices.size(); ++i)
    out << "# var " << i << " -> " << rm.var_vertices[i] << '\n';
  for (std::size_t i = 0; i < rm.pendant_vertices.size(); ++i)
    out << "# pendant " << i << " -> " << rm.pendant_vertices[i] << '\n';
}

}  // namespace io

}  // namespace gsplit
