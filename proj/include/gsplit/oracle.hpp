#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gsplit/graph.hpp"
#include "gsplit/perfect_code.hpp"
#include "gsplit/recognition.hpp"

/// Brute-force reference solvers and seeded instance generators.
namespace gsplit::oracle {

/// SplitMix64. The recurrence is fixed so generated corpora are
/// reproducible in any language:
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), by rejection of the biased tail.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw Error("Rng::below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0,1) from the top 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  /// Fisher-Yates permutation of 0..n-1.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(static_cast<std::uint64_t>(i) + 1)]);
    return p;
  }

 private:
  std::uint64_t state_;
};

struct GeneratorConfig {
  std::uint64_t seed = 1;
  int n = 0;
  double p = 0.5;  // G(n,p) edge probability
  int k = 0;       // planted peripheral count
  double q = 0.5;  // center-peripheral edge probability
};

inline Graph gen_gnp(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < cfg.n; ++u)
    for (Vertex v = u + 1; v < cfg.n; ++v)
      if (rng.chance(cfg.p)) edges.emplace_back(u, v);
  return Graph(cfg.n, edges);
}

struct PlantedUnipolar {
  Graph graph;
  CliqueSplit split;
};

/// Random graph with a planted clique split: each peripheral receives one
/// vertex, the rest fall uniformly into the center or a peripheral; labels
/// are then shuffled. Center-peripheral pairs are edges with probability q.
inline PlantedUnipolar gen_random_unipolar(const GeneratorConfig& cfg) {
  if (cfg.k < 0 || cfg.k > cfg.n) throw Error("gen_random_unipolar: need 0 <= k <= n");
  Rng rng(cfg.seed);
  std::vector<int> part(cfg.n);  // 0 = center, i = peripheral i
  for (int v = 0; v < cfg.n; ++v)
    part[v] = v < cfg.k ? v + 1 : static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.k) + 1));
  std::vector<int> label = rng.permutation(cfg.n);

  CliqueSplit split;
  split.peripherals.resize(cfg.k);
  for (int v = 0; v < cfg.n; ++v)
    (part[v] == 0 ? split.center : split.peripherals[part[v] - 1]).push_back(label[v]);

  std::vector<Edge> edges;
  for (int u = 0; u < cfg.n; ++u)
    for (int v = u + 1; v < cfg.n; ++v) {
      bool edge = false;
      if (part[u] == part[v]) edge = true;
      else if (part[u] == 0 || part[v] == 0) edge = rng.chance(cfg.q);
      if (edge) edges.emplace_back(label[u], label[v]);
    }
  split.normalize();
  return {Graph(cfg.n, edges), std::move(split)};
}

struct PlantedSplitGraph {
  Graph graph;
  VertexSet k_side;
  VertexSet i_side;
};

/// Split graph: a random clique side of size 0..n, the rest independent,
/// clique-independent pairs adjacent with probability p.
inline PlantedSplitGraph gen_random_split(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  const int ksize = static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.n) + 1));
  std::vector<int> label = rng.permutation(cfg.n);
  PlantedSplitGraph out;
  std::vector<Edge> edges;
  for (int u = 0; u < cfg.n; ++u) {
    (u < ksize ? out.k_side : out.i_side).push_back(label[u]);
    for (int v = u + 1; v < cfg.n; ++v)
      if (u < ksize && (v < ksize || rng.chance(cfg.p))) edges.emplace_back(label[u], label[v]);
  }
  out.graph = Graph(cfg.n, edges);
  std::sort(out.k_side.begin(), out.k_side.end());
  std::sort(out.i_side.begin(), out.i_side.end());
  return out;
}

/// Random formula with 3..max_vars variables and 1..max_clauses clauses of
/// three distinct variables.
inline Formula gen_random_formula(std::uint64_t seed, int max_vars, int max_clauses) {
  if (max_vars < 3 || max_clauses < 1) throw Error("gen_random_formula: bounds too small");
  Rng rng(seed);
  const int k = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vars) - 2));
  const int s = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_clauses)));
  std::vector<std::array<int, 3>> clauses;
  for (int i = 0; i < s; ++i) {
    std::vector<int> p = rng.permutation(k);
    std::array<int, 3> c{p[0], p[1], p[2]};
    std::sort(c.begin(), c.end());
    clauses.push_back(c);
  }
  return Formula(k, std::move(clauses));
}

/// First one-in-three satisfying assignment in binary counting order.
inline std::optional<std::vector<bool>> brute_one_in_three(const Formula& f) {
  if (f.var_count > 24) throw Error("brute_one_in_three: too many variables");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.var_count); ++mask) {
    std::vector<bool> truth(f.var_count);
    for (int i = 0; i < f.var_count; ++i) truth[i] = mask >> i & 1;
    if (one_in_three(f, truth)) return truth;
  }
  return std::nullopt;
}

/// Every one-in-three satisfying assignment.
inline std::vector<std::vector<bool>> all_one_in_three(const Formula& f) {
  if (f.var_count > 24) throw Error("all_one_in_three: too many variables");
  std::vector<std::vector<bool>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.var_count); ++mask) {
    std::vector<bool> truth(f.var_count);
    for (int i = 0; i < f.var_count; ++i) truth[i] = mask >> i & 1;
    if (one_in_three(f, truth)) out.push_back(std::move(truth));
  }
  return out;
}

/// Calls fn on each of the 2^(n choose 2) labeled graphs on n vertices.
inline void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > 6) throw Error("for_each_graph: n must be in 0..6");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    fn(Graph(n, edges));
  }
}

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw Error("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

/// Triangle 0-1-2 and path 3-4-5-6-7 joined by the edge 0-3.
inline Graph g_c() {
  return Graph(8, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 3}});
}

/// Named instances: P<n>, C<n>, K<n>, prism (complement of C6), G_c, and
/// co-<name> for the complement of any of these.
inline Graph gen_named(const std::string& name) {
  if (name.rfind("co-", 0) == 0) return complement(gen_named(name.substr(3)));
  if (name == "prism") return complement(cycle_graph(6));
  if (name == "G_c") return g_c();
  if (name.size() >= 2 && (name[0] == 'P' || name[0] == 'C' || name[0] == 'K') &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
      name.size() <= 5) {
    const int n = std::stoi(name.substr(1));
    if (name[0] == 'P') return path_graph(n);
    if (name[0] == 'K') return complete_graph(n);
    return cycle_graph(n);
  }
  throw Error("unknown graph name `" + name +
              "`; known: P<n>, C<n>, K<n>, prism, G_c, co-<name>");
}

// ---------------------------------------------------------------------------
// Brute force. Vertex sets are bitmasks over at most 20 vertices.

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

inline VertexSet mask_to_set(Mask m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

inline void require_bound(const Graph& g, int bound, const char* what) {
  if (g.n() > bound) {
    throw Error(std::string(what) + ": n=" + std::to_string(g.n()) + " exceeds bound " +
                std::to_string(bound));
  }
}

/// Direct definition check over all candidate centers, by size then
/// lexicographically: H must be a clique and every component of G - H a
/// clique.
inline std::optional<CliqueSplit> brute_unipolar(const Graph& g) {
  require_bound(g, 16, "brute_unipolar");
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  const Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  auto clique = [&](Mask s) {
    for (Mask r = s; r; r &= r - 1) {
      int v = std::countr_zero(r);
      if ((s & ~(Mask{1} << v) & ~adj[v]) != 0) return false;
    }
    return true;
  };
  std::vector<Mask> subsets(std::size_t{1} << n);
  for (Mask s = 0; s <= all && s < subsets.size(); ++s) subsets[s] = s;
  std::stable_sort(subsets.begin(), subsets.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return mask_to_set(a) < mask_to_set(b);
  });
  for (Mask h : subsets) {
    if (!clique(h)) continue;
    Mask rest = all & ~h;
    CliqueSplit split{mask_to_set(h), {}};
    bool ok = true;
    while (rest && ok) {
      Mask comp = rest & (~rest + 1), frontier = comp;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        Mask fresh = adj[v] & rest & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      ok = clique(comp);
      split.peripherals.push_back(mask_to_set(comp));
      rest &= ~comp;
    }
    if (ok) {
      split.normalize();
      return split;
    }
  }
  return std::nullopt;
}

namespace detail {

// Max clique by branch and bound over candidate masks.
inline void max_clique_rec(const std::vector<Mask>& adj, Mask current, Mask candidates, int& best) {
  if (candidates == 0) {
    best = std::max(best, std::popcount(current));
    return;
  }
  if (std::popcount(current) + std::popcount(candidates) <= best) return;
  int v = std::countr_zero(candidates);
  max_clique_rec(adj, current | (Mask{1} << v), candidates & adj[v], best);
  max_clique_rec(adj, current, candidates & ~(Mask{1} << v), best);
}

inline bool colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& color,
                      std::size_t idx, int colors, int used) {
  if (idx == order.size()) return true;
  Vertex v = order[idx];
  for (int c = 0; c < std::min(colors, used + 1); ++c) {
    bool ok = true;
    for (Vertex w : g.neighbors(v))
      if (color[w] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, order, color, idx + 1, colors, std::max(used, c + 1))) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace detail

inline int brute_omega(const Graph& g) {
  require_bound(g, 20, "brute_omega");
  int best = 0;
  const Mask all = g.n() == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << g.n()) - 1);
  detail::max_clique_rec(adjacency_masks(g), 0, all, best);
  return best;
}

inline int brute_alpha(const Graph& g) {
  require_bound(g, 20, "brute_alpha");
  return brute_omega(complement(g));
}

/// Smallest k for which exhaustive backtracking finds a proper k-coloring.
inline int brute_chi(const Graph& g) {
  require_bound(g, 14, "brute_chi");
  const int n = g.n();
  if (n == 0) return 0;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = 1;; ++k) {
    std::vector<int> color(n, -1);
    if (detail::colorable(g, order, color, 0, k, 0)) return k;
  }
}

inline int brute_theta(const Graph& g) {
  require_bound(g, 14, "brute_theta");
  return brute_chi(complement(g));
}

/// Every perfect code, in lexicographic order of the sorted vertex lists.
inline std::vector<VertexSet> brute_perfect_codes(const Graph& g) {
  require_bound(g, 16, "brute_perfect_codes");
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  std::vector<VertexSet> out;
  for (std::uint64_t d = 0; d < (std::uint64_t{1} << n); ++d) {
    const Mask code = static_cast<Mask>(d);
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      const int hits = std::popcount(adj[v] & code);
      ok = (code >> v & 1) ? hits == 0 : hits == 1;
    }
    if (ok) out.push_back(mask_to_set(code));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Size of a maximum matching in a bipartite graph by exhaustive search
/// over left vertices.
template <typename BipartiteLike>
int brute_max_matching(const BipartiteLike& b) {
  if (b.vertex_count() > 20) throw Error("brute_max_matching: too many vertices");
  std::function<int(std::size_t, Mask)> go = [&](std::size_t i, Mask used) -> int {
    if (i == b.adj.size()) return 0;
    int best = go(i + 1, used);
    for (int r : b.adj[i])
      if (!(used >> r & 1)) best = std::max(best, 1 + go(i + 1, used | (Mask{1} << r)));
    return best;
  };
  return go(0, 0);
}

}  // namespace gsplit::oracle
