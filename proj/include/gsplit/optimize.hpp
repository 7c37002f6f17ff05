#pragma once

#include <algorithm>
#include <vector>

#include "gsplit/graph.hpp"
#include "gsplit/matching.hpp"
#include "gsplit/recognition.hpp"

namespace gsplit {

/// Proper coloring with colors 1..palette_size.
struct Coloring {
  std::vector<int> color;
  int palette_size = 0;

  /// Vertices of each color, color 1 first.
  std::vector<VertexSet> classes() const {
    std::vector<VertexSet> out(palette_size);
    for (std::size_t v = 0; v < color.size(); ++v) out[color[v] - 1].push_back(static_cast<Vertex>(v));
    return out;
  }
};

/// Partition of V into cliques.
struct CliqueCover {
  std::vector<VertexSet> parts;
};

inline bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.n()) return false;
  std::vector<char> used(c.palette_size + 1, 0);
  for (int col : c.color) {
    if (col < 1 || col > c.palette_size) return false;
    used[col] = 1;
  }
  for (int col = 1; col <= c.palette_size; ++col)
    if (!used[col]) return false;
  for (auto [u, v] : g.edges())
    if (c.color[u] == c.color[v]) return false;
  return true;
}

inline bool is_clique_cover(const Graph& g, const CliqueCover& cover) {
  std::vector<char> seen(g.n(), 0);
  for (const auto& part : cover.parts) {
    if (part.empty() || !is_clique(g, part)) return false;
    for (Vertex v : part) {
      if (v < 0 || v >= g.n() || seen[v]) return false;
      seen[v] = 1;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

namespace detail {

inline void require_split(const Graph& g, const CliqueSplit& cs, const char* who) {
  if (!validate_clique_split(g, cs)) throw Error(std::string(who) + ": invalid clique split");
}

// Per-peripheral neighbor counts of one center vertex, using a scratch
// array indexed by peripheral; returns the indices that were touched.
struct PeripheralCounter {
  explicit PeripheralCounter(const Graph& g, const CliqueSplit& cs)
      : part(g.n(), -1), count(cs.k(), 0) {
    for (std::size_t i = 0; i < cs.k(); ++i)
      for (Vertex v : cs.peripherals[i]) part[v] = static_cast<int>(i);
  }

  const std::vector<int>& touch(const Graph& g, Vertex v) {
    for (int i : touched) count[i] = 0;
    touched.clear();
    for (Vertex w : g.neighbors(v)) {
      int i = part[w];
      if (i < 0) continue;
      if (count[i]++ == 0) touched.push_back(i);
    }
    return touched;
  }

  std::vector<int> part;
  std::vector<int> count;
  std::vector<int> touched;
};

// Smallest center vertex with a non-neighbor in every peripheral, or -1.
inline Vertex independent_center_vertex(const Graph& g, const CliqueSplit& cs, PeripheralCounter& pc) {
  for (Vertex x : cs.center) {
    pc.touch(g, x);
    bool misses_all = true;
    for (std::size_t i = 0; i < cs.k() && misses_all; ++i)
      if (pc.count[i] == static_cast<int>(cs.peripherals[i].size())) misses_all = false;
    if (misses_all) return x;
  }
  return -1;
}

}  // namespace detail

/// Maximum independent set from a clique split. Size is k+1 when some
/// center vertex x has a non-neighbor y_i in every peripheral, giving
/// {x, y_1..y_k}; otherwise one vertex per peripheral. Ties go to the
/// smallest index.
inline VertexSet max_independent_set_unipolar(const Graph& g, const CliqueSplit& cs) {
  detail::require_split(g, cs, "max_independent_set_unipolar");
  detail::PeripheralCounter pc(g, cs);
  VertexSet out;
  Vertex x = detail::independent_center_vertex(g, cs, pc);
  if (x != -1) {
    out.push_back(x);
    for (const auto& p : cs.peripherals)
      out.push_back(*std::find_if(p.begin(), p.end(), [&](Vertex y) { return !g.adjacent(x, y); }));
  } else {
    for (const auto& p : cs.peripherals) out.push_back(p.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

struct CliqueSubproblem {
  int index = -1;  // peripheral index, -1 when k = 0
  int size = 0;
};

// Largest max clique over G[H + H_i]: |H| + |H_i| - |M_i| with M_i a maximum
// matching of the bipartite complement. Smallest i wins ties.
inline CliqueSubproblem best_clique_subproblem(const Graph& g, const CliqueSplit& cs,
                                               MatchingWorkspace& ws) {
  CliqueSubproblem best{-1, static_cast<int>(cs.center.size())};
  for (std::size_t i = 0; i < cs.k(); ++i) {
    auto b = BipartiteGraph::from_complement(g, cs.center, cs.peripherals[i]);
    const int size = static_cast<int>(b.vertex_count()) - ws.run(b).size;
    if (best.index == -1 || size > best.size) best = {static_cast<int>(i), size};
  }
  return best;
}

}  // namespace detail

/// Maximum clique from a clique split via bipartite matching in the
/// complement of each G[H + H_i].
inline VertexSet max_clique_unipolar(const Graph& g, const CliqueSplit& cs) {
  detail::require_split(g, cs, "max_clique_unipolar");
  if (cs.k() == 0) return cs.center;
  MatchingWorkspace ws;
  auto best = detail::best_clique_subproblem(g, cs, ws);
  auto b = BipartiteGraph::from_complement(g, cs.center, cs.peripherals[best.index]);
  VertexSet clique = max_independent_set_bipartite(b, ws.run(b));
  if (static_cast<int>(clique.size()) != best.size || !is_clique(g, clique)) {
    throw Error("max_clique_unipolar: internal consistency failure");
  }
  return clique;
}

/// Minimum clique cover from a clique split: the split itself when the
/// independence number is k+1, otherwise every center vertex joins the
/// first peripheral it sees completely.
inline CliqueCover min_clique_cover_unipolar(const Graph& g, const CliqueSplit& cs) {
  detail::require_split(g, cs, "min_clique_cover_unipolar");
  CliqueCover cover;
  if (cs.k() == 0) {
    if (!cs.center.empty()) cover.parts.push_back(cs.center);
    return cover;
  }
  detail::PeripheralCounter pc(g, cs);
  if (detail::independent_center_vertex(g, cs, pc) != -1) {
    cover.parts.push_back(cs.center);
    for (const auto& p : cs.peripherals) cover.parts.push_back(p);
  } else {
    cover.parts = cs.peripherals;
    for (Vertex v : cs.center) {
      pc.touch(g, v);
      std::size_t i = 0;
      while (i < cs.k() && pc.count[i] != static_cast<int>(cs.peripherals[i].size())) ++i;
      if (i == cs.k() || !sees(g, v, cover.parts[i])) {
        throw Error("min_clique_cover_unipolar: center vertex " + std::to_string(v) +
                    " fits no peripheral");
      }
      cover.parts[i].push_back(v);
    }
  }
  for (auto& p : cover.parts) std::sort(p.begin(), p.end());
  std::sort(cover.parts.begin(), cover.parts.end());
  return cover;
}

/// Minimum coloring from a clique split. Center vertices take colors
/// 1..|H| in ascending order. In each G[H + H_i] a maximum matching of the
/// bipartite complement pairs peripheral vertices with center vertices whose
/// color they reuse; unmatched peripheral vertices take |H|+1, |H|+2, ...
/// in ascending order.
inline Coloring min_coloring_unipolar(const Graph& g, const CliqueSplit& cs) {
  detail::require_split(g, cs, "min_coloring_unipolar");
  Coloring c;
  c.color.assign(g.n(), 0);
  const int h = static_cast<int>(cs.center.size());
  for (int i = 0; i < h; ++i) c.color[cs.center[i]] = i + 1;
  c.palette_size = h;
  MatchingWorkspace ws;
  for (const auto& p : cs.peripherals) {
    auto b = BipartiteGraph::from_complement(g, cs.center, p);
    Matching m = ws.run(b);
    int fresh = h;
    for (std::size_t r = 0; r < b.right.size(); ++r) {
      const int mate = m.mate_right[r];
      c.color[b.right[r]] = mate != -1 ? c.color[b.left[mate]] : ++fresh;
    }
    c.palette_size = std::max(c.palette_size, fresh);
  }
  if (!is_proper_coloring(g, c)) throw Error("min_coloring_unipolar: internal consistency failure");
  return c;
}

// Generalized-split wrappers. A CoUnipolar result carries a split of the
// complement; each problem is answered by its dual on that side.

inline const CliqueSplit& require_gs(const GsResult& r, const char* who) {
  if (r.kind == GsKind::Neither || !r.split) {
    throw Error(std::string(who) + ": graph is not generalized split");
  }
  return *r.split;
}

inline VertexSet gs_max_independent_set(const Graph& g, const GsResult& r) {
  const auto& cs = require_gs(r, "gs_max_independent_set");
  if (r.kind == GsKind::Unipolar) return max_independent_set_unipolar(g, cs);
  return max_clique_unipolar(complement(g), cs);
}

inline VertexSet gs_max_clique(const Graph& g, const GsResult& r) {
  const auto& cs = require_gs(r, "gs_max_clique");
  if (r.kind == GsKind::CoUnipolar) return max_independent_set_unipolar(complement(g), cs);
  return max_clique_unipolar(g, cs);
}

inline CliqueCover gs_min_clique_cover(const Graph& g, const GsResult& r) {
  const auto& cs = require_gs(r, "gs_min_clique_cover");
  if (r.kind == GsKind::Unipolar) return min_clique_cover_unipolar(g, cs);
  // Color classes of the complement are cliques of g.
  CliqueCover cover{min_coloring_unipolar(complement(g), cs).classes()};
  std::sort(cover.parts.begin(), cover.parts.end());
  return cover;
}

inline Coloring gs_min_coloring(const Graph& g, const GsResult& r) {
  const auto& cs = require_gs(r, "gs_min_coloring");
  if (r.kind == GsKind::Unipolar) return min_coloring_unipolar(g, cs);
  // Cliques of the complement are independent sets of g.
  CliqueCover cover = min_clique_cover_unipolar(complement(g), cs);
  Coloring c;
  c.color.assign(g.n(), 0);
  c.palette_size = static_cast<int>(cover.parts.size());
  for (std::size_t i = 0; i < cover.parts.size(); ++i)
    for (Vertex v : cover.parts[i]) c.color[v] = static_cast<int>(i) + 1;
  return c;
}

/// Recognition order that reaches the linear-time algorithm first: for
/// independent set and clique cover try g, for clique and coloring try the
/// complement.
enum class Problem { Mis, Clique, Cover, Coloring };

inline GsResult recognize_for(const Graph& g, Problem p, const RecognitionOptions& opts = {}) {
  if (p == Problem::Mis || p == Problem::Cover) return generalized_split_test(g, opts);
  if (auto s = unipolar_test(complement(g), opts)) return {GsKind::CoUnipolar, std::move(s)};
  if (auto s = unipolar_test(g, opts)) return {GsKind::Unipolar, std::move(s)};
  return {};
}

}  // namespace gsplit
