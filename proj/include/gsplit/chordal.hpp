#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "gsplit/graph.hpp"

namespace gsplit {

/// An elimination sequence: order[0] is eliminated first.
struct EliminationOrder {
  std::vector<Vertex> order;

  std::vector<int> positions() const {
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    return pos;
  }
};

/// A chordal supergraph (V, E + fill) of a base graph.
struct Triangulation {
  Graph base;
  std::vector<Edge> fill;  // u < v, sorted, disjoint from base edges
  Graph filled;
  EliminationOrder order;  // perfect elimination ordering of `filled`

  std::int64_t m_fill() const { return static_cast<std::int64_t>(fill.size()); }
  std::int64_t m_prime() const { return filled.m(); }
};

/// True iff every vertex's later neighbors in `ord` form a clique of g.
inline bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& ord) {
  const int n = g.n();
  if (static_cast<int>(ord.order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = ord.order[i];
    if (v < 0 || v >= n || pos[v] != -1) return false;
    pos[v] = i;
  }
  // Checking each vertex's later neighbors against its earliest later
  // neighbor is enough (Rose-Tarjan-Lueker).
  for (Vertex v = 0; v < n; ++v) {
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v] && (parent == -1 || pos[w] < pos[parent])) parent = w;
    if (parent == -1) continue;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v] && w != parent && !g.adjacent(parent, w)) return false;
  }
  return true;
}

/// Minimal triangulation by LEX M. Ties between equal labels go to the
/// highest-index vertex. Each step searches the base graph through
/// unnumbered vertices; a vertex z reached by a path whose inner labels are
/// all below label(z) gets its label bumped and the edge to the newly
/// numbered vertex.
inline Triangulation lex_m(const Graph& g) {
  const int n = g.n();
  std::vector<int> label(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<int> reached(n, -1);
  std::vector<std::vector<Vertex>> reach(n + 1);
  std::vector<int> rank_of(2 * n + 2);
  std::vector<Vertex> order(n);
  std::vector<Edge> all_edges = g.edges();
  std::vector<Edge> fill;
  std::vector<Vertex> bumped;
  int label_count = 1;

  for (int i = n - 1; i >= 0; --i) {
    Vertex v = -1;
    for (Vertex u = n - 1; u >= 0; --u)
      if (!numbered[u] && (v == -1 || label[u] > label[v])) v = u;
    order[i] = v;
    numbered[v] = 1;
    reached[v] = i;
    bumped.clear();

    for (Vertex w : g.neighbors(v)) {
      if (numbered[w]) continue;
      reached[w] = i;
      reach[label[w]].push_back(w);
      bumped.push_back(w);
    }
    for (int j = 0; j < label_count; ++j) {
      while (!reach[j].empty()) {
        Vertex w = reach[j].back();
        reach[j].pop_back();
        for (Vertex z : g.neighbors(w)) {
          if (numbered[z] || reached[z] == i) continue;
          reached[z] = i;
          if (label[z] > j) {
            reach[label[z]].push_back(z);
            bumped.push_back(z);
          } else {
            reach[j].push_back(z);
          }
        }
      }
    }

    for (Vertex& l : label) l *= 2;
    for (Vertex z : bumped) {
      label[z] += 1;
      if (!g.adjacent(v, z)) fill.emplace_back(std::min(v, z), std::max(v, z));
    }
    // Compress labels of unnumbered vertices back to 0..count-1.
    std::fill(rank_of.begin(), rank_of.end(), 0);
    for (Vertex u = 0; u < n; ++u)
      if (!numbered[u]) rank_of[label[u]] = 1;
    label_count = 0;
    for (auto& r : rank_of) r = r ? label_count++ : -1;
    for (Vertex u = 0; u < n; ++u) label[u] = numbered[u] ? 0 : rank_of[label[u]];
    label_count = std::max(label_count, 1);
  }

  std::sort(fill.begin(), fill.end());
  all_edges.insert(all_edges.end(), fill.begin(), fill.end());
  Graph filled(n, all_edges);
  return {g, std::move(fill), std::move(filled), EliminationOrder{std::move(order)}};
}

/// Maximum cardinality search (ties: lowest index). Returns the reverse
/// visit order when it is a perfect elimination ordering, i.e. iff g is
/// chordal.
inline std::optional<EliminationOrder> peo(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  EliminationOrder ord;
  ord.order.resize(n);
  for (int i = n - 1; i >= 0; --i) {
    Vertex best = -1;
    for (Vertex u = 0; u < n; ++u)
      if (!visited[u] && (best == -1 || weight[u] > weight[best])) best = u;
    visited[best] = 1;
    ord.order[i] = best;
    for (Vertex w : g.neighbors(best))
      if (!visited[w]) ++weight[w];
  }
  if (!is_perfect_elimination_order(g, ord)) return std::nullopt;
  return ord;
}

inline bool is_chordal(const Graph& g) { return peo(g).has_value(); }

/// Maximal cliques of a chordal graph from a certified PEO. Each clique is
/// a vertex plus its later neighbors; the candidate for v is dropped when
/// some u whose earliest later neighbor is v has exactly one more later
/// neighbor than v. Cliques are sorted and listed lexicographically.
inline std::vector<VertexSet> maximal_cliques_chordal(const Graph& g, const EliminationOrder& ord) {
  if (!is_perfect_elimination_order(g, ord)) {
    throw Error("maximal_cliques_chordal: order is not a perfect elimination ordering");
  }
  const int n = g.n();
  std::vector<int> pos = ord.positions();
  std::vector<int> later(n, 0);
  std::vector<Vertex> parent(n, -1);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v]) {
        ++later[v];
        if (parent[v] == -1 || pos[w] < pos[parent[v]]) parent[v] = w;
      }
  std::vector<char> dominated(n, 0);
  for (Vertex u = 0; u < n; ++u)
    if (parent[u] != -1 && later[u] == later[parent[u]] + 1) dominated[parent[u]] = 1;

  std::vector<VertexSet> cliques;
  for (Vertex v = 0; v < n; ++v) {
    if (dominated[v]) continue;
    VertexSet c{v};
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v]) c.push_back(w);
    std::sort(c.begin(), c.end());
    cliques.push_back(std::move(c));
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

/// Checks the unique-chord characterization of minimality: every fill edge
/// u-v must have two common neighbors in the filled graph that are not
/// adjacent to each other.
inline bool verify_minimal(const Triangulation& t) {
  const Graph& h = t.filled;
  std::vector<Vertex> common;
  for (auto [u, v] : t.fill) {
    if (t.base.adjacent(u, v) || !h.adjacent(u, v)) return false;
    common.clear();
    for (Vertex a : h.neighbors(u))
      if (a != v && h.adjacent(a, v)) common.push_back(a);
    if (is_clique(h, common)) return false;
  }
  return true;
}

}  // namespace gsplit
