#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gsplit {

using Vertex = int;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline VertexSet make_vertex_set(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

/// Simple undirected graph on vertices 0..n-1.
///
/// Keeps sorted adjacency lists for traversal and a dense bit matrix for
/// O(1) adjacency tests. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate pairs collapse; (u,v) and
  /// (v,u) are the same edge. Throws Error on self-loops or out-of-range
  /// endpoints.
  Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0) throw Error("negative vertex count");
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    adj_.resize(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") out of range for n=" + std::to_string(n));
      }
      if (u == v) {
        throw Error("self-loop (" + std::to_string(u) + "," +
                    std::to_string(v) + ")");
      }
      if (adjacent(u, v)) continue;
      set_bit(u, v);
      set_bit(v, u);
      adj_[u].push_back(v);
      adj_[v].push_back(u);
      ++m_;
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int n() const { return n_; }
  std::int64_t m() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1u;
  }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  void set_bit(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |=
        std::uint64_t{1} << (v & 63);
  }

  int n_ = 0;
  std::int64_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> adj_;
};

inline Graph build(int n, std::span<const Edge> edges) { return Graph(n, edges); }

inline void check_members(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s)
    if (v < 0 || v >= g.n())
      throw Error("vertex " + std::to_string(v) + " out of range for n=" +
                  std::to_string(g.n()));
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  const int n = g.n();
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 -
                static_cast<std::size_t>(g.m()));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the host graph that became vertex i.
  std::vector<Vertex> original;
};

/// Subgraph induced by s; vertices are renumbered in ascending order of
/// their original index.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  check_members(g, s);
  VertexSet members = make_vertex_set({s.begin(), s.end()});
  std::vector<int> local(g.n(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Vertex w : g.neighbors(members[i]))
      if (local[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[w]);
  return {Graph(static_cast<int>(members.size()), edges), std::move(members)};
}

/// Connected components, each sorted, listed by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.n(); ++root) {
    if (seen[root]) continue;
    VertexSet comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

inline bool is_independent(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

/// True iff v is adjacent to every member of s.
inline bool sees(const Graph& g, Vertex v, std::span<const Vertex> s) {
  return std::all_of(s.begin(), s.end(), [&](Vertex w) { return g.adjacent(v, w); });
}

struct Bipartition {
  VertexSet first;
  VertexSet second;
};

/// Proper 2-coloring by BFS from each unvisited vertex in ascending order;
/// every BFS root goes to the first side. On failure returns nullopt and,
/// when odd_cycle is given, fills it with the vertices of an odd cycle in
/// traversal order.
inline std::optional<Bipartition> bipartition(const Graph& g,
                                              std::vector<Vertex>* odd_cycle = nullptr) {
  const int n = g.n();
  std::vector<int> side(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::queue<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          parent[w] = v;
          queue.push(w);
        } else if (side[w] == side[v]) {
          if (odd_cycle) {
            // Walk both tree paths up to their meeting point.
            std::vector<Vertex> a{v}, b{w};
            std::vector<char> on_a(n, 0);
            for (Vertex x = v; x != -1; x = parent[x]) on_a[x] = 1;
            Vertex meet = w;
            while (!on_a[meet]) {
              meet = parent[meet];
              b.push_back(meet);
            }
            b.pop_back();
            a.clear();
            for (Vertex x = v; x != meet; x = parent[x]) a.push_back(x);
            a.push_back(meet);
            odd_cycle->assign(a.begin(), a.end());
            odd_cycle->insert(odd_cycle->end(), b.rbegin(), b.rend());
          }
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? out.first : out.second).push_back(v);
  return out;
}

}  // namespace gsplit
