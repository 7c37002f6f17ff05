#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "gsplit/graph.hpp"

namespace gsplit {

/// Bipartite graph over two disjoint vertex sets of a host graph. Edges are
/// stored by local index: adj[i] lists right-local indices adjacent to
/// left[i].
struct BipartiteGraph {
  VertexSet left;
  VertexSet right;
  std::vector<std::vector<int>> adj;

  std::size_t vertex_count() const { return left.size() + right.size(); }

  /// Edges of `host` between the two sides.
  static BipartiteGraph from_host(const Graph& host, VertexSet left, VertexSet right) {
    return make(host, std::move(left), std::move(right), true);
  }

  /// Non-edges of `host` between the two sides, i.e. the bipartite part of
  /// the complement.
  static BipartiteGraph from_complement(const Graph& host, VertexSet left, VertexSet right) {
    return make(host, std::move(left), std::move(right), false);
  }

 private:
  static BipartiteGraph make(const Graph& host, VertexSet left, VertexSet right, bool edges) {
    check_members(host, left);
    check_members(host, right);
    left = make_vertex_set(std::move(left));
    right = make_vertex_set(std::move(right));
    std::vector<Vertex> both;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                          std::back_inserter(both));
    if (!both.empty()) throw Error("bipartite sides overlap at vertex " + std::to_string(both[0]));
    BipartiteGraph b{std::move(left), std::move(right), {}};
    b.adj.resize(b.left.size());
    for (std::size_t i = 0; i < b.left.size(); ++i)
      for (std::size_t j = 0; j < b.right.size(); ++j)
        if (host.adjacent(b.left[i], b.right[j]) == edges) b.adj[i].push_back(static_cast<int>(j));
    return b;
  }
};

struct Matching {
  std::vector<int> mate_left;   // right-local index or -1
  std::vector<int> mate_right;  // left-local index or -1
  int size = 0;

  /// Matched pairs as (left vertex, right vertex) of the host graph.
  std::vector<Edge> pairs(const BipartiteGraph& b) const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < mate_left.size(); ++i)
      if (mate_left[i] != -1) out.emplace_back(b.left[i], b.right[mate_left[i]]);
    return out;
  }
};

/// Scratch buffers for Hopcroft-Karp, reusable across a sequence of
/// subproblems so only the largest one allocates.
class MatchingWorkspace {
 public:
  Matching run(const BipartiteGraph& b) {
    const int nl = static_cast<int>(b.left.size());
    const int nr = static_cast<int>(b.right.size());
    Matching m;
    m.mate_left.assign(nl, -1);
    m.mate_right.assign(nr, -1);
    dist_.assign(nl, 0);
    next_.assign(nl, 0);
    queue_.reserve(nl);
    while (bfs(b, m)) {
      std::fill(next_.begin(), next_.end(), 0);
      for (int u = 0; u < nl; ++u)
        if (m.mate_left[u] == -1 && dfs(b, m, u)) ++m.size;
    }
    return m;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs(const BipartiteGraph& b, const Matching& m) {
    queue_.clear();
    for (std::size_t u = 0; u < dist_.size(); ++u) {
      dist_[u] = m.mate_left[u] == -1 ? 0 : kInf;
      if (dist_[u] == 0) queue_.push_back(static_cast<int>(u));
    }
    bool found = false;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      int u = queue_[head];
      for (int r : b.adj[u]) {
        int w = m.mate_right[r];
        if (w == -1) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue_.push_back(w);
        }
      }
    }
    return found;
  }

  bool dfs(const BipartiteGraph& b, Matching& m, int u) {
    for (auto& i = next_[u]; i < b.adj[u].size(); ++i) {
      int r = b.adj[u][i];
      int w = m.mate_right[r];
      if (w == -1 || (dist_[w] == dist_[u] + 1 && dfs(b, m, w))) {
        m.mate_left[u] = r;
        m.mate_right[r] = u;
        ++i;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  std::vector<int> dist_;
  std::vector<std::size_t> next_;
  std::vector<int> queue_;
};

/// Maximum-cardinality matching, vertices scanned in ascending local order.
inline Matching hopcroft_karp(const BipartiteGraph& b) {
  MatchingWorkspace ws;
  return ws.run(b);
}

/// Minimum vertex cover from a maximum matching: with Z the vertices
/// reachable from free left vertices by alternating paths, the cover is
/// (left - Z) + (right & Z). Throws if its size differs from |M|, which
/// means the matching was not maximum.
inline VertexSet konig_cover(const BipartiteGraph& b, const Matching& m) {
  const std::size_t nl = b.left.size(), nr = b.right.size();
  std::vector<char> left_z(nl, 0), right_z(nr, 0);
  std::vector<int> stack;
  for (std::size_t u = 0; u < nl; ++u)
    if (m.mate_left[u] == -1) {
      left_z[u] = 1;
      stack.push_back(static_cast<int>(u));
    }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int r : b.adj[u]) {
      if (right_z[r]) continue;
      right_z[r] = 1;
      int w = m.mate_right[r];
      if (w != -1 && !left_z[w]) {
        left_z[w] = 1;
        stack.push_back(w);
      }
    }
  }
  VertexSet cover;
  for (std::size_t u = 0; u < nl; ++u)
    if (!left_z[u]) cover.push_back(b.left[u]);
  for (std::size_t r = 0; r < nr; ++r)
    if (right_z[r]) cover.push_back(b.right[r]);
  if (static_cast<int>(cover.size()) != m.size) {
    throw Error("konig_cover: cover size differs from matching size; matching not maximum");
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

/// Complement of a minimum vertex cover; size |left| + |right| - |M|.
inline VertexSet max_independent_set_bipartite(const BipartiteGraph& b, const Matching& m) {
  VertexSet cover = konig_cover(b, m);
  VertexSet all;
  std::merge(b.left.begin(), b.left.end(), b.right.begin(), b.right.end(), std::back_inserter(all));
  VertexSet out;
  std::set_difference(all.begin(), all.end(), cover.begin(), cover.end(), std::back_inserter(out));
  return out;
}

inline VertexSet max_independent_set_bipartite(const BipartiteGraph& b) {
  return max_independent_set_bipartite(b, hopcroft_karp(b));
}

}  // namespace gsplit
