#pragma once

#include <algorithm>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gsplit/chordal.hpp"
#include "gsplit/graph.hpp"
#include "gsplit/io.hpp"
#include "gsplit/twosat.hpp"

namespace gsplit {

/// Partition of V into a center clique and peripheral cliques with no
/// edges between distinct peripherals.
struct CliqueSplit {
  VertexSet center;
  std::vector<VertexSet> peripherals;

  std::size_t k() const { return peripherals.size(); }

  /// Sorts every part and orders peripherals by smallest member.
  void normalize() {
    std::sort(center.begin(), center.end());
    for (auto& p : peripherals) std::sort(p.begin(), p.end());
    std::sort(peripherals.begin(), peripherals.end());
  }

  bool operator==(const CliqueSplit&) const = default;
};

inline bool validate_clique_split(const Graph& g, const CliqueSplit& cs) {
  const int n = g.n();
  std::vector<int> part(n, -2);  // -1 center, i >= 0 peripheral i
  auto claim = [&](const VertexSet& s, int id) {
    for (Vertex v : s) {
      if (v < 0 || v >= n || part[v] != -2) return false;
      part[v] = id;
    }
    return true;
  };
  if (!claim(cs.center, -1)) return false;
  for (std::size_t i = 0; i < cs.peripherals.size(); ++i) {
    if (cs.peripherals[i].empty() || !claim(cs.peripherals[i], static_cast<int>(i))) return false;
  }
  if (std::find(part.begin(), part.end(), -2) != part.end()) return false;
  if (!is_clique(g, cs.center)) return false;
  for (const auto& p : cs.peripherals)
    if (!is_clique(g, p)) return false;
  for (auto [u, v] : g.edges())
    if (part[u] >= 0 && part[v] >= 0 && part[u] != part[v]) return false;
  return true;
}

/// Bookkeeping for the transferable-set search on one candidate center.
/// All four sets are over endpoints of fill edges inside the center.
struct TransferSearchState {
  std::vector<Edge> fill_center;  // fill edges inside the center, sorted
  VertexSet candidates;           // V*
  VertexSet rejected_global;      // fail for every choice of S
  VertexSet rejected_local;       // fail for the current target
  int target_index = -1;

  static TransferSearchState from_fill(std::vector<Edge> fill_center) {
    TransferSearchState st;
    std::sort(fill_center.begin(), fill_center.end());
    std::vector<Vertex> ends;
    for (auto [a, b] : fill_center) {
      ends.push_back(a);
      ends.push_back(b);
    }
    st.fill_center = std::move(fill_center);
    st.candidates = make_vertex_set(std::move(ends));
    return st;
  }
};

struct Transfer {
  VertexSet moved;  // S
  int target = -1;  // index into the peripheral list
};

struct RecognitionOptions {
  /// Called with every 2-SAT instance built during the search.
  std::function<void(const twosat::Instance&)> on_twosat;
};

namespace detail {

inline bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

/// Searches for S inside the center such that every center fill edge has exactly one
/// endpoint in S, S plus one peripheral is a clique of g, and S has no
/// neighbor in any other peripheral. Updates the rejection bookkeeping in
/// `state`. Returns nullopt when no such set exists.
inline std::optional<Transfer> find_transferable_set(const Graph& g, TransferSearchState& state,
                                                     const std::vector<VertexSet>& peripherals,
                                                     const RecognitionOptions& opts = {}) {
  if (state.fill_center.empty()) throw Error("find_transferable_set: no fill edges inside the center");
  if (peripherals.empty()) return std::nullopt;

  std::vector<int> part(g.n(), -1);
  for (std::size_t i = 0; i < peripherals.size(); ++i)
    for (Vertex v : peripherals[i]) part[v] = static_cast<int>(i);

  // The peripheral each endpoint sees fully while touching no other, or -1.
  std::vector<int> target_of(g.n(), -1);
  std::vector<Vertex> failed;
  for (Vertex v : state.candidates) {
    int touched = -1, hits = 0;
    bool single = true;
    for (Vertex w : g.neighbors(v)) {
      if (part[w] < 0) continue;
      if (touched == -1) touched = part[w];
      if (part[w] != touched) {
        single = false;
        break;
      }
      ++hits;
    }
    if (single && touched != -1 && hits == static_cast<int>(peripherals[touched].size())) {
      target_of[v] = touched;
    } else {
      failed.push_back(v);
    }
  }
  state.rejected_global = detail::set_union(state.rejected_global, make_vertex_set(failed));
  state.candidates = detail::set_minus(state.candidates, state.rejected_global);

  for (auto [a, b] : state.fill_center)
    if (detail::contains(state.rejected_global, a) && detail::contains(state.rejected_global, b))
      return std::nullopt;

  VertexSet endpoints = detail::set_union(
      detail::set_union(state.candidates, state.rejected_global), state.rejected_local);
  auto var = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(endpoints.begin(), endpoints.end(), v) -
                            endpoints.begin());
  };

  auto attempt = [&](Vertex v) -> std::optional<Transfer> {
    const int target = target_of[v];
    state.target_index = target;
    std::vector<Vertex> local;
    for (Vertex u : state.candidates)
      if (target_of[u] != target) local.push_back(u);
    state.rejected_local = make_vertex_set(local);
    state.candidates = detail::set_minus(state.candidates, state.rejected_local);

    twosat::Instance inst;
    inst.var_count = static_cast<int>(endpoints.size());
    inst.add_unit(twosat::pos(var(v)));
    for (Vertex u : detail::set_union(state.rejected_global, state.rejected_local))
      inst.add_unit(twosat::neg(var(u)));
    for (auto [a, b] : state.fill_center) {
      inst.add(twosat::pos(var(a)), twosat::pos(var(b)));
      inst.add(twosat::neg(var(a)), twosat::neg(var(b)));
    }
    if (opts.on_twosat) opts.on_twosat(inst);
    auto assignment = twosat::solve(inst);
    if (!assignment) return std::nullopt;

    Transfer out{{}, target};
    for (std::size_t i = 0; i < endpoints.size(); ++i)
      if ((*assignment)[i]) out.moved.push_back(endpoints[i]);
    // Re-verify the transfer conditions against g.
    VertexSet joined = detail::set_union(out.moved, peripherals[target]);
    if (!is_clique(g, joined)) return std::nullopt;
    for (Vertex s : out.moved)
      for (Vertex w : g.neighbors(s))
        if (part[w] >= 0 && part[w] != target) return std::nullopt;
    return out;
  };

  auto [x, y] = state.fill_center.front();
  if (detail::contains(state.rejected_global, x)) std::swap(x, y);
  if (auto found = attempt(x)) return found;
  if (detail::contains(state.rejected_global, y)) return std::nullopt;
  state.candidates = detail::set_union(state.candidates, state.rejected_local);
  state.rejected_local.clear();
  return attempt(y);
}

/// Tests whether the maximal clique h_prime of the triangulation is the
/// center of a feasible clique split, and if so converts it into a clique
/// split of g.
inline std::optional<CliqueSplit> feasible_center_check(const Graph& g, const Triangulation& t,
                                                        const VertexSet& h_prime,
                                                        const RecognitionOptions& opts = {}) {
  const int n = g.n();
  std::vector<char> in_center(n, 0);
  for (Vertex v : h_prime) in_center[v] = 1;

  // Components of G - H' must be cliques of g; they become the peripherals.
  std::vector<VertexSet> peripherals;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (in_center[root] || seen[root]) continue;
    VertexSet comp;
    std::int64_t inner_degree = 0;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (in_center[w]) continue;
        ++inner_degree;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    const auto s = static_cast<std::int64_t>(comp.size());
    if (inner_degree != s * (s - 1)) return std::nullopt;
    std::sort(comp.begin(), comp.end());
    peripherals.push_back(std::move(comp));
  }

  // Every fill edge needs an endpoint in H'; collect those inside H'.
  std::vector<Edge> fill_center;
  for (auto [u, v] : t.fill) {
    if (!in_center[u] && !in_center[v]) return std::nullopt;
    if (in_center[u] && in_center[v]) fill_center.emplace_back(u, v);
  }

  CliqueSplit split{h_prime, std::move(peripherals)};
  if (!fill_center.empty()) {
    auto state = TransferSearchState::from_fill(std::move(fill_center));
    auto transfer = find_transferable_set(g, state, split.peripherals, opts);
    if (!transfer) return std::nullopt;
    split.center = detail::set_minus(split.center, transfer->moved);
    auto& dest = split.peripherals[transfer->target];
    dest = detail::set_union(dest, transfer->moved);
  }
  split.normalize();
  if (!validate_clique_split(g, split)) return std::nullopt;
  return split;
}

namespace detail {

inline bool is_complete(const Graph& g, const VertexSet& comp) {
  std::int64_t deg = 0;
  for (Vertex v : comp) deg += g.degree(v);
  const auto s = static_cast<std::int64_t>(comp.size());
  return deg == s * (s - 1);
}

// Connected input: co-bipartite shortcut, else try each maximal clique of
// the triangulation as the center.
inline std::optional<CliqueSplit> unipolar_connected(const Graph& g, const RecognitionOptions& opts) {
  if (auto sides = bipartition(complement(g))) {
    CliqueSplit split{sides->first, {}};
    if (!sides->second.empty()) split.peripherals.push_back(sides->second);
    split.normalize();
    return split;
  }
  Triangulation t = lex_m(g);
  for (const VertexSet& h : maximal_cliques_chordal(t.filled, t.order))
    if (auto split = feasible_center_check(g, t, h, opts)) return split;
  return std::nullopt;
}

}  // namespace detail

/// Returns a clique split of g, or nullopt when g is not unipolar.
inline std::optional<CliqueSplit> unipolar_test(const Graph& g, const RecognitionOptions& opts = {}) {
  std::vector<VertexSet> comps = connected_components(g);
  std::vector<std::size_t> incomplete;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (!detail::is_complete(g, comps[i])) incomplete.push_back(i);

  CliqueSplit split;
  if (incomplete.empty()) {
    if (comps.empty()) return split;
    std::size_t center = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
      if (comps[i].size() > comps[center].size()) center = i;
    split.center = comps[center];
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (i != center) split.peripherals.push_back(comps[i]);
    return split;
  }
  if (incomplete.size() > 1) return std::nullopt;

  const std::size_t core = incomplete.front();
  InducedSubgraph sub = induced_subgraph(g, comps[core]);
  auto inner = detail::unipolar_connected(sub.graph, opts);
  if (!inner) return std::nullopt;
  for (Vertex v : inner->center) split.center.push_back(sub.original[v]);
  for (const auto& p : inner->peripherals) {
    VertexSet mapped;
    for (Vertex v : p) mapped.push_back(sub.original[v]);
    split.peripherals.push_back(std::move(mapped));
  }
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (i != core) split.peripherals.push_back(comps[i]);
  split.normalize();
  return split;
}

enum class GsKind { Unipolar, CoUnipolar, Neither };

/// Generalized-split classification. For CoUnipolar the split describes
/// the complement of the input graph.
struct GsResult {
  GsKind kind = GsKind::Neither;
  std::optional<CliqueSplit> split;
};

inline GsResult generalized_split_test(const Graph& g, const RecognitionOptions& opts = {}) {
  if (auto s = unipolar_test(g, opts)) return {GsKind::Unipolar, std::move(s)};
  if (auto s = unipolar_test(complement(g), opts)) return {GsKind::CoUnipolar, std::move(s)};
  return {};
}

inline const char* to_string(GsKind kind) {
  switch (kind) {
    case GsKind::Unipolar: return "UNIPOLAR";
    case GsKind::CoUnipolar: return "CO-UNIPOLAR";
    case GsKind::Neither: return "NOT-GENERALIZED-SPLIT";
  }
  return "";
}

namespace io {

inline void write_split(std::ostream& out, const CliqueSplit& cs) {
  out << "center:";
  for (Vertex v : cs.center) out << ' ' << v;
  out << '\n';
  for (std::size_t i = 0; i < cs.peripherals.size(); ++i) {
    out << "clique " << i + 1 << ':';
    for (Vertex v : cs.peripherals[i]) out << ' ' << v;
    out << '\n';
  }
}

/// The `recognize` report: a classification line, then the certificate.
inline void write_gs_result(std::ostream& out, const GsResult& r) {
  out << to_string(r.kind) << '\n';
  if (r.split) write_split(out, *r.split);
}

/// Parses a split file in the `recognize` output layout. The leading
/// classification line is optional; CO-UNIPOLAR marks a split of the
/// complement.
inline GsResult read_split(std::istream& in) {
  GsResult r{GsKind::Unipolar, CliqueSplit{}};
  bool have_center = false;
  std::size_t expected = 1;
  for (auto& [line_no, text] : detail::data_lines(in)) {
    auto bad = [&](const std::string& what) {
      return Error("split line " + std::to_string(line_no) + ": " + what);
    };
    if (text == "UNIPOLAR" || text == "CO-UNIPOLAR") {
      if (have_center) throw bad("classification after center");
      r.kind = text == "UNIPOLAR" ? GsKind::Unipolar : GsKind::CoUnipolar;
      continue;
    }
    auto colon = text.find(':');
    if (colon == std::string::npos) throw bad("expected `center:` or `clique i:`");
    std::string head = text.substr(0, colon);
    std::istringstream tokens(text.substr(colon + 1));
    std::vector<Vertex> members;
    std::string tok;
    while (tokens >> tok) {
      auto nums = detail::parse_numbers(tok, line_no);
      if (nums.size() != 1) throw bad("bad vertex " + tok);
      members.push_back(static_cast<Vertex>(nums[0]));
    }
    if (head == "center") {
      if (have_center) throw bad("duplicate center");
      have_center = true;
      r.split->center = make_vertex_set(members);
    } else if (head == "clique " + std::to_string(expected)) {
      if (!have_center) throw bad("clique before center");
      r.split->peripherals.push_back(make_vertex_set(members));
      ++expected;
    } else {
      throw bad("unexpected `" + head + "`");
    }
  }
  if (!have_center) throw Error("split file has no center line");
  return r;
}

}  // namespace io

}  // namespace gsplit
