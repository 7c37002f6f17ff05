#pragma once

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "gsplit/graph.hpp"

namespace gsplit::twosat {

/// Literal encoding: variable v is 2v when true, 2v+1 when negated.
using Literal = int;

constexpr Literal pos(int var) { return 2 * var; }
constexpr Literal neg(int var) { return 2 * var + 1; }
constexpr Literal negate(Literal l) { return l ^ 1; }
constexpr int variable(Literal l) { return l >> 1; }

struct Instance {
  int var_count = 0;
  std::vector<std::pair<Literal, Literal>> clauses;

  void add(Literal a, Literal b) {
    if (variable(a) >= var_count || variable(b) >= var_count || a < 0 || b < 0) {
      throw Error("2-SAT literal out of range");
    }
    clauses.emplace_back(a, b);
  }
  /// Unit clause, written (l + l).
  void add_unit(Literal a) { add(a, a); }
};

using Assignment = std::vector<bool>;

inline bool satisfies(const Instance& inst, const Assignment& a) {
  auto value = [&](Literal l) { return a[variable(l)] != static_cast<bool>(l & 1); };
  for (auto [x, y] : inst.clauses)
    if (!value(x) && !value(y)) return false;
  return true;
}

/// Implication graph + iterative Tarjan SCC. Tarjan emits components in
/// reverse topological order, so variable v is true iff the component of
/// its positive literal is emitted before that of its negation.
inline std::optional<Assignment> solve(const Instance& inst) {
  const int nodes = 2 * inst.var_count;
  std::vector<std::vector<Literal>> implies(nodes);
  for (auto [a, b] : inst.clauses) {
    implies[negate(a)].push_back(b);
    implies[negate(b)].push_back(a);
  }

  std::vector<int> index(nodes, -1), low(nodes, 0), comp(nodes, -1);
  std::vector<Literal> stack;
  std::vector<char> on_stack(nodes, 0);
  std::vector<std::pair<Literal, std::size_t>> call;  // (node, next edge)
  int counter = 0, comp_count = 0;

  for (Literal root = 0; root < nodes; ++root) {
    if (index[root] != -1) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < implies[v].size()) {
        Literal w = implies[v][next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      Literal done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        Literal w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comp_count;
        } while (w != done);
        ++comp_count;
      }
    }
  }

  Assignment out(inst.var_count);
  for (int v = 0; v < inst.var_count; ++v) {
    if (comp[pos(v)] == comp[neg(v)]) return std::nullopt;
    out[v] = comp[pos(v)] < comp[neg(v)];
  }
  return out;
}

/// DIMACS-style dump: `p cnf <vars> <clauses>`, literals as +-(v+1).
inline void write_dimacs(std::ostream& out, const Instance& inst) {
  auto lit = [](Literal l) { return (l & 1) ? -(variable(l) + 1) : variable(l) + 1; };
  out << "p cnf " << inst.var_count << ' ' << inst.clauses.size() << '\n';
  for (auto [a, b] : inst.clauses) out << lit(a) << ' ' << lit(b) << " 0\n";
}

}  // namespace gsplit::twosat
