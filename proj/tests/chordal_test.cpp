#include <gtest/gtest.h>

#include <bit>

#include "gsplit/chordal.hpp"
#include "gsplit/oracle.hpp"

using namespace gsplit;

namespace {

// Induced cycle of length >= 4 by exhaustive search over vertex subsets:
// a subset induces a chordless cycle iff it is connected and 2-regular.
bool brute_chordal(const Graph& g) {
  const int n = g.n();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) < 4) continue;
    VertexSet members = oracle::mask_to_set(s);
    auto sub = induced_subgraph(g, members);
    bool two_regular = true;
    for (Vertex v = 0; v < sub.graph.n(); ++v) two_regular &= sub.graph.degree(v) == 2;
    if (two_regular && connected_components(sub.graph).size() == 1) return false;
  }
  return true;
}

std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
  const int n = g.n();
  std::vector<VertexSet> out;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    VertexSet c = oracle::mask_to_set(s);
    if (!is_clique(g, c)) continue;
    bool maximal = true;
    for (Vertex v = 0; v < n && maximal; ++v)
      if (!(s >> v & 1) && sees(g, v, c)) maximal = false;
    if (maximal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph remove_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges;
  for (auto x : g.edges())
    if (x != e) edges.push_back(x);
  return Graph(g.n(), edges);
}

}  // namespace

TEST(LexM, ChordalInputsNeedNoFill) {
  EXPECT_TRUE(lex_m(oracle::complete_graph(6)).fill.empty());
  EXPECT_TRUE(lex_m(oracle::path_graph(7)).fill.empty());
  Graph tree(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  EXPECT_TRUE(lex_m(tree).fill.empty());
}

TEST(LexM, C4GetsOneDiagonal) {
  Triangulation t = lex_m(oracle::cycle_graph(4));
  EXPECT_EQ(t.fill, (std::vector<Edge>{{0, 2}}));  // golden: highest-index tie-break
  EXPECT_EQ(t.m_fill(), 1);
  EXPECT_EQ(t.m_prime(), 5);
  EXPECT_TRUE(verify_minimal(t));
}

TEST(LexM, C5GetsAFan) {
  Triangulation t = lex_m(oracle::cycle_graph(5));
  EXPECT_EQ(t.fill, (std::vector<Edge>{{0, 2}, {0, 3}}));
  EXPECT_TRUE(verify_minimal(t));
  EXPECT_TRUE(is_perfect_elimination_order(t.filled, t.order));
  // Minimum fill of C5 is 2: no single chord triangulates it.
  for (int a = 0; a < 5; ++a)
    for (int b = a + 2; b < 5; ++b) {
      if (a == 0 && b == 4) continue;
      std::vector<Edge> e = oracle::cycle_graph(5).edges();
      e.emplace_back(a, b);
      EXPECT_FALSE(is_chordal(Graph(5, e)));
    }
}

TEST(LexM, DisconnectedInputKeepsComponentsApart) {
  Graph two_c4(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  Triangulation t = lex_m(two_c4);
  EXPECT_EQ(t.fill.size(), 2u);
  for (auto [u, v] : t.fill) EXPECT_EQ(u < 4, v < 4);
}

TEST(Peo, C4IsNotChordal) { EXPECT_FALSE(peo(oracle::cycle_graph(4))); }

TEST(Peo, K4DeterministicOrder) {
  auto ord = peo(oracle::complete_graph(4));
  ASSERT_TRUE(ord);
  EXPECT_EQ(ord->order, (std::vector<Vertex>{3, 2, 1, 0}));
}

TEST(Peo, P4) {
  auto ord = peo(oracle::path_graph(4));
  ASSERT_TRUE(ord);
  EXPECT_EQ(ord->order, (std::vector<Vertex>{3, 2, 1, 0}));
  EXPECT_TRUE(is_perfect_elimination_order(oracle::path_graph(4), EliminationOrder{{0, 3, 1, 2}}));
  EXPECT_FALSE(is_perfect_elimination_order(oracle::path_graph(4), EliminationOrder{{1, 0, 2, 3}}));
}

TEST(MaximalCliques, Complete) {
  Graph k5 = oracle::complete_graph(5);
  EXPECT_EQ(maximal_cliques_chordal(k5, *peo(k5)), (std::vector<VertexSet>{{0, 1, 2, 3, 4}}));
}

TEST(MaximalCliques, Path) {
  Graph p4 = oracle::path_graph(4);
  EXPECT_EQ(maximal_cliques_chordal(p4, *peo(p4)), (std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(MaximalCliques, TriangulatedC4) {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  EXPECT_EQ(maximal_cliques_chordal(g, *peo(g)), brute_maximal_cliques(g));
  EXPECT_EQ(maximal_cliques_chordal(g, *peo(g)), (std::vector<VertexSet>{{0, 1, 2}, {0, 2, 3}}));
}

TEST(MaximalCliques, RejectsUncertifiedOrder) {
  Graph p4 = oracle::path_graph(4);
  EXPECT_THROW(maximal_cliques_chordal(p4, EliminationOrder{{1, 0, 2, 3}}), Error);
}

TEST(VerifyMinimal, C4Diagonals) {
  Graph c4 = oracle::cycle_graph(4);
  Graph one(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  Graph both(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}});
  EXPECT_TRUE(verify_minimal(Triangulation{c4, {{0, 2}}, one, {}}));
  EXPECT_FALSE(verify_minimal(Triangulation{c4, {{0, 2}, {1, 3}}, both, {}}));
  EXPECT_TRUE(verify_minimal(Triangulation{oracle::path_graph(3), {}, oracle::path_graph(3), {}}));
}

TEST(ChordalProperties, LexMOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    oracle::Rng rng(seed);
    const int n = 1 + static_cast<int>(rng.below(30));
    const double p = 0.1 * (1 + static_cast<int>(rng.below(9)));
    Graph g = oracle::gen_gnp({seed, n, p});
    Triangulation t = lex_m(g);
    ASSERT_TRUE(is_perfect_elimination_order(t.filled, t.order)) << "seed " << seed;
    ASSERT_TRUE(verify_minimal(t)) << "seed " << seed;
    ASSERT_EQ(t.m_prime(), g.m() + t.m_fill());
    auto cliques = maximal_cliques_chordal(t.filled, t.order);
    EXPECT_LE(static_cast<int>(cliques.size()), std::max(n, 1));
  }
}

TEST(ChordalProperties, InclusionMinimalOnSmallGraphs) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    oracle::Rng rng(seed);
    Graph g = oracle::gen_gnp({seed, 2 + static_cast<int>(rng.below(7)), rng.unit()});
    Triangulation t = lex_m(g);
    for (Edge f : t.fill) EXPECT_FALSE(is_chordal(remove_edge(t.filled, f))) << "seed " << seed;
  }
}

TEST(ChordalProperties, PeoAgreesWithInducedCycleSearch) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    oracle::Rng rng(seed);
    Graph g = oracle::gen_gnp({seed, 1 + static_cast<int>(rng.below(8)), rng.unit()});
    EXPECT_EQ(is_chordal(g), brute_chordal(g)) << "seed " << seed;
  }
}

TEST(ChordalProperties, MaximalCliquesMatchBruteForce) {
  int chordal_seen = 0;
  for (std::uint64_t seed = 1; chordal_seen < 300; ++seed) {
    oracle::Rng rng(seed);
    Graph g = oracle::gen_gnp({seed, 1 + static_cast<int>(rng.below(7)), rng.unit()});
    auto ord = peo(g);
    if (!ord) {
      // Triangulate instead so every seed contributes a chordal graph.
      Triangulation t = lex_m(g);
      g = t.filled;
      ord = t.order;
    }
    ++chordal_seen;
    auto cliques = maximal_cliques_chordal(g, *ord);
    EXPECT_EQ(cliques, brute_maximal_cliques(g)) << "seed " << seed;
    EXPECT_LE(static_cast<int>(cliques.size()), std::max(g.n(), 1));
  }
}
