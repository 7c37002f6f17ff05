#include <gtest/gtest.h>

#include "gsplit/optimize.hpp"
#include "gsplit/oracle.hpp"

using namespace gsplit;

namespace {

Graph prism() { return complement(oracle::cycle_graph(6)); }
const CliqueSplit kPrismSplit{{0, 2, 4}, {{1, 3, 5}}};
const CliqueSplit kP5Split{{2, 3}, {{0, 1}, {4}}};

}  // namespace

TEST(MaxIndependentSet, Prism) {
  VertexSet s = max_independent_set_unipolar(prism(), kPrismSplit);
  EXPECT_EQ(s, (VertexSet{0, 1}));
  EXPECT_EQ(static_cast<int>(s.size()), oracle::brute_alpha(prism()));
}

TEST(MaxIndependentSet, P5) {
  EXPECT_EQ(max_independent_set_unipolar(oracle::path_graph(5), kP5Split), (VertexSet{0, 2, 4}));
}

TEST(MaxIndependentSet, CliqueHasAlphaOne) {
  auto s = max_independent_set_unipolar(oracle::complete_graph(5), CliqueSplit{{0, 1, 2, 3, 4}, {}});
  EXPECT_EQ(s.size(), 1u);
}

TEST(MaxClique, Prism) { EXPECT_EQ(max_clique_unipolar(prism(), kPrismSplit), (VertexSet{1, 3, 5})); }

TEST(MaxClique, P5) { EXPECT_EQ(max_clique_unipolar(oracle::path_graph(5), kP5Split), (VertexSet{0, 1})); }

TEST(MaxClique, NoPeripheralsReturnsCenter) {
  EXPECT_EQ(max_clique_unipolar(oracle::complete_graph(4), CliqueSplit{{0, 1, 2, 3}, {}}),
            (VertexSet{0, 1, 2, 3}));
}

TEST(MaxClique, CenterPlusPeripheral) {
  // K3 center {0,1,2}, peripheral {3,4} fully joined to 0 and 1.
  Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {0, 3}, {0, 4}, {1, 3}, {1, 4}});
  VertexSet c = max_clique_unipolar(g, CliqueSplit{{0, 1, 2}, {{3, 4}}});
  EXPECT_EQ(c, (VertexSet{0, 1, 3, 4}));
}

TEST(CliqueCover, Prism) {
  CliqueCover c = min_clique_cover_unipolar(prism(), kPrismSplit);
  EXPECT_EQ(c.parts, (std::vector<VertexSet>{{0, 2, 4}, {1, 3, 5}}));
}

TEST(CliqueCover, P5UsesTheSplit) {
  CliqueCover c = min_clique_cover_unipolar(oracle::path_graph(5), kP5Split);
  EXPECT_EQ(c.parts, (std::vector<VertexSet>{{0, 1}, {2, 3}, {4}}));
  EXPECT_EQ(static_cast<int>(c.parts.size()), oracle::brute_theta(oracle::path_graph(5)));
}

TEST(CliqueCover, CenterAbsorbedIntoPeripherals) {
  // Every center vertex sees a peripheral fully, so theta = k.
  Graph g(4, {{0, 1}, {0, 2}, {1, 3}});
  CliqueCover c = min_clique_cover_unipolar(g, CliqueSplit{{0, 1}, {{2}, {3}}});
  EXPECT_EQ(c.parts.size(), 2u);
  EXPECT_TRUE(is_clique_cover(g, c));
}

TEST(Coloring, Prism) {
  Coloring c = min_coloring_unipolar(prism(), kPrismSplit);
  EXPECT_EQ(c.color, (std::vector<int>{1, 1, 2, 2, 3, 3}));
  EXPECT_EQ(c.palette_size, 3);
}

TEST(Coloring, P5) {
  Coloring c = min_coloring_unipolar(oracle::path_graph(5), kP5Split);
  EXPECT_EQ(c.color, (std::vector<int>{1, 2, 1, 2, 1}));
  EXPECT_EQ(c.palette_size, 2);
}

TEST(Coloring, Validators) {
  Graph p3 = oracle::path_graph(3);
  EXPECT_TRUE(is_proper_coloring(p3, Coloring{{1, 2, 1}, 2}));
  EXPECT_FALSE(is_proper_coloring(p3, Coloring{{1, 1, 2}, 2}));
  EXPECT_FALSE(is_proper_coloring(p3, Coloring{{1, 3, 1}, 3}));  // color 2 unused
  EXPECT_FALSE(is_clique_cover(p3, CliqueCover{{{0, 2}, {1}}}));
  EXPECT_FALSE(is_clique_cover(p3, CliqueCover{{{0, 1}}}));
}

TEST(Solvers, RejectInvalidSplit) {
  CliqueSplit bad{{0}, {{1}, {2}, {3}}};
  EXPECT_THROW(max_independent_set_unipolar(oracle::cycle_graph(4), bad), Error);
  EXPECT_THROW(min_coloring_unipolar(oracle::cycle_graph(4), bad), Error);
  EXPECT_THROW(gs_max_clique(oracle::g_c(), GsResult{GsKind::Neither, std::nullopt}), Error);
}

TEST(GeneralizedSplitSolvers, C6) {
  Graph c6 = oracle::cycle_graph(6);
  GsResult r = generalized_split_test(c6);
  ASSERT_EQ(r.kind, GsKind::CoUnipolar);
  EXPECT_EQ(gs_max_independent_set(c6, r), (VertexSet{1, 3, 5}));
  EXPECT_EQ(gs_max_clique(c6, r).size(), 2u);
  EXPECT_EQ(gs_min_clique_cover(c6, r).parts.size(), 3u);
  EXPECT_EQ(gs_min_coloring(c6, r).palette_size, 2);
}

TEST(GeneralizedSplitSolvers, NamedOptima) {
  struct Case {
    Graph g;
    int alpha, omega, chi, theta;
  };
  const std::vector<Case> cases{
      {prism(), 2, 3, 3, 2},
      {oracle::path_graph(5), 3, 2, 2, 3},
      {oracle::cycle_graph(6), 3, 2, 2, 3},
      {oracle::complete_graph(4), 1, 4, 4, 1},
  };
  for (const auto& c : cases) {
    GsResult r = generalized_split_test(c.g);
    ASSERT_NE(r.kind, GsKind::Neither);
    EXPECT_EQ(static_cast<int>(gs_max_independent_set(c.g, r).size()), c.alpha);
    EXPECT_EQ(static_cast<int>(gs_max_clique(c.g, r).size()), c.omega);
    EXPECT_EQ(gs_min_coloring(c.g, r).palette_size, c.chi);
    EXPECT_EQ(static_cast<int>(gs_min_clique_cover(c.g, r).parts.size()), c.theta);
  }
}

TEST(GeneralizedSplitSolvers, RecognizeForPrefersTheDirectSide) {
  // P5 is both unipolar and co-unipolar.
  Graph p5 = oracle::path_graph(5);
  EXPECT_EQ(recognize_for(p5, Problem::Mis).kind, GsKind::Unipolar);
  EXPECT_EQ(recognize_for(p5, Problem::Cover).kind, GsKind::Unipolar);
  EXPECT_EQ(recognize_for(p5, Problem::Clique).kind, GsKind::CoUnipolar);
  EXPECT_EQ(recognize_for(p5, Problem::Coloring).kind, GsKind::CoUnipolar);
  EXPECT_EQ(recognize_for(oracle::g_c(), Problem::Mis).kind, GsKind::Neither);
}

TEST(OptimizeProperties, MatchBruteForceAndPerfection) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    oracle::Rng rng(seed);
    oracle::GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.n = 1 + static_cast<int>(rng.below(11));
    cfg.k = static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.n) + 1));
    cfg.q = rng.unit();
    auto planted = oracle::gen_random_unipolar(cfg);
    ASSERT_TRUE(validate_clique_split(planted.graph, planted.split));
    for (const Graph& g : {planted.graph, complement(planted.graph)}) {
      for (Problem p : {Problem::Mis, Problem::Clique, Problem::Cover, Problem::Coloring}) {
        EXPECT_NE(recognize_for(g, p).kind, GsKind::Neither);
      }
      GsResult r = generalized_split_test(g);
      ASSERT_NE(r.kind, GsKind::Neither) << "seed " << seed;
      VertexSet mis = gs_max_independent_set(g, r);
      VertexSet clique = gs_max_clique(g, r);
      CliqueCover cover = gs_min_clique_cover(g, r);
      Coloring col = gs_min_coloring(g, r);
      ASSERT_TRUE(is_independent(g, mis));
      ASSERT_TRUE(is_clique(g, clique));
      ASSERT_TRUE(is_clique_cover(g, cover));
      ASSERT_TRUE(is_proper_coloring(g, col));
      const int alpha = oracle::brute_alpha(g), omega = oracle::brute_omega(g);
      EXPECT_EQ(static_cast<int>(mis.size()), alpha) << "seed " << seed;
      EXPECT_EQ(static_cast<int>(clique.size()), omega) << "seed " << seed;
      EXPECT_EQ(static_cast<int>(cover.parts.size()), alpha) << "seed " << seed;
      EXPECT_EQ(col.palette_size, omega) << "seed " << seed;
    }
  }
}
