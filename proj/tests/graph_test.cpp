#include "oracles.hpp"

#include "rowspace/families.hpp"
#include "rowspace/graph.hpp"
#include "rowspace/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

namespace rowspace {
namespace {

namespace fam = families;

TEST(Degree, CompleteStarPetersen) {
  const Graph k4 = fam::complete(4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(degree(k4, v), 3u);
  EXPECT_EQ(degree(fam::figure1_gamma1(), 0), 4u);
  const Graph p = fam::petersen();
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(degree(p, v), 3u);
  EXPECT_THROW(degree(k4, 4), std::out_of_range);
}

TEST(Graph, RejectsLoopsAndAsymmetry) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_matrix({{0, 1}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(0), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 2}}), std::out_of_range);
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(fam::path(5)), 4u);
  EXPECT_EQ(diameter(Graph(1)), 0u);
  EXPECT_EQ(diameter(Graph(3, {{0, 1}})), kInfinite);
  const Graph g2 = fam::figure1_gamma2();
  EXPECT_EQ(diameter(g2), test::reference_diameter(g2));
  EXPECT_EQ(diameter(g2), 2u);
}

TEST(Diameter, CompleteBlowUpIsTwo) {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<std::size_t> m(n, 1);
    m[n - 1] = 3;
    EXPECT_EQ(diameter(multiply_vertices(fam::complete(n), MultiplicityVector(m))), 2u) << n;
  }
}

TEST(Diameter, MatchesFloydWarshallOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Graph g = test::random_graph(1 + rng() % 9, 0.35, rng);
    EXPECT_EQ(diameter(g), test::reference_diameter(g));
    EXPECT_EQ(is_connected(g), test::reference_connected(g));
    // diameter 1 exactly for complete graphs with n >= 2
    EXPECT_EQ(diameter(g) == 1, g.order() >= 2 && is_complete(g));
  }
}

TEST(DiametralGeodesic, PathCycleComplete) {
  auto p5 = diametral_geodesic(fam::path(5));
  EXPECT_EQ(p5.ell, 4u);
  EXPECT_EQ(p5.path, (std::vector<Vertex>{0, 1, 2, 3, 4}));

  // C9: smallest antipodal pair is (0, 4).
  auto c9 = diametral_geodesic(fam::cycle(9));
  EXPECT_EQ(c9.ell, 4u);
  EXPECT_EQ(c9.path, (std::vector<Vertex>{0, 1, 2, 3, 4}));

  auto k4 = diametral_geodesic(fam::complete(4));
  EXPECT_EQ(k4.ell, 1u);
  EXPECT_EQ(k4.path, (std::vector<Vertex>{0, 1}));

  EXPECT_THROW(diametral_geodesic(Graph(3, {{0, 1}})), StructuralError);
}

TEST(DiametralGeodesic, IsAShortestPathOfDiameterLength) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 150; ++t) {
    const Graph g = test::random_connected_graph(2 + rng() % 8, 0.3, rng);
    const auto ctx = diametral_geodesic(g);
    const auto d = test::floyd_warshall(g);
    ASSERT_EQ(ctx.path.size(), ctx.ell + 1);
    EXPECT_EQ(ctx.ell, test::reference_diameter(g));
    EXPECT_EQ(d[ctx.path.front()][ctx.path.back()], ctx.ell);
    for (std::size_t k = 0; k + 1 < ctx.path.size(); ++k) EXPECT_TRUE(g.adjacent(ctx.path[k], ctx.path[k + 1]));
  }
}

TEST(MultiplyVertices, SmallCases) {
  const Graph k2 = fam::complete(2);
  const Graph star = multiply_vertices(k2, MultiplicityVector({2, 1}));
  EXPECT_EQ(star, Graph(3, {{0, 2}, {1, 2}}));
  EXPECT_EQ(multiply_vertices(fam::complete(3), MultiplicityVector::ones(3)), fam::complete(3));

  const Graph c5m = multiply_vertices(fam::cycle(5), MultiplicityVector({2, 2, 2, 1, 1}));
  EXPECT_EQ(c5m.order(), 8u);
  EXPECT_EQ(diameter(c5m), 2u);
  EXPECT_EQ(rank(adjacency_matrix(c5m)), 5u);
}

TEST(MultiplyVertices, Errors) {
  EXPECT_THROW(multiply_vertices(fam::complete(3), MultiplicityVector({1, 1})), std::invalid_argument);
  EXPECT_THROW(MultiplicityVector({1, 0, 1}), std::invalid_argument);
}

TEST(MultiplyVertices, BlocksAreIndependentAndFullyJoined) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Graph g = test::random_graph(1 + rng() % 6, 0.5, rng);
    std::vector<std::size_t> mv;
    for (std::size_t i = 0; i < g.order(); ++i) mv.push_back(1 + rng() % 3);
    const MultiplicityVector m(mv);
    const Graph b = multiply_vertices(g, m);
    const auto block = m.block_of();
    ASSERT_EQ(b.order(), m.total());
    for (Vertex u = 0; u < b.order(); ++u)
      for (Vertex v = 0; v < b.order(); ++v)
        EXPECT_EQ(b.adjacent(u, v), block[u] != block[v] && g.adjacent(block[u], block[v]));
  }
}

TEST(DuplicateVertex, MatchesMultiplicationUpToAppendedLabel) {
  EXPECT_EQ(duplicate_vertex(fam::complete(2), 0), Graph(3, {{0, 1}, {1, 2}}));
  const Graph c5 = fam::cycle(5);
  for (Vertex v = 0; v < 5; ++v) {
    const Graph dup = duplicate_vertex(c5, v);
    std::vector<std::size_t> m(5, 1);
    m[v] = 2;
    const Graph mult = multiply_vertices(c5, MultiplicityVector(m));
    // multiply_vertices places the clone at v+1; move it to the end.
    std::vector<Vertex> order;
    for (Vertex k = 0; k < 6; ++k)
      if (k != v + 1) order.push_back(k);
    order.push_back(v + 1);
    EXPECT_EQ(permute(mult, order), dup);
  }
  const Graph p4 = fam::path(4);
  EXPECT_EQ(rank(adjacency_matrix(duplicate_vertex(p4, 0))), 4u);
  EXPECT_THROW(duplicate_vertex(p4, 9), std::out_of_range);
}

TEST(AdjacentDisjointPair, Examples) {
  EXPECT_EQ(find_adjacent_disjoint_pair(fam::complete(3)), std::nullopt);
  EXPECT_EQ(find_adjacent_disjoint_pair(fam::cycle(5)), (Edge{0, 1}));
  // paw: 0,1,2 triangle with pendant 3 on 2; the pendant edge is the only one
  EXPECT_EQ(find_adjacent_disjoint_pair(fam::paw()), (Edge{2, 3}));
  EXPECT_EQ(find_adjacent_disjoint_pair(fam::figure1_gamma1()), (Edge{0, 1}));
}

TEST(AdjacentDisjointPair, PendantEdgeAlwaysQualifies) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const Graph g = test::random_connected_graph(2 + rng() % 7, 0.4, rng);
    bool has_pendant = false;
    for (Vertex v = 0; v < g.order(); ++v) has_pendant = has_pendant || degree(g, v) == 1;
    if (has_pendant) {
      EXPECT_TRUE(find_adjacent_disjoint_pair(g).has_value());
    }
  }
}

TEST(AdjacentDisjointPair, SurvivesMultiplication) {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 100) {
    const Graph g = test::random_connected_graph(2 + rng() % 6, 0.45, rng);
    if (!find_adjacent_disjoint_pair(g)) continue;
    std::vector<std::size_t> mv;
    for (std::size_t i = 0; i < g.order(); ++i) mv.push_back(1 + rng() % 3);
    EXPECT_TRUE(find_adjacent_disjoint_pair(multiply_vertices(g, MultiplicityVector(mv))).has_value());
    ++checked;
  }
}

TEST(Dominating, Examples) {
  EXPECT_TRUE(is_dominating(fam::figure1_gamma1(), 0));
  EXPECT_FALSE(is_dominating(fam::figure1_gamma1(), 1));
  for (Vertex v = 0; v < 5; ++v) EXPECT_FALSE(is_dominating(fam::cycle(5), v));
  EXPECT_TRUE(is_dominating(fam::wheel(9), 0));
  EXPECT_THROW(is_dominating(fam::cycle(5), 5), std::out_of_range);
}

TEST(Reduced, Examples) {
  EXPECT_TRUE(is_reduced(fam::cycle(5)));
  EXPECT_FALSE(is_reduced(multiply_vertices(fam::complete(2), MultiplicityVector({2, 1}))));
  EXPECT_TRUE(is_reduced(fam::petersen()));

  // pairwise neighborhood comparison by hand
  const Graph p = test::kneser_petersen();
  bool distinct = true;
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = u + 1; v < 10; ++v) distinct = distinct && p.neighbors(u) != p.neighbors(v);
  EXPECT_TRUE(distinct);
}

TEST(ContractTwins, RecoversTheBlowUp) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    const Graph g = test::random_connected_graph(2 + rng() % 5, 0.5, rng);
    if (!is_reduced(g)) continue;
    std::vector<std::size_t> mv;
    for (std::size_t i = 0; i < g.order(); ++i) mv.push_back(1 + rng() % 3);
    const MultiplicityVector m(mv);
    const TwinQuotient q = contract_twins(multiply_vertices(g, m));
    EXPECT_EQ(q.reduced, g);
    EXPECT_EQ(q.multiplicity.values(), m.values());
    EXPECT_TRUE(is_reduced(q.reduced));
  }
}

TEST(Components, DisconnectedGraph) {
  const Graph g(6, {{0, 3}, {3, 5}, {1, 2}});
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 3, 5}));
  EXPECT_EQ(comps[1], (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(comps[2], (std::vector<Vertex>{4}));
}

}  // namespace
}  // namespace rowspace
