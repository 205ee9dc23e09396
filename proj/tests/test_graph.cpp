#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace intlink;
using namespace testing_support;

TEST(Graph, CompleteGraphs) {
  EXPECT_EQ(complete_graph(6).vertices().size(), 6u);
  EXPECT_EQ(complete_graph(6).edges().size(), 15u);
  EXPECT_EQ(complete_bipartite(4, 4).vertices().size(), 8u);
  EXPECT_EQ(complete_bipartite(4, 4).edges().size(), 16u);
  EXPECT_EQ(complete_graph(1).vertices().size(), 1u);
  EXPECT_EQ(complete_graph(1).edges().size(), 0u);
}

TEST(Graph, RejectsLoopsAndMultiEdges) {
  Graph g({0, 1}, {});
  EXPECT_THROW(g.add_edge(0, 0), GraphError);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), GraphError);
  EXPECT_THROW(g.add_edge(0, 7), GraphError);
  EXPECT_THROW(g.add_vertex(1), GraphError);
}

TEST(Graph, CompleteBipartiteRecognition) {
  const auto parts = as_complete_bipartite(complete_bipartite(4, 4), 4);
  ASSERT_TRUE(parts);
  EXPECT_EQ(parts->first, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(as_complete_bipartite(complete_graph(8), 4));
}

TEST(Cycle, CanonicalForm) {
  EXPECT_EQ(Cycle({3, 1, 2}).vertices(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(Cycle({2, 5, 0, 7}).vertices(), (std::vector<Vertex>{0, 5, 2, 7}));
  EXPECT_EQ(Cycle({4, 2, 7, 0}), Cycle({0, 7, 2, 4}));
  EXPECT_THROW(Cycle({1, 2}), GraphError);
  EXPECT_THROW(Cycle({1, 2, 1}), GraphError);
}

TEST(EnumerateDisjointCyclePairs, Examples) {
  EXPECT_EQ(enumerate_disjoint_cycle_pairs(complete_graph(6), 3, 3).size(), 10u);
  EXPECT_EQ(enumerate_cycles(complete_bipartite(4, 4), 4).size(), 36u);
  EXPECT_EQ(enumerate_disjoint_cycle_pairs(complete_bipartite(4, 4), 4, 4).size(), 18u);
  EXPECT_EQ(enumerate_disjoint_cycle_pairs(complete_graph(4), 3, 3).size(), 0u);
}

TEST(EnumerateDisjointCyclePairs, NoDuplicatesUnderSwap) {
  for (const auto& [g, l1, l2] : {std::tuple{complete_graph(6), 3u, 3u}, std::tuple{complete_bipartite(4, 4), 4u, 4u},
                                  std::tuple{complete_graph(7), 3u, 4u}}) {
    std::set<std::pair<Cycle, Cycle>> seen;
    for (const auto& [a, b] : enumerate_disjoint_cycle_pairs(g, l1, l2)) {
      EXPECT_TRUE(a.disjoint_from(b));
      EXPECT_TRUE(cycle_in_graph(a, g) && cycle_in_graph(b, g));
      EXPECT_EQ(a.length(), l1);
      EXPECT_EQ(b.length(), l2);
      const std::pair<Cycle, Cycle> key = l1 == l2 && b < a ? std::pair{b, a} : std::pair{a, b};
      EXPECT_TRUE(seen.insert(key).second);
    }
  }
}

TEST(Subdivide, MidpointSplit) {
  const PLEmbedding emb = straight_map(complete_graph(2), std::vector<Point3>{{0, 0, 0}, {2, 4, 6}});
  const PLEmbedding s = subdivide(emb, Edge(0, 1), {Point3{1, 2, 3}});
  EXPECT_EQ(s.graph.edges().size(), 2u);
  EXPECT_EQ(s.position.at(2), (Point3{1, 2, 3}));
  EXPECT_EQ(s.route.at(Edge(0, 2)), (std::vector<Point3>{{0, 0, 0}, {1, 2, 3}}));
  EXPECT_EQ(s.route.at(Edge(1, 2)), (std::vector<Point3>{{2, 4, 6}, {1, 2, 3}}));
  EXPECT_EQ(drop_straight_corners(smooth_all(s)), emb);
}

TEST(Subdivide, PointOffRouteRejected) {
  const PLEmbedding emb = straight_map(complete_graph(2), std::vector<Point3>{{0, 0, 0}, {2, 4, 6}});
  EXPECT_THROW(subdivide(emb, Edge(0, 1), {Point3{1, 2, 4}}), PointsNotOnRoute);
  EXPECT_THROW(subdivide(emb, Edge(0, 1), {Point3{0, 0, 0}}), PointsNotOnRoute);
  EXPECT_THROW(subdivide(emb, Edge(0, 1), {Point3{3, 6, 9}}), PointsNotOnRoute);
  EXPECT_THROW(subdivide(emb, Edge(0, 1), {Point3{2, 4, 6} * ratio(3, 4), Point3{2, 4, 6} * ratio(1, 4)}),
               PointsNotOnRoute);
}

TEST(Subdivide, ThenSmoothRoundTripsPolylineRoutes) {
  SplitMix64 rng(31);
  const PLEmbedding pl = gen::moment_curve_k6_pl(rng, 1000, 1000);
  PLEmbedding s = pl;
  for (const Edge& e : pl.graph.edges()) {
    const auto& r = pl.route.at(e);
    if (r.size() > 2) s = subdivide(s, e, {r[1]});
  }
  EXPECT_GT(s.graph.vertices().size(), 6u);
  EXPECT_TRUE(validate_embedding(s).empty());
  EXPECT_EQ(smooth_all(s), pl);
}

TEST(ValidateEmbedding, Examples) {
  EXPECT_TRUE(validate_embedding(straight_map(complete_graph(6), moment_curve(6))).empty());

  Graph g({0, 1, 2, 3}, {{0, 1}, {2, 3}});
  PLEmbedding crossing = straight_map(g, std::vector<Point3>{{-1, 0, 0}, {1, 0, 0}, {0, -1, 1}, {0, 1, 1}});
  crossing.route[Edge(2, 3)] = {{0, -1, 1}, {0, 0, 0}, {0, 1, 1}};
  const auto v = validate_embedding(crossing);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().edge1, std::make_pair(0, 1));
  EXPECT_EQ(v.front().edge2, std::make_pair(2, 3));

  Graph h({0, 1, 2}, {{0, 1}});
  const PLEmbedding through = straight_map(h, std::vector<Point3>{{0, 0, 0}, {2, 2, 2}, {1, 1, 1}});
  EXPECT_FALSE(validate_embedding(through).empty());
}

TEST(ValidateDrawing, Examples) {
  EXPECT_TRUE(validate_drawing(pentagon_k5()).empty());

  Graph g({0, 1, 2, 3, 4, 5}, {{0, 1}, {2, 3}, {4, 5}});
  const PlanarDrawing triple = straight_map(g, std::vector<Point2>{{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, -1}, {1, 1}});
  EXPECT_FALSE(validate_drawing(triple).empty());

  Graph h({0, 1, 2}, {{0, 1}});
  const PlanarDrawing on_edge = straight_map(h, std::vector<Point2>{{0, 0}, {2, 0}, {1, 0}});
  EXPECT_FALSE(validate_drawing(on_edge).empty());
}

TEST(ExtractCrossings, Examples) {
  const auto pent = extract_crossings(pentagon_k5());
  EXPECT_EQ(pent.size(), 5u);
  for (const auto& c : pent) EXPECT_FALSE(c.adjacent);

  const PlanarDrawing k4 = straight_map(complete_graph(4), std::vector<Point2>{{0, 0}, {6, 0}, {0, 6}, {1, 1}});
  EXPECT_TRUE(extract_crossings(k4).empty());

  Graph g({0, 1, 2, 3}, {{0, 1}, {2, 3}});
  const PlanarDrawing touch = straight_map(g, std::vector<Point2>{{0, 0}, {2, 0}, {1, 0}, {1, 3}});
  EXPECT_THROW(extract_crossings(touch), DrawingNotGeneral);
}

// ---------------------------------------------------------------------------
// Properties

TEST(GraphProperties, SubdivisionPreservesCarrier) {
  SplitMix64 rng(32);
  for (int i = 0; i < 30; ++i) {
    const PLEmbedding emb = gen::random_straight_embedding(complete_graph(4), rng, 50, 1000);
    const Edge e = emb.graph.edges()[static_cast<std::size_t>(rng.uniform(0, 5))];
    const Point3 p = emb.position.at(e.u), q = emb.position.at(e.v);
    const PLEmbedding s = subdivide(emb, e, {lerp(p, q, ratio(1, 3)), lerp(p, q, ratio(4, 5))});
    // Sampled points of the old edge lie on some new route side, and vice versa.
    for (int k = 1; k < 10; ++k) {
      const Point3 x = lerp(p, q, ratio(k, 10));
      bool found = false;
      for (const auto& [f, r] : s.route)
        for (std::size_t j = 0; j + 1 < r.size(); ++j) found = found || on_segment3(x, r[j], r[j + 1]);
      EXPECT_TRUE(found);
    }
    for (const auto& [f, r] : s.route)
      for (std::size_t j = 0; j + 1 < r.size(); ++j) {
        const Point3 mid = lerp(r[j], r[j + 1], ratio(1, 2));
        bool found = false;
        for (const auto& [g, r0] : emb.route) found = found || on_segment3(mid, r0.front(), r0.back());
        EXPECT_TRUE(found);
      }
  }
}

TEST(GraphProperties, StraightEmbeddingsOnGeneralPositionPointsAreValid) {
  SplitMix64 rng(33);
  for (int i = 0; i < 100; ++i) {
    const auto pts = gen::gp_points3_sample(rng, 7, 40, 1000);
    EXPECT_TRUE(validate_embedding(straight_map(complete_graph(7), pts)).empty());
  }
}

TEST(GraphProperties, DisjointClosedRoutesCrossEvenly) {
  SplitMix64 rng(34);
  for (int i = 0; i < 200; ++i) {
    const PlanarDrawing d = gen::polygon_pair(rng, 1000, 1000);
    const auto [c1, c2] = gen::polygon_pair_cycles(d);
    EXPECT_EQ(crossing_count(extract_crossings(d), c1.edges(), c2.edges()) % 2, 0);
  }
}
