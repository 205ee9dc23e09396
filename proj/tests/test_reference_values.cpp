// Values computed by tests/oracles/derive.py, an independent script using
// Python's exact Fraction arithmetic.

#include "support.hpp"

#include <gtest/gtest.h>

using namespace intlink;
using namespace testing_support;

namespace {

PLEmbedding moment_k44() { return straight_map(complete_bipartite(4, 4), moment_curve(8)); }

std::vector<std::pair<Cycle, Cycle>> linked_pairs_along(const PLEmbedding& emb, const Direction3& d) {
  const auto diag = project_orthogonal(emb, d);
  std::vector<std::pair<Cycle, Cycle>> out;
  for (const auto& [a, b] : enumerate_disjoint_cycle_pairs(emb.graph, 4, 4))
    if (lk_from_diagram(diag, a, b) == 1) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST(ReferenceValues, SplitMix64FirstOutputs) {
  SplitMix64 g(0);
  EXPECT_EQ(g.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(g.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(g.next(), 0x06c45d188009454fULL);
}

TEST(ReferenceValues, K6PointsSeedZero) {
  const std::vector<Point3> expected{{-777, -475, 108}, {738, -921, -808}, {613, 22, -791},
                                     {109, -99, 360},   {-265, 854, -266}, {-294, 20, 193}};
  EXPECT_EQ(std::get<std::vector<Point3>>(generate("k6-points", RunConfig{})), expected);
}

TEST(ReferenceValues, MomentCurveK6) {
  EXPECT_TRUE(gp_points3(moment_curve(6)));
  const auto r = oracle_count_linked_pairs(straight_map(complete_graph(6), moment_curve(6)), 3, 3);
  ASSERT_EQ(r.count(), 1u);
  const std::pair<Cycle, Cycle> pair = std::minmax(r.linked[0].first, r.linked[0].second);
  EXPECT_EQ(pair, (std::pair{Cycle({0, 2, 4}), Cycle({1, 3, 5})}));
}

TEST(ReferenceValues, ExampleTriangleSideHits) {
  const auto sides = linked_b().sides();
  const std::vector<Hit> hits{seg_hits_solid_triangle(sides[0], linked_a()), seg_hits_solid_triangle(sides[1], linked_a()),
                              seg_hits_solid_triangle(sides[2], linked_a())};
  EXPECT_EQ(hits, (std::vector<Hit>{Hit::one, Hit::none, Hit::none}));
}

TEST(ReferenceValues, PentagonK5) {
  const std::vector<Point2> pent{{0, 2}, {2, 1}, {1, -2}, {-1, -2}, {-2, 1}};
  EXPECT_TRUE(gp_points2(pent));
  EXPECT_EQ(extract_crossings(pentagon_k5()).size(), 5u);
}

TEST(ReferenceValues, MomentCurveK44) {
  const std::vector<std::pair<Cycle, Cycle>> expected{{Cycle({0, 4, 2, 6}), Cycle({1, 5, 3, 7})},
                                                      {Cycle({0, 5, 2, 7}), Cycle({1, 4, 3, 6})}};
  EXPECT_EQ(enumerate_disjoint_cycle_pairs(moment_k44().graph, 4, 4).size(), 18u);
  for (const Direction3& d : {Direction3(3, 5, 7), Direction3(2, -7, 11)}) {
    auto got = linked_pairs_along(moment_k44(), d);
    for (auto& p : got) p = std::minmax(p.first, p.second);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << to_string(d);
  }
  auto oracle = oracle_count_linked_pairs(moment_k44(), 4, 4).linked;
  for (auto& p : oracle) p = std::minmax(p.first, p.second);
  std::sort(oracle.begin(), oracle.end());
  EXPECT_EQ(oracle, expected);
}
