#pragma once

#include <intlink/intlink.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace testing_support {

using namespace intlink;

inline Rational random_rational(SplitMix64& rng, std::int64_t b = 50) {
  return ratio(rng.uniform(-b, b), rng.uniform(1, 7));
}

inline Point2 random_q2(SplitMix64& rng) { return {random_rational(rng), random_rational(rng)}; }
inline Point3 random_q3(SplitMix64& rng) { return {random_rational(rng), random_rational(rng), random_rational(rng)}; }

inline std::vector<Point3> moment_curve(int n) {
  std::vector<Point3> pts;
  for (int i = 1; i <= n; ++i) pts.push_back(Point3{i, i * i, i * i * i});
  return pts;
}

/// Two triangles on six points with no four coplanar.
struct TrianglePair {
  Triangle3 a, b;
};

inline TrianglePair random_triangle_pair(SplitMix64& rng, std::int64_t b = 20) {
  const auto pts = gen::gp_points3_sample(rng, 6, b, 10000);
  return {Triangle3(pts[0], pts[1], pts[2]), Triangle3(pts[3], pts[4], pts[5])};
}

/// Straight-line map of the two triangles as the graph 0-1-2, 3-4-5.
inline PLEmbedding triangle_pair_embedding(const TrianglePair& t) {
  Graph g;
  for (int v = 0; v < 6; ++v) g.add_vertex(v);
  for (int v = 0; v < 3; ++v) {
    g.add_edge(v, (v + 1) % 3);
    g.add_edge(3 + v, 3 + (v + 1) % 3);
  }
  return straight_map(g, std::vector<Point3>{t.a.a, t.a.b, t.a.c, t.b.a, t.b.b, t.b.c});
}

inline const Cycle& first_triangle() {
  static const Cycle c({0, 1, 2});
  return c;
}
inline const Cycle& second_triangle() {
  static const Cycle c({3, 4, 5});
  return c;
}

/// The pentagon drawing of K5 on the rational near-regular pentagon.
inline PlanarDrawing pentagon_k5() {
  return straight_map(complete_graph(5), std::vector<Point2>{{0, 2}, {2, 1}, {1, -2}, {-1, -2}, {-2, 1}});
}

/// Triangles from the linking examples: only the side (0,0,2)-(0,0,-2) of b
/// meets the solid triangle a, at the origin.
inline Triangle3 linked_a() { return Triangle3({1, 1, 0}, {-1, 2, 0}, {-1, -2, 0}); }
inline Triangle3 linked_b() { return Triangle3({0, 0, 2}, {0, 0, -2}, {5, 0, 1}); }

inline Triangle3 translated(const Triangle3& t, const Point3& by) { return Triangle3(t.a + by, t.b + by, t.c + by); }

inline std::string fixture(const std::string& name) { return std::string(INTLINK_FIXTURES) + "/" + name; }

}  // namespace testing_support
