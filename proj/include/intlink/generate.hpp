#pragma once

// Deterministic random instances. Everything is rejection sampling over
// integer coordinates in [-B, B] driven by one SplitMix64 stream per call.

#include <intlink/embedding.hpp>
#include <intlink/errors.hpp>
#include <intlink/geometry.hpp>
#include <intlink/graph.hpp>
#include <intlink/random.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace intlink {

struct RunConfig {
  std::uint64_t seed = 0;
  int max_tries = 10000;
  std::int64_t bound = 1000;
};

/// Parsed or generated instance: a point list or a graph map.
using Instance = std::variant<std::vector<Point3>, std::vector<Point2>, PLEmbedding, PlanarDrawing>;

inline const std::vector<std::string>& generator_kinds() {
  static const std::vector<std::string> kinds{"k6-points",  "k44-linear",  "k6-pl-subdivided",
                                              "k5-drawing", "k33-drawing", "polygon-pair"};
  return kinds;
}

namespace gen {

inline Point3 random_point3(SplitMix64& rng, std::int64_t b) {
  const auto x = rng.uniform(-b, b);
  const auto y = rng.uniform(-b, b);
  const auto z = rng.uniform(-b, b);
  return Point3{x, y, z};
}

inline Point2 random_point2(SplitMix64& rng, std::int64_t b) {
  const auto x = rng.uniform(-b, b);
  const auto y = rng.uniform(-b, b);
  return Point2{x, y};
}

inline SearchExhausted exhausted(std::string_view what, int tries) {
  return SearchExhausted("no valid " + std::string(what) + " after " + std::to_string(tries) + " tries");
}

/// n points with no four coplanar. Each try redraws the whole set.
inline std::vector<Point3> gp_points3_sample(SplitMix64& rng, std::size_t n, std::int64_t b, int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    std::vector<Point3> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(random_point3(rng, b));
    if (gp_points3(pts) && std::set<Point3>(pts.begin(), pts.end()).size() == n) return pts;
  }
  throw exhausted("point set", max_tries);
}

/// n points with no three collinear.
inline std::vector<Point2> gp_points2_sample(SplitMix64& rng, std::size_t n, std::int64_t b, int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(random_point2(rng, b));
    if (gp_points2(pts) && std::set<Point2>(pts.begin(), pts.end()).size() == n) return pts;
  }
  throw exhausted("point set", max_tries);
}

/// General-position drawing of g. Vertices are in general position; each edge
/// gets between 0 and max_interior random interior corners.
inline PlanarDrawing random_drawing(const Graph& g, SplitMix64& rng, std::int64_t b, int max_interior,
                                    int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    PlanarDrawing d = straight_map(g, gp_points2_sample(rng, g.vertices().size(), b, max_tries));
    for (auto& [e, r] : d.route) {
      const auto k = rng.uniform(0, max_interior);
      std::vector<Point2> route{r.front()};
      for (std::int64_t i = 0; i < k; ++i) route.push_back(random_point2(rng, b));
      route.push_back(r.back());
      r = std::move(route);
    }
    if (validate_drawing(d).empty()) return d;
  }
  throw exhausted("drawing", max_tries);
}

/// Straight-line embedding of g on points with no four coplanar, which is
/// always a valid embedding.
inline PLEmbedding random_straight_embedding(const Graph& g, SplitMix64& rng, std::int64_t b, int max_tries) {
  return straight_map(g, gp_points3_sample(rng, g.vertices().size(), b, max_tries));
}

/// Replaces every straight edge by a polyline of min_pieces..max_pieces sides
/// whose corners are the evenly spaced points of the segment, rounded down and
/// moved by an integer offset in [-jitter, jitter]^3. Edges are processed in
/// order and each new route is accepted only if the whole embedding stays
/// valid.
inline PLEmbedding jitter_subdivide(PLEmbedding emb, SplitMix64& rng, int min_pieces, int max_pieces,
                                    std::int64_t jitter, int max_tries) {
  auto floor_of = [](const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rational(q);
  };
  const std::vector<Edge> edges = emb.graph.edges();
  for (const Edge& e : edges) {
    const Point3 p = emb.position.at(e.u), q = emb.position.at(e.v);
    bool done = false;
    for (int t = 0; t < max_tries && !done; ++t) {
      const auto n = rng.uniform(min_pieces, max_pieces);
      std::vector<Point3> route{p};
      for (std::int64_t i = 1; i < n; ++i) {
        const Point3 c = lerp(p, q, ratio(i, n));
        const Point3 j = random_point3(rng, jitter);
        route.push_back(Point3{floor_of(c.x) + j.x, floor_of(c.y) + j.y, floor_of(c.z) + j.z});
      }
      route.push_back(q);
      PLEmbedding trial = emb;
      trial.route[e] = std::move(route);
      if (validate_embedding(trial).empty()) {
        emb = std::move(trial);
        done = true;
      }
    }
    if (!done) throw exhausted("route for edge " + to_string(e), max_tries);
  }
  return emb;
}

/// K6 on the moment curve (s t, s t^2, s t^3), t = -3..2, with s chosen so the
/// points fit in [-B/2, B/2], each vertex moved by a small integer offset
/// (general position re-checked), then jitter-subdivided with 2 to 4 sides per
/// edge.
inline PLEmbedding moment_curve_k6_pl(SplitMix64& rng, std::int64_t b, int max_tries) {
  const std::int64_t s = std::max<std::int64_t>(1, b / 54);
  const std::int64_t jitter = std::max<std::int64_t>(1, s / 3);
  std::vector<Point3> pts;
  for (int t = 0; t < max_tries; ++t) {
    pts.clear();
    for (std::int64_t k = -3; k <= 2; ++k) {
      const Point3 j = random_point3(rng, jitter);
      pts.push_back(Point3{s * k + j.x, s * k * k + j.y, s * k * k * k + j.z});
    }
    if (gp_points3(pts)) break;
    if (t + 1 == max_tries) throw exhausted("moment-curve point set", max_tries);
  }
  return jitter_subdivide(straight_map(complete_graph(6), pts), rng, 2, 4, jitter, max_tries);
}

/// Disjoint union of two cycle graphs C_m and C_n (m, n in 3..6) drawn as
/// closed polygons on points in general position.
inline PlanarDrawing polygon_pair(SplitMix64& rng, std::int64_t b, int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    const auto m = static_cast<int>(rng.uniform(3, 6));
    const auto n = static_cast<int>(rng.uniform(3, 6));
    Graph g;
    for (int v = 0; v < m + n; ++v) g.add_vertex(v);
    for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
    for (int v = 0; v < n; ++v) g.add_edge(m + v, m + (v + 1) % n);
    const PlanarDrawing d = straight_map(g, gp_points2_sample(rng, static_cast<std::size_t>(m + n), b, max_tries));
    if (validate_drawing(d).empty()) return d;
  }
  throw exhausted("polygon pair", max_tries);
}

/// The two cycles of a polygon_pair drawing.
inline std::pair<Cycle, Cycle> polygon_pair_cycles(const PlanarDrawing& d) {
  std::vector<Vertex> first{d.graph.vertices().front()};
  for (Vertex prev = -1, cur = first.front();;) {
    const auto nb = d.graph.neighbors(cur);
    const Vertex next = nb[0] != prev ? nb[0] : nb[1];
    if (next == first.front()) break;
    first.push_back(next);
    prev = cur;
    cur = next;
  }
  std::vector<Vertex> second;
  for (Vertex v : d.graph.vertices())
    if (std::find(first.begin(), first.end(), v) == first.end()) second.push_back(v);
  std::vector<Vertex> ordered{second.front()};
  for (Vertex prev = -1, cur = second.front();;) {
    const auto nb = d.graph.neighbors(cur);
    const Vertex next = nb[0] != prev ? nb[0] : nb[1];
    if (next == ordered.front()) break;
    ordered.push_back(next);
    prev = cur;
    cur = next;
  }
  return {Cycle(first), Cycle(ordered)};
}

/// Two drawings of g that agree outside the star of one vertex: the second
/// moves that vertex and redraws its incident edges.
inline std::pair<PlanarDrawing, PlanarDrawing> comparable_pair(const Graph& g, SplitMix64& rng, std::int64_t b,
                                                               int max_interior, int max_tries) {
  const PlanarDrawing d1 = random_drawing(g, rng, b, max_interior, max_tries);
  const Vertex v = g.vertices()[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(g.vertices().size()) - 1))];
  for (int t = 0; t < max_tries; ++t) {
    PlanarDrawing d2 = d1;
    d2.position[v] = random_point2(rng, b);
    for (const Vertex w : g.neighbors(v)) {
      const Edge e(v, w);
      std::vector<Point2> route{d2.position.at(e.u)};
      const auto k = rng.uniform(0, max_interior);
      for (std::int64_t i = 0; i < k; ++i) route.push_back(random_point2(rng, b));
      route.push_back(d2.position.at(e.v));
      d2.route[e] = std::move(route);
    }
    if (validate_drawing(d2).empty()) return {d1, d2};
  }
  throw exhausted("comparable drawing", max_tries);
}

}  // namespace gen

/// Generates an instance of the given kind. Unknown kinds throw
/// std::invalid_argument.
inline Instance generate(std::string_view kind, const RunConfig& cfg) {
  SplitMix64 rng(cfg.seed);
  const auto b = cfg.bound;
  const int tries = cfg.max_tries;
  if (kind == "k6-points") return gen::gp_points3_sample(rng, 6, b, tries);
  if (kind == "k44-linear") return gen::random_straight_embedding(complete_bipartite(4, 4), rng, b, tries);
  if (kind == "k6-pl-subdivided") return gen::moment_curve_k6_pl(rng, b, tries);
  if (kind == "k5-drawing") return gen::random_drawing(complete_graph(5), rng, b, 2, tries);
  if (kind == "k33-drawing") return gen::random_drawing(complete_bipartite(3, 3), rng, b, 2, tries);
  if (kind == "polygon-pair") return gen::polygon_pair(rng, b, tries);
  throw std::invalid_argument("unknown instance kind '" + std::string(kind) + "'");
}

}  // namespace intlink
