#pragma once

// The van Kampen invariant of planar drawings, the three linked-cycle
// finders (linear K6, piecewise-linear K6, piecewise-linear K4,4) together
// with the parity sums their correctness rests on, and a brute-force oracle
// that checks linkedness of every disjoint cycle pair from first definitions.

#include <intlink/embedding.hpp>
#include <intlink/errors.hpp>
#include <intlink/geometry.hpp>
#include <intlink/graph.hpp>
#include <intlink/linking.hpp>
#include <intlink/projection.hpp>
#include <intlink/random.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace intlink {

// ---------------------------------------------------------------------------
// van Kampen invariant

/// Parity of the number of crossings among all pairs of vertex-disjoint
/// segments spanned by the points (classically five points).
inline int van_kampen_points(std::span<const Point2> points) {
  if (!gp_points2(points)) throw GeneralPositionViolation("three of the points are collinear");
  const std::size_t n = points.size();
  std::vector<std::pair<std::size_t, std::size_t>> segs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) segs.emplace_back(i, j);
  int count = 0;
  for (std::size_t s = 0; s < segs.size(); ++s)
    for (std::size_t t = s + 1; t < segs.size(); ++t) {
      const auto [a, b] = segs[s];
      const auto [c, d] = segs[t];
      if (a == c || a == d || b == c || b == d) continue;
      const auto hit = seg_intersect2(Segment2(points[a], points[b]), Segment2(points[c], points[d]));
      count += hit.kind == SegmentIntersection::Kind::point ? 1 : 0;
    }
  return count % 2;
}

/// Parity of crossings between routes of vertex-disjoint edges.
inline int van_kampen_drawing(const PlanarDrawing& d) {
  int count = 0;
  for (const auto& c : extract_crossings(d)) count += c.adjacent ? 0 : 1;
  return count % 2;
}

/// True iff the two drawings have equal van Kampen invariants. They must be
/// drawings of the same graph that agree everywhere except on the star of a
/// single vertex (its position and its incident edge routes).
inline bool vk_invariance_probe(const PlanarDrawing& d1, const PlanarDrawing& d2) {
  if (!(d1.graph == d2.graph)) throw DrawingsNotComparable("drawings are of different graphs");
  std::vector<Vertex> candidates = d1.graph.vertices();
  auto restrict_to = [&](auto&& keep) { std::erase_if(candidates, [&](Vertex v) { return !keep(v); }); };
  for (Vertex v : d1.graph.vertices())
    if (!(d1.position.at(v) == d2.position.at(v))) restrict_to([&](Vertex c) { return c == v; });
  for (const Edge& e : d1.graph.edges())
    if (d1.route.at(e) != d2.route.at(e)) restrict_to([&](Vertex c) { return e.touches(c); });
  if (candidates.empty()) throw DrawingsNotComparable("drawings differ on more than one vertex star");
  return van_kampen_drawing(d1) == van_kampen_drawing(d2);
}

// ---------------------------------------------------------------------------
// Reports

enum class LinkMethod { linear_central, pl_orthogonal };

inline std::string_view to_string(LinkMethod m) {
  return m == LinkMethod::linear_central ? "linear-central" : "pl-orthogonal";
}

/// One parity sum from a proof, with its terms.
struct ParityLedger {
  std::string label;
  std::vector<std::pair<std::string, int>> entries;

  void add(std::string term, int bit) { entries.emplace_back(std::move(term), bit & 1); }
  int total() const {
    int t = 0;
    for (const auto& [term, bit] : entries) t ^= bit;
    return t;
  }
};

struct LinkReport {
  Cycle cycle1, cycle2;
  int lk_value = 1;
  LinkMethod method = LinkMethod::linear_central;
  std::optional<bool> oracle_confirmed;
  std::vector<Vertex> removed;            // the apex vertex, or A and B
  std::optional<Direction3> functional;   // linear finder: separating functional
  std::optional<Direction3> direction;    // PL finders: projection direction
  std::vector<ParityLedger> ledgers;

  const ParityLedger& ledger(std::string_view label) const {
    for (const auto& l : ledgers)
      if (l.label == label) return l;
    throw std::out_of_range("no ledger " + std::string(label));
  }
};

namespace detail {

inline void require_total(const ParityLedger& l, int expected) {
  if (l.total() != expected)
    throw InternalParityFailure(l.label + " = " + std::to_string(l.total()) + ", expected " +
                                std::to_string(expected));
}

inline void require_equal(const ParityLedger& a, const ParityLedger& b) {
  if (a.total() != b.total())
    throw InternalParityFailure(a.label + " != " + b.label);
}

inline Cycle other_triangle(const std::vector<Vertex>& five, const Edge& e) {
  std::vector<Vertex> rest;
  for (Vertex v : five)
    if (!e.touches(v)) rest.push_back(v);
  return Cycle(rest);
}

/// Sum over ordered pairs of disjoint edges of lk(e', e).
template <class Lk>
ParityLedger ordered_pair_ledger(const std::vector<Edge>& edges, Lk&& lk) {
  ParityLedger l{"sum_(e',e) lk(e',e)", {}};
  for (const Edge& a : edges)
    for (const Edge& b : edges)
      if (!a.shares_vertex(b)) l.add(to_string(a) + "|" + to_string(b), lk(a, b));
  return l;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Linear K6

/// Given six points in general position, finds two linked triangles with
/// vertices at these points. One point A is made strictly extremal by a
/// linear functional (the first coordinate when its maximum is unique); for
/// each segment e on the other five points, lk(tri_e, e) counts the sides of
/// the complementary triangle tri_e that are higher than e seen from A. The
/// first e (in edge order) with odd count gives the linked pair (A e, tri_e).
inline LinkReport find_linked_triangles_linear(const std::vector<Point3>& points) {
  if (points.size() != 6) throw ValidationError("need exactly six points");
  if (!gp_points3(points)) throw GeneralPositionViolation("four of the points are coplanar");

  auto argmax_unique = [&](const Point3& f) -> std::optional<Vertex> {
    Vertex best = 0;
    for (Vertex i = 1; i < 6; ++i)
      if (dot(points[i], f) > dot(points[best], f)) best = i;
    for (Vertex i = 0; i < 6; ++i)
      if (i != best && dot(points[i], f) == dot(points[best], f)) return std::nullopt;
    return best;
  };
  Direction3 functional(1, 0, 0);
  auto apex = argmax_unique(functional.vector());
  if (!apex) {
    // Tie on the first coordinate: use a generic integer functional taking six
    // distinct values.
    SplitMix64 rng(0);
    for (std::int64_t bound = 4;; bound *= 2) {
      bool found = false;
      for (int k = 0; k < 64 && !found; ++k) {
        const Point3 f{rng.uniform(-bound, bound), rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
        if (is_zero(f)) continue;
        std::set<Rational> values;
        for (const auto& p : points) values.insert(dot(p, f));
        if (values.size() == 6) {
          functional = Direction3(f);
          apex = argmax_unique(functional.vector());
          found = true;
        }
      }
      if (found) break;
    }
  }
  const Vertex a = *apex;
  const ProjectedDiagram diag = project_central_diagram(points, points[a], functional);
  const std::vector<Vertex>& five = diag.drawing.graph.vertices();
  const std::vector<Edge>& edges = diag.drawing.graph.edges();

  auto seg = [&](const Edge& e) { return Segment3(points[e.u], points[e.v]); };
  auto lk = [&](const Edge& upper, const Edge& lower) {
    return higher_central(points[a], seg(upper), seg(lower)) ? 1 : 0;
  };

  LinkReport report;
  report.method = LinkMethod::linear_central;
  report.removed = {a};
  report.functional = functional;

  ParityLedger per_edge{"sum_e lk(tri_e, e)", {}};
  std::optional<Edge> chosen;
  for (const Edge& e : edges) {
    const Cycle tri = detail::other_triangle(five, e);
    int v = 0;
    for (const Edge& side : tri.edges()) v ^= lk(side, e);
    per_edge.add(to_string(e), v);
    if (v == 1 && !chosen) chosen = e;
  }
  ParityLedger pairs = detail::ordered_pair_ledger(edges, lk);
  ParityLedger vk{"v(f)", {}};
  vk.add("central projection", van_kampen_drawing(diag.drawing));

  detail::require_equal(per_edge, pairs);
  detail::require_equal(pairs, vk);
  detail::require_total(vk, 1);
  if (!chosen) throw InternalParityFailure("no edge with lk(tri_e, e) = 1");

  report.cycle1 = Cycle({a, chosen->u, chosen->v});
  report.cycle2 = detail::other_triangle(five, *chosen);
  report.ledgers = {per_edge, pairs, vk};
  return report;
}

// ---------------------------------------------------------------------------
// Piecewise-linear K6 and K4,4

namespace detail {

inline PLEmbedding smoothed_valid(const PLEmbedding& emb) {
  if (auto v = validate_embedding(emb); !v.empty()) throw EmbeddingInvalid("invalid embedding", std::move(v));
  return smooth_all(emb);
}

inline int lk_edges(const ProjectedDiagram& d, const std::vector<Edge>& a, const std::vector<Edge>& b) {
  return lk_from_diagram(d, a, b);
}

}  // namespace detail

/// For a piecewise-linear embedding of K6 (possibly subdivided), removes the
/// first vertex A, projects along a general direction and finds an edge e of
/// the remaining K5 with lk(tri_e, A e) = 1.
///
/// The AE1 and AE2 sums (E1 the smaller end of e) are recorded but not
/// required to vanish separately: only their sum, and its regrouping by the
/// vertex X in {E1, E2}, cancel.
inline LinkReport find_linked_cycles_k6(const PLEmbedding& emb, std::uint64_t seed, int max_tries = 10000) {
  const PLEmbedding m = detail::smoothed_valid(emb);
  if (!is_complete(m.graph, 6)) throw EmbeddingInvalid("graph is not homeomorphic to K6", {});
  const Vertex A = m.graph.vertices().front();
  const Direction3 d = find_general_plane(m, seed, max_tries);
  const ProjectedDiagram diag = project_orthogonal(m, d);

  std::vector<Vertex> five(m.graph.vertices().begin() + 1, m.graph.vertices().end());
  std::vector<Edge> k5;
  for (const Edge& e : m.graph.edges())
    if (!e.touches(A)) k5.push_back(e);

  ParityLedger total{"sum_e lk(tri_e, Ae)", {}}, via1{"sum_e lk(tri_e, AE1)", {}},
      via2{"sum_e lk(tri_e, AE2)", {}}, via{"sum_e lk(tri_e, AE1) + lk(tri_e, AE2)", {}},
      own{"sum_e lk(tri_e, e)", {}};
  std::optional<Edge> chosen;
  for (const Edge& e : k5) {
    const Cycle tri = detail::other_triangle(five, e);
    const Cycle ae({A, e.u, e.v});
    const int v = lk_from_diagram(diag, tri, ae);
    const int v1 = detail::lk_edges(diag, tri.edges(), {Edge(A, e.u)});
    const int v2 = detail::lk_edges(diag, tri.edges(), {Edge(A, e.v)});
    total.add(to_string(e), v);
    via1.add(to_string(e), v1);
    via2.add(to_string(e), v2);
    via.add(to_string(e), v1 ^ v2);
    own.add(to_string(e), detail::lk_edges(diag, tri.edges(), {e}));
    if (v == 1 && !chosen) chosen = e;
  }
  // The cancellation grouped by the vertex X = E1 or E2: every edge of
  // K5 - X lies in exactly two of its triangles.
  std::vector<ParityLedger> by_vertex;
  for (Vertex x : five) {
    ParityLedger l{"sum_(tri in K5-" + std::to_string(x) + ") lk(tri, A" + std::to_string(x) + ")", {}};
    for (const Edge& e : k5)
      if (e.touches(x)) {
        const Cycle tri = detail::other_triangle(five, e);
        l.add(to_string(tri), detail::lk_edges(diag, tri.edges(), {Edge(A, x)}));
      }
    by_vertex.push_back(std::move(l));
  }
  ParityLedger pairs = detail::ordered_pair_ledger(k5, [&](const Edge& a, const Edge& b) {
    return detail::lk_edges(diag, {a}, {b});
  });
  ParityLedger vk{"v(f)", {}};
  vk.add("orthogonal projection of K5", van_kampen_drawing(remove_vertices(diag.drawing, {A})));

  detail::require_total(via, 0);
  for (const auto& l : by_vertex) detail::require_total(l, 0);
  detail::require_equal(total, own);
  detail::require_equal(own, pairs);
  detail::require_equal(pairs, vk);
  detail::require_total(vk, 1);
  if (!chosen) throw InternalParityFailure("no edge with lk(tri_e, Ae) = 1");

  LinkReport report;
  report.method = LinkMethod::pl_orthogonal;
  report.removed = {A};
  report.direction = d;
  report.cycle1 = Cycle({A, chosen->u, chosen->v});
  report.cycle2 = detail::other_triangle(five, *chosen);
  report.ledgers = {total, via1, via2, via};
  report.ledgers.insert(report.ledgers.end(), by_vertex.begin(), by_vertex.end());
  report.ledgers.insert(report.ledgers.end(), {own, pairs, vk});
  return report;
}

/// For a piecewise-linear embedding of K4,4, removes A (least vertex) and B
/// (least vertex of the other part), projects along a general direction and
/// finds an edge e = E1E2 of the remaining K3,3 with lk(tri_e, ABe) = 1, where
/// E1 is on A's side.
inline LinkReport find_linked_cycles_k44(const PLEmbedding& emb, std::uint64_t seed, int max_tries = 10000) {
  const PLEmbedding m = detail::smoothed_valid(emb);
  const auto parts = as_complete_bipartite(m.graph, 4);
  if (!parts) throw EmbeddingInvalid("graph is not homeomorphic to K4,4", {});
  const Vertex A = parts->first.front(), B = parts->second.front();
  const Direction3 d = find_general_plane(m, seed, max_tries);
  const ProjectedDiagram diag = project_orthogonal(m, d);

  const std::vector<Vertex> side_a(parts->first.begin() + 1, parts->first.end());
  const std::vector<Vertex> side_b(parts->second.begin() + 1, parts->second.end());
  auto in_a = [&](Vertex v) { return std::find(side_a.begin(), side_a.end(), v) != side_a.end(); };
  std::vector<Edge> k33;
  for (const Edge& e : m.graph.edges())
    if (!e.touches(A) && !e.touches(B)) k33.push_back(e);

  ParityLedger total{"sum_e lk(tri_e, ABe)", {}}, ab{"sum_e lk(tri_e, AB)", {}}, ae2{"sum_e lk(tri_e, AE2)", {}},
      be1{"sum_e lk(tri_e, BE1)", {}}, own{"sum_e lk(tri_e, e)", {}};
  std::optional<std::pair<Vertex, Vertex>> chosen;
  for (const Edge& e : k33) {
    const Vertex e1 = in_a(e.u) ? e.u : e.v;
    const Vertex e2 = e.other(e1);
    std::vector<Vertex> pa, pb;
    for (Vertex v : side_a)
      if (v != e1) pa.push_back(v);
    for (Vertex v : side_b)
      if (v != e2) pb.push_back(v);
    const Cycle tri({pa[0], pb[0], pa[1], pb[1]});
    const Cycle abe({A, B, e1, e2});
    const int v = lk_from_diagram(diag, tri, abe);
    total.add(to_string(e), v);
    ab.add(to_string(e), detail::lk_edges(diag, tri.edges(), {Edge(A, B)}));
    ae2.add(to_string(e), detail::lk_edges(diag, tri.edges(), {Edge(A, e2)}));
    be1.add(to_string(e), detail::lk_edges(diag, tri.edges(), {Edge(B, e1)}));
    own.add(to_string(e), detail::lk_edges(diag, tri.edges(), {e}));
    if (v == 1 && !chosen) chosen = {e1, e2};
  }
  ParityLedger pairs = detail::ordered_pair_ledger(k33, [&](const Edge& a, const Edge& b) {
    return detail::lk_edges(diag, {a}, {b});
  });
  ParityLedger vk{"v(f)", {}};
  vk.add("orthogonal projection of K3,3", van_kampen_drawing(remove_vertices(diag.drawing, {A, B})));

  detail::require_total(ab, 0);
  detail::require_total(ae2, 0);
  detail::require_total(be1, 0);
  detail::require_equal(total, own);
  detail::require_equal(own, pairs);
  detail::require_equal(pairs, vk);
  detail::require_total(vk, 1);
  if (!chosen) throw InternalParityFailure("no edge with lk(tri_e, ABe) = 1");

  const auto [e1, e2] = *chosen;
  std::vector<Vertex> pa, pb;
  for (Vertex v : side_a)
    if (v != e1) pa.push_back(v);
  for (Vertex v : side_b)
    if (v != e2) pb.push_back(v);

  LinkReport report;
  report.method = LinkMethod::pl_orthogonal;
  report.removed = {A, B};
  report.direction = d;
  report.cycle1 = Cycle({A, B, e1, e2});
  report.cycle2 = Cycle({pa[0], pb[0], pa[1], pb[1]});
  report.ledgers = {total, ab, ae2, be1, own, pairs, vk};
  return report;
}

// ---------------------------------------------------------------------------
// Oracle

/// The closed spatial polygon traced by a cycle of the embedding.
inline SpatialPolyline cycle_polyline(const PLEmbedding& emb, const Cycle& c) {
  std::vector<Point3> pts;
  const auto& vs = c.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vertex from = vs[i], to = vs[(i + 1) % vs.size()];
    const auto r = emb.route_from(Edge(from, to), from);
    pts.insert(pts.end(), r.begin(), r.end() - 1);
  }
  return SpatialPolyline::normalized(std::move(pts), true);
}

/// Integer apex in general position to (a, b), sampled from a cube around the
/// polylines that doubles in size every 64 rejections.
inline Point3 sample_general_apex(const SpatialPolyline& a, const SpatialPolyline& b, std::uint64_t seed,
                                  int max_tries = 4000) {
  mpz_class extent = 1;
  for (const auto* poly : {&a, &b})
    for (const auto& p : poly->vertices())
      for (const Rational* c : {&p.x, &p.y, &p.z}) {
        mpz_class r = abs(c->get_num()) / c->get_den() + 1;
        if (r > extent) extent = r;
      }
  std::int64_t bound = extent.fits_slong_p() ? 2 * extent.get_si() + 8 : (std::int64_t{1} << 40);
  SplitMix64 rng(seed);
  for (int i = 0; i < max_tries; ++i) {
    const Point3 apex{rng.uniform(-bound, bound), rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
    if (apex_general_position(apex, a, b)) return apex;
    if ((i + 1) % 64 == 0 && bound < (std::int64_t{1} << 40)) bound *= 2;
  }
  throw ApexSearchExhausted("no general apex after " + std::to_string(max_tries) + " tries");
}

/// Cone-based linking parity of two disjoint cycles of the embedding.
inline int cycle_linking_parity(const PLEmbedding& emb, const Cycle& c1, const Cycle& c2, std::uint64_t seed) {
  const SpatialPolyline a = cycle_polyline(emb, c1), b = cycle_polyline(emb, c2);
  return linking_mod2_cone(a, b, sample_general_apex(a, b, seed));
}

struct OracleResult {
  std::size_t pairs_examined = 0;
  std::vector<std::pair<Cycle, Cycle>> linked;
  std::size_t count() const { return linked.size(); }
};

/// Checks every unordered pair of vertex-disjoint cycles of lengths len1, len2
/// with the cone parity, each pair with its own apex stream derived from seed.
inline OracleResult oracle_count_linked_pairs(const PLEmbedding& emb, std::size_t len1, std::size_t len2,
                                              std::uint64_t seed = 0) {
  if (auto v = validate_embedding(emb); !v.empty()) throw EmbeddingInvalid("invalid embedding", std::move(v));
  OracleResult out;
  const auto pairs = enumerate_disjoint_cycle_pairs(emb.graph, len1, len2);
  out.pairs_examined = pairs.size();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (cycle_linking_parity(emb, pairs[i].first, pairs[i].second, derive_seed(seed, i)) == 1)
      out.linked.push_back(pairs[i]);
  return out;
}

/// Fills report.oracle_confirmed using the cone parity of the reported pair.
/// For the linear finder pass the straight-line K6 on the six points.
inline void confirm_with_oracle(LinkReport& report, const PLEmbedding& emb, std::uint64_t seed) {
  const PLEmbedding m = smooth_all(emb);
  report.oracle_confirmed = cycle_linking_parity(m, report.cycle1, report.cycle2, seed) == 1;
}

}  // namespace intlink
