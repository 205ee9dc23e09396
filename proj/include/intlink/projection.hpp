#pragma once

// Orthogonal and central projection of spatial graphs to planar drawings with
// over/under information at every crossing, and the crossing-count linking
// parities read off such diagrams.

#include <intlink/embedding.hpp>
#include <intlink/errors.hpp>
#include <intlink/geometry.hpp>
#include <intlink/random.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace intlink {

/// Nonzero direction, stored as a primitive integer vector whose first
/// nonzero component is positive.
class Direction3 {
 public:
  Direction3(const Rational& x, const Rational& y, const Rational& z) {
    if (x == 0 && y == 0 && z == 0) throw DegenerateGeometry("zero direction");
    mpz_class l = 1;
    for (const Rational* c : {&x, &y, &z}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c->get_den_mpz_t());
    std::array<mpz_class, 3> n;
    const std::array<const Rational*, 3> in{&x, &y, &z};
    mpz_class g = 0;
    for (int i = 0; i < 3; ++i) {
      n[i] = in[i]->get_num() * (l / in[i]->get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
    }
    const int first = n[0] != 0 ? 0 : n[1] != 0 ? 1 : 2;
    if (n[first] < 0) g = -g;
    v_ = {Rational(n[0] / g), Rational(n[1] / g), Rational(n[2] / g)};
  }
  explicit Direction3(const Point3& v) : Direction3(v.x, v.y, v.z) {}

  const Point3& vector() const { return v_; }

  /// Two vectors spanning the orthogonal complement, built from cross
  /// products so they stay rational.
  std::array<Point3, 2> complement_basis() const {
    const std::array<Point3, 3> axes{Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}};
    for (const auto& e : axes) {
      const Point3 u = cross(v_, e);
      if (!is_zero(u)) return {u, cross(v_, u)};
    }
    throw DegenerateGeometry("unreachable: direction is zero");
  }

  friend bool operator==(const Direction3& a, const Direction3& b) { return a.v_ == b.v_; }
  friend bool operator<(const Direction3& a, const Direction3& b) { return a.v_ < b.v_; }

 private:
  Point3 v_;
};

inline std::string to_string(const Direction3& d) { return to_string(d.vector()); }

/// A drawing together with a height for every route corner. At a crossing
/// the strand with the larger interpolated height is the upper one.
///  - orthogonal projection: height = position · d (farther along d is upper)
///  - central projection: height = ray scale factor at the image plane
///    (larger means nearer the centre, so upper = nearer the centre)
struct ProjectedDiagram {
  PlanarDrawing drawing;
  std::map<Edge, std::vector<Rational>> height;
  std::vector<Crossing> crossings;
};

namespace detail {

inline Rational side_parameter(const Point2& x, const Point2& p, const Point2& q) {
  const Point2 d = q - p;
  return dot(x - p, d) / dot(d, d);
}

/// Extracts crossings and decides the upper strand of each.
inline void resolve_crossings(ProjectedDiagram& diag) {
  try {
    diag.crossings = extract_crossings(diag.drawing);
  } catch (const DrawingNotGeneral& e) {
    throw ProjectionNotGeneral("projection is not a general position map", e.violations);
  }
  auto height_at = [&](const Edge& e, int side, const Point2& x) {
    const auto& r = diag.drawing.route.at(e);
    const auto& h = diag.height.at(e);
    const Rational t = side_parameter(x, r[side], r[side + 1]);
    return Rational(h[side] + (h[side + 1] - h[side]) * t);
  };
  for (auto& c : diag.crossings) {
    const Rational h1 = height_at(c.e1, c.side1, c.point);
    const Rational h2 = height_at(c.e2, c.side2, c.point);
    if (h1 == h2)
      throw ProjectionNotGeneral("strands meet in space at a crossing",
                                 {{"equal-heights", "at " + to_string(c.point), {c.e1.u, c.e1.v}, c.side1,
                                   {c.e2.u, c.e2.v}, c.side2}});
    c.upper = h1 > h2 ? c.e1 : c.e2;
  }
}

inline PlanarDrawing flatten(const PLEmbedding& emb, const Direction3& d) {
  const auto [u, w] = d.complement_basis();
  auto to2 = [&](const Point3& p) { return Point2{dot(p, u), dot(p, w)}; };
  PlanarDrawing out;
  out.graph = emb.graph;
  for (const auto& [v, p] : emb.position) out.position[v] = to2(p);
  for (const auto& [e, r] : emb.route) {
    auto& o = out.route[e];
    for (const auto& p : r) o.push_back(to2(p));
  }
  return out;
}

}  // namespace detail

/// Orthogonal projection along d. Throws ProjectionNotGeneral when the image
/// is not a general position map.
inline ProjectedDiagram project_orthogonal(const PLEmbedding& emb, const Direction3& d) {
  ProjectedDiagram diag;
  diag.drawing = detail::flatten(emb, d);
  for (const auto& [e, r] : emb.route) {
    auto& h = diag.height[e];
    for (const auto& p : r) h.push_back(dot(p, d.vector()));
  }
  detail::resolve_crossings(diag);
  return diag;
}

/// Whether projecting along d gives a general position map.
inline bool is_general_direction(const PLEmbedding& emb, const Direction3& d) {
  return validate_drawing(detail::flatten(emb, d)).empty();
}

/// Random search for a general projection direction. Candidates are integer
/// vectors from [-B, B]^3 minus the origin, B starting at 8 and doubling after
/// every 32 rejected candidates; each candidate is checked exactly.
inline Direction3 find_general_plane(const PLEmbedding& emb, std::uint64_t seed, int max_tries = 10000) {
  SplitMix64 rng(seed);
  std::set<Direction3> tried;
  std::int64_t bound = 8;
  int rejected = 0;
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    const std::int64_t x = rng.uniform(-bound, bound), y = rng.uniform(-bound, bound), z = rng.uniform(-bound, bound);
    if (x == 0 && y == 0 && z == 0) continue;
    const Direction3 d(x, y, z);
    if (tried.insert(d).second && is_general_direction(emb, d)) return d;
    if (++rejected % 32 == 0 && bound < (std::int64_t{1} << 40)) bound *= 2;
  }
  throw SearchExhausted("no general projection direction after " + std::to_string(max_tries) + " tries");
}

/// Central projection from `apex` of the complete graph on the other points
/// onto the plane orthogonal to `normal` halfway (in the normal's functional)
/// between the apex and the nearest other point. The apex must be the strict
/// maximum or strict minimum of that functional. Vertex ids are the indices
/// of the points in `points`; a point equal to the apex is skipped.
inline ProjectedDiagram project_central_diagram(const std::vector<Point3>& points, const Point3& apex,
                                                const Direction3& normal) {
  const Point3& n = normal.vector();
  const Rational la = dot(apex, n);
  std::vector<Vertex> ids;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!(points[i] == apex)) ids.push_back(static_cast<Vertex>(i));
  if (ids.empty()) throw ApexNotExtremal("no points besides the apex");

  Rational lo = dot(points[ids[0]], n), hi = lo;
  for (Vertex i : ids) {
    const Rational l = dot(points[i], n);
    if (l < lo) lo = l;
    if (l > hi) hi = l;
  }
  Rational nearest;
  if (la > hi) nearest = hi;
  else if (la < lo) nearest = lo;
  else throw ApexNotExtremal("apex is not strictly extremal along " + to_string(normal));
  const Rational level = (la + nearest) / 2;

  const auto [u, w] = normal.complement_basis();
  ProjectedDiagram diag;
  Graph g;
  for (Vertex i : ids) g.add_vertex(i);
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b) g.add_edge(ids[a], ids[b]);

  std::map<Vertex, Rational> scale;
  std::vector<Point2> projected;
  for (Vertex i : ids) {
    const Rational t = (level - la) / (dot(points[i], n) - la);
    const Point3 x = lerp(apex, points[i], t);
    scale[i] = t;
    diag.drawing.position[i] = Point2{dot(x, u), dot(x, w)};
    projected.push_back(diag.drawing.position[i]);
  }
  if (!gp_points2(projected))
    throw ProjectionNotGeneral("projected points are not in general position",
                               {{"collinear-projection", "three projected points on a line"}});
  diag.drawing.graph = g;
  for (const Edge& e : g.edges()) {
    diag.drawing.route[e] = {diag.drawing.position.at(e.u), diag.drawing.position.at(e.v)};
    diag.height[e] = {scale.at(e.u), scale.at(e.v)};
  }
  detail::resolve_crossings(diag);
  return diag;
}

inline PlanarDrawing project_central(const std::vector<Point3>& points, const Point3& apex, const Direction3& normal) {
  return project_central_diagram(points, apex, normal).drawing;
}

namespace detail {

inline std::set<Vertex> vertex_set(const std::vector<Edge>& edges) {
  std::set<Vertex> s;
  for (const Edge& e : edges) s.insert({e.u, e.v});
  return s;
}

inline void require_disjoint(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  const auto sa = vertex_set(a);
  for (Vertex v : vertex_set(b))
    if (sa.count(v)) throw CyclesNotDisjoint("edge sets share vertex " + std::to_string(v));
}

inline bool contains(const std::vector<Edge>& s, const Edge& e) { return std::find(s.begin(), s.end(), e) != s.end(); }

}  // namespace detail

/// Parity of the crossings between the two edge sets at which the first set
/// is the upper strand.
inline int lk_from_diagram(const ProjectedDiagram& diag, const std::vector<Edge>& upper_set,
                           const std::vector<Edge>& lower_set) {
  detail::require_disjoint(upper_set, lower_set);
  int n = 0;
  for (const auto& c : diag.crossings) {
    const bool forward = detail::contains(upper_set, c.e1) && detail::contains(lower_set, c.e2);
    const bool backward = detail::contains(upper_set, c.e2) && detail::contains(lower_set, c.e1);
    if ((forward || backward) && c.upper && detail::contains(upper_set, *c.upper)) ++n;
  }
  return n % 2;
}

inline int lk_from_diagram(const ProjectedDiagram& diag, const Cycle& a, const Cycle& b) {
  return lk_from_diagram(diag, a.edges(), b.edges());
}

/// Number of crossings between the two edge sets, regardless of strand.
inline int crossing_count(const std::vector<Crossing>& crossings, const std::vector<Edge>& a,
                          const std::vector<Edge>& b) {
  int n = 0;
  for (const auto& c : crossings)
    if ((detail::contains(a, c.e1) && detail::contains(b, c.e2)) ||
        (detail::contains(a, c.e2) && detail::contains(b, c.e1)))
      ++n;
  return n;
}

/// lk(e, f) + lk(f, e) ≡ |crossings between e and f| (mod 2).
inline bool check_crossing_parity_identity(const ProjectedDiagram& diag, const std::vector<Edge>& e,
                                           const std::vector<Edge>& f) {
  return (lk_from_diagram(diag, e, f) + lk_from_diagram(diag, f, e)) % 2 == crossing_count(diag.crossings, e, f) % 2;
}

}  // namespace intlink
