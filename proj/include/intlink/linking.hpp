#pragma once

// Linking in space: the solid-triangle definition of linked triangles, the
// cone-based mod 2 linking number of closed polygons, and the "higher"
// relation seen from a viewpoint.

#include <intlink/errors.hpp>
#include <intlink/geometry.hpp>

#include <optional>
#include <vector>

namespace intlink {

/// Non-self-intersecting broken line in space. Consecutive vertices are
/// distinct and no three consecutive vertices are collinear. A closed
/// polyline has at least three vertices and its last side joins the last
/// vertex back to the first.
class SpatialPolyline {
 public:
  SpatialPolyline(std::vector<Point3> vertices, bool closed)
      : vertices_(std::move(vertices)), closed_(closed) {
    check();
  }

  /// Drops straight-through vertices (collinear with both neighbours) and
  /// repeated points before constructing.
  static SpatialPolyline normalized(std::vector<Point3> pts, bool closed) {
    std::vector<Point3> out;
    for (auto& p : pts)
      if (out.empty() || !(out.back() == p)) out.push_back(std::move(p));
    if (closed && out.size() > 1 && out.front() == out.back()) out.pop_back();
    bool changed = true;
    while (changed && out.size() > 2) {
      changed = false;
      const std::size_t n = out.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (!closed && (i == 0 || i + 1 == n)) continue;
        const Point3& prev = out[(i + n - 1) % n];
        const Point3& next = out[(i + 1) % n];
        if (collinear3(prev, out[i], next) && dot(prev - out[i], next - out[i]) < 0) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
    return SpatialPolyline(std::move(out), closed);
  }

  const std::vector<Point3>& vertices() const { return vertices_; }
  bool closed() const { return closed_; }
  std::size_t side_count() const { return closed_ ? vertices_.size() : vertices_.size() - 1; }
  Segment3 side(std::size_t i) const {
    return Segment3(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  }
  std::vector<Segment3> sides() const {
    std::vector<Segment3> out;
    for (std::size_t i = 0; i < side_count(); ++i) out.push_back(side(i));
    return out;
  }

 private:
  void check() const {
    const std::size_t n = vertices_.size();
    if (n < 2 || (closed_ && n < 3)) throw InvalidPolyline("too few vertices");
    for (std::size_t i = 0; i < side_count(); ++i)
      if (vertices_[i] == vertices_[(i + 1) % n]) throw InvalidPolyline("repeated consecutive vertex");
    for (std::size_t i = 0; i < n; ++i) {
      if (!closed_ && (i == 0 || i + 1 == n)) continue;
      if (collinear3(vertices_[(i + n - 1) % n], vertices_[i], vertices_[(i + 1) % n]))
        throw InvalidPolyline("three consecutive vertices are collinear");
    }
    const std::size_t m = side_count();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const bool adjacent = j == i + 1 || (closed_ && i == 0 && j == m - 1);
        if (adjacent) continue;  // non-collinear corners meet only at the corner
        const Segment3 a = side(i), b = side(j);
        if (segments_meet3(a.p, a.q, b.p, b.q)) throw InvalidPolyline("polyline intersects itself");
      }
  }

  std::vector<Point3> vertices_;
  bool closed_;
};

inline SpatialPolyline as_polyline(const Triangle3& t) { return SpatialPolyline({t.a, t.b, t.c}, true); }

inline bool polylines_disjoint(const SpatialPolyline& a, const SpatialPolyline& b) {
  for (const auto& s : a.sides())
    for (const auto& t : b.sides())
      if (segments_meet3(s.p, s.q, t.p, t.q)) return false;
  return true;
}

/// Linked triangles: the closed triangle t2 meets the solid triangle t1 in
/// exactly one point. Requires the six vertices in general position.
inline bool triangles_linked(const Triangle3& t1, const Triangle3& t2) {
  const std::vector<Point3> six{t1.a, t1.b, t1.c, t2.a, t2.b, t2.c};
  if (!gp_points3(six)) throw GeneralPositionViolation("triangle vertices are not in general position");
  int count = 0;
  for (const auto& s : t2.sides()) {
    const Hit h = seg_hits_solid_triangle(s, t1);
    if (h == Hit::non_generic) throw GeneralPositionViolation("non-generic triangle contact");
    count += h == Hit::one ? 1 : 0;
  }
  return count == 1;
}

namespace detail {

/// For sides s, t of the cone base seen from apex (apex not coplanar with
/// both), returns the far point X of a ray from the apex that meets both
/// sides, if such a ray exists. The open segment apex-X then meets the base.
inline std::optional<Point3> double_ray_far_point(const Point3& apex, const Segment3& s, const Segment3& t) {
  const int dr = orient3d(apex, s.p, s.q, t.p);
  const int ds = orient3d(apex, s.p, s.q, t.q);
  if (dr == ds) return std::nullopt;  // both strictly on one side (both zero excluded by caller)
  Point3 y;
  if (dr == 0) {
    y = t.p;
  } else if (ds == 0) {
    y = t.q;
  } else {
    const Rational d1 = det3(s.p - apex, s.q - apex, t.p - apex);
    const Rational d2 = det3(s.p - apex, s.q - apex, t.q - apex);
    y = lerp(t.p, t.q, d1 / (d1 - d2));
  }
  // Solve apex + k (y - apex) = s.p + m (s.q - s.p) inside the plane.
  const Point3 v = y - apex, w = s.q - s.p, r = s.p - apex;
  const Point3 vw = cross(v, w);
  if (is_zero(vw)) return std::nullopt;
  const int axis = dominant_axis(vw);
  const Rational k = coord(cross(r, w), axis) / coord(vw, axis);
  const Rational m = coord(cross(r, v), axis) / coord(vw, axis);
  if (k <= 0 || m < 0 || m > 1) return std::nullopt;
  if (k == 1) return std::nullopt;  // same point: a shared corner, handled as a vertex
  return k > 1 ? lerp(apex, y, k) : y;
}

}  // namespace detail

/// Whether `apex` is a valid cone point for computing the linking parity of
/// closed polylines a and b. Beyond the two defining conditions (no vertex of
/// b on the cone over a; b misses every segment apex-X where X is a vertex of
/// a or a point hidden behind another point of a) this also rejects apexes
/// that make cone faces degenerate or coplanar, and apexes for which some side
/// of b touches a cone face non-transversally.
inline bool apex_general_position(const Point3& apex, const SpatialPolyline& a, const SpatialPolyline& b) {
  const auto sa = a.sides();
  const auto sb = b.sides();
  for (const auto& s : sa)
    if (collinear3(apex, s.p, s.q)) return false;
  for (const auto& s : sb)
    if (on_segment3(apex, s.p, s.q)) return false;
  for (std::size_t i = 0; i < sa.size(); ++i)
    for (std::size_t j = i + 1; j < sa.size(); ++j)
      if (orient3d(apex, sa[i].p, sa[i].q, sa[j].p) == 0 && orient3d(apex, sa[i].p, sa[i].q, sa[j].q) == 0)
        return false;

  std::vector<Triangle3> faces;
  for (const auto& s : sa) faces.emplace_back(apex, s.p, s.q);

  for (const auto& v : b.vertices())
    for (const auto& f : faces)
      if (in_solid_triangle3(v, f.a, f.b, f.c)) return false;

  auto misses_b = [&](const Point3& x) {
    for (const auto& s : sb)
      if (segments_meet3(apex, x, s.p, s.q)) return false;
    return true;
  };
  for (const auto& x : a.vertices())
    if (!misses_b(x)) return false;
  for (std::size_t i = 0; i < sa.size(); ++i)
    for (std::size_t j = 0; j < sa.size(); ++j) {
      if (i == j) continue;
      if (auto far = detail::double_ray_far_point(apex, sa[i], sa[j]); far && !misses_b(*far)) return false;
    }

  for (const auto& s : sb)
    for (const auto& f : faces)
      if (seg_hits_solid_triangle(s, f) == Hit::non_generic) return false;
  return true;
}

/// Parity of |(apex * a) ∩ b| for disjoint closed polylines.
inline int linking_mod2_cone(const SpatialPolyline& a, const SpatialPolyline& b, const Point3& apex) {
  if (!a.closed() || !b.closed()) throw InvalidPolyline("linking parity needs closed polylines");
  if (!polylines_disjoint(a, b)) throw PolylinesNotDisjoint("polylines intersect");
  if (!apex_general_position(apex, a, b)) throw ApexNotGeneral("apex " + to_string(apex) + " is not in general position");
  int count = 0;
  for (const auto& s : a.sides()) {
    const Triangle3 face(apex, s.p, s.q);
    for (const auto& t : b.sides()) count += seg_hits_solid_triangle(t, face) == Hit::one ? 1 : 0;
  }
  return count % 2;
}

/// Segment a is higher than b looking from o: some ray from o meets a at A
/// and b at B with A strictly between o and B. "Higher" therefore means
/// nearer to the viewpoint.
inline bool higher_central(const Point3& o, const Segment3& a, const Segment3& b) {
  if (orient3d(o, a.p, a.q, b.p) == 0 || orient3d(o, a.p, a.q, b.q) == 0 ||
      orient3d(o, b.p, b.q, a.p) == 0 || orient3d(o, b.p, b.q, a.q) == 0)
    throw NonGenericViewpoint("viewpoint is coplanar with one segment and an endpoint of the other");
  const Rational d1 = det3(a.p - o, a.q - o, b.p - o);
  const Rational d2 = det3(a.p - o, a.q - o, b.q - o);
  if (sign(d1) == sign(d2)) return false;  // b misses the plane through o and a
  const Point3 crossing = lerp(b.p, b.q, d1 / (d1 - d2));

  // o + k (crossing - o) = a.p + m (a.q - a.p)
  const Point3 v = crossing - o, w = a.q - a.p, r = a.p - o;
  const Point3 vw = cross(v, w);
  if (is_zero(vw)) return false;  // ray parallel to a
  const int axis = dominant_axis(vw);
  const Rational k = coord(cross(r, w), axis) / coord(vw, axis);
  const Rational m = coord(cross(r, v), axis) / coord(vw, axis);
  if (m <= 0 || m >= 1 || k <= 0) return false;
  if (k == 1) throw NonGenericViewpoint("segments meet");
  return k < 1;
}

/// Number of sides of `other` that are higher than e looking from apex.
inline int count_higher_sides(const Point3& apex, const Segment3& e, const Triangle3& other) {
  int n = 0;
  for (const auto& s : other.sides()) n += higher_central(apex, s, e) ? 1 : 0;
  return n;
}

/// For apex_triangle = (A1, A2, A3) with e = A2A3: true iff exactly one side
/// of `other` is higher than e looking from A1. When true the two triangles
/// are linked.
inline bool check_unique_higher_side(const Triangle3& apex_triangle, const Triangle3& other) {
  const std::vector<Point3> six{apex_triangle.a, apex_triangle.b, apex_triangle.c, other.a, other.b, other.c};
  if (!gp_points3(six)) throw GeneralPositionViolation("the six points are not in general position");
  return count_higher_sides(apex_triangle.a, Segment3(apex_triangle.b, apex_triangle.c), other) == 1;
}

}  // namespace intlink
