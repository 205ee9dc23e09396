#pragma once

// Exact points, segments and the orientation / incidence predicates used by
// everything else. No floating point is involved in any decision.

#include <intlink/errors.hpp>
#include <intlink/rational.hpp>

#include <array>
#include <span>
#include <string>
#include <vector>

namespace intlink {

struct Point2 {
  Rational x, y;
};

struct Point3 {
  Rational x, y, z;
};

inline bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
inline bool operator==(const Point3& a, const Point3& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}
inline bool operator<(const Point2& a, const Point2& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}
inline bool operator<(const Point3& a, const Point3& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator*(const Point2& a, const Rational& s) { return {a.x * s, a.y * s}; }
inline Point3 operator-(const Point3& a, const Point3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Point3 operator+(const Point3& a, const Point3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Point3 operator*(const Point3& a, const Rational& s) { return {a.x * s, a.y * s, a.z * s}; }

inline Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
inline Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Rational dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline bool is_zero(const Point3& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

inline const Rational& coord(const Point3& p, int axis) {
  return axis == 0 ? p.x : axis == 1 ? p.y : p.z;
}

/// a + t (b - a)
inline Point2 lerp(const Point2& a, const Point2& b, const Rational& t) { return a + (b - a) * t; }
inline Point3 lerp(const Point3& a, const Point3& b, const Rational& t) { return a + (b - a) * t; }

inline std::string to_string(const Point2& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}
inline std::string to_string(const Point3& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ", " + to_string(p.z) + ")";
}

class Segment2 {
 public:
  Segment2(Point2 p, Point2 q) : p(std::move(p)), q(std::move(q)) {
    if (this->p == this->q) throw DegenerateGeometry("segment endpoints coincide");
  }
  Point2 p, q;
};

class Segment3 {
 public:
  Segment3(Point3 p, Point3 q) : p(std::move(p)), q(std::move(q)) {
    if (this->p == this->q) throw DegenerateGeometry("segment endpoints coincide");
  }
  Point3 p, q;
};

class Triangle3 {
 public:
  Triangle3(Point3 a, Point3 b, Point3 c) : a(std::move(a)), b(std::move(b)), c(std::move(c)) {
    if (is_zero(cross(this->b - this->a, this->c - this->a)))
      throw DegenerateGeometry("triangle vertices are collinear or repeated");
  }
  std::array<Segment3, 3> sides() const { return {Segment3(a, b), Segment3(b, c), Segment3(c, a)}; }
  std::array<Point3, 3> vertices() const { return {a, b, c}; }
  Point3 a, b, c;
};

// ---------------------------------------------------------------------------
// Orientation

inline int orient2d(const Point2& a, const Point2& b, const Point2& c) {
  return sign(cross(b - a, c - a));
}

inline Rational det3(const Point3& u, const Point3& v, const Point3& w) { return dot(u, cross(v, w)); }

inline int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return sign(det3(b - a, c - a, d - a));
}

inline bool collinear3(const Point3& a, const Point3& b, const Point3& c) {
  return is_zero(cross(b - a, c - a));
}

/// True iff no four of the points are coplanar.
inline bool gp_points3(std::span<const Point3> pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (orient3d(pts[i], pts[j], pts[k], pts[l]) == 0) return false;
  return true;
}

/// True iff no three of the points are collinear.
inline bool gp_points2(std::span<const Point2> pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orient2d(pts[i], pts[j], pts[k]) == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Planar segment intersection

/// x on the closed segment [p, q].
inline bool on_segment2(const Point2& x, const Point2& p, const Point2& q) {
  if (orient2d(p, q, x) != 0) return false;
  return dot(x - p, x - q) <= 0;
}

/// Full description of how two closed planar segments meet. `proper` means a
/// single point interior to both.
struct Contact2 {
  enum class Kind { empty, point, overlap };
  Kind kind = Kind::empty;
  Point2 point;
  bool proper = false;
};

inline Contact2 classify_segments2(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  using K = Contact2::Kind;
  const int o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
  const int o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);

  if (o1 == 0 && o2 == 0) {
    // Collinear: compare parameters along a->b.
    const Point2 dir = b - a;
    const Rational len = dot(dir, dir);
    Rational tc = dot(c - a, dir) / len, td = dot(d - a, dir) / len;
    if (tc > td) std::swap(tc, td);
    const Rational lo = tc > 0 ? tc : Rational(0);
    const Rational hi = td < 1 ? td : Rational(1);
    if (lo > hi) return {};
    if (lo == hi) return {K::point, lerp(a, b, lo), false};
    return {K::overlap, {}, false};
  }
  if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
    if (o1 == o2 || o3 == o4) return {};
    const Rational t = cross(c - a, d - c) / cross(b - a, d - c);
    return {K::point, lerp(a, b, t), true};
  }
  // Exactly one endpoint can touch the other segment when the lines differ.
  if (o1 == 0 && on_segment2(c, a, b)) return {K::point, c, false};
  if (o2 == 0 && on_segment2(d, a, b)) return {K::point, d, false};
  if (o3 == 0 && on_segment2(a, c, d)) return {K::point, a, false};
  if (o4 == 0 && on_segment2(b, c, d)) return {K::point, b, false};
  return {};
}

struct SegmentIntersection {
  enum class Kind { empty, point, non_generic };
  Kind kind = Kind::empty;
  Point2 point;
};

/// Point iff the segments cross transversally at a point interior to both;
/// NonGeneric for any other contact (shared endpoint, T-junction, overlap).
inline SegmentIntersection seg_intersect2(const Segment2& s, const Segment2& t) {
  using K = SegmentIntersection::Kind;
  const Contact2 c = classify_segments2(s.p, s.q, t.p, t.q);
  if (c.kind == Contact2::Kind::empty) return {K::empty, {}};
  if (c.kind == Contact2::Kind::point && c.proper) return {K::point, c.point};
  return {K::non_generic, {}};
}

// ---------------------------------------------------------------------------
// Spatial incidence

inline bool on_segment3(const Point3& x, const Point3& p, const Point3& q) {
  if (!collinear3(p, q, x)) return false;
  return dot(x - p, x - q) <= 0;
}

/// Axis along which the normal n has a nonzero component; dropping it maps the
/// plane injectively to 2D.
inline int dominant_axis(const Point3& n) {
  if (n.x != 0) return 0;
  if (n.y != 0) return 1;
  return 2;
}

inline Point2 drop_axis(const Point3& p, int axis) {
  switch (axis) {
    case 0: return {p.y, p.z};
    case 1: return {p.x, p.z};
    default: return {p.x, p.y};
  }
}

struct Contact3 {
  enum class Kind { empty, point, overlap };
  Kind kind = Kind::empty;
  Point3 point;
};

/// How the closed segments [a,b] and [c,d] in space meet.
inline Contact3 intersect_segments3(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  using K = Contact3::Kind;
  if (orient3d(a, b, c, d) != 0) return {};
  Point3 n = cross(b - a, c - a);
  if (is_zero(n)) n = cross(b - a, d - a);
  if (is_zero(n)) {
    // All four collinear: work in 1D along a->b.
    const Point3 dir = b - a;
    const Rational len = dot(dir, dir);
    Rational tc = dot(c - a, dir) / len, td = dot(d - a, dir) / len;
    if (tc > td) std::swap(tc, td);
    const Rational lo = tc > 0 ? tc : Rational(0);
    const Rational hi = td < 1 ? td : Rational(1);
    if (lo > hi) return {};
    if (lo == hi) return {K::point, lerp(a, b, lo)};
    return {K::overlap, {}};
  }
  const int axis = dominant_axis(n);
  const Point2 a2 = drop_axis(a, axis), b2 = drop_axis(b, axis);
  const Contact2 c2 = classify_segments2(a2, b2, drop_axis(c, axis), drop_axis(d, axis));
  if (c2.kind == Contact2::Kind::empty) return {};
  if (c2.kind == Contact2::Kind::overlap) return {K::overlap, {}};
  // Recover the 3D point from its parameter along a->b.
  const Point2 dir = b2 - a2;
  const Rational t = dot(c2.point - a2, dir) / dot(dir, dir);
  return {K::point, lerp(a, b, t)};
}

inline bool segments_meet3(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return intersect_segments3(a, b, c, d).kind != Contact3::Kind::empty;
}

/// x in the closed solid triangle abc (assumed non-degenerate).
inline bool in_solid_triangle3(const Point3& x, const Point3& a, const Point3& b, const Point3& c) {
  if (orient3d(a, b, c, x) != 0) return false;
  const int axis = dominant_axis(cross(b - a, c - a));
  const Point2 a2 = drop_axis(a, axis), b2 = drop_axis(b, axis), c2 = drop_axis(c, axis),
               x2 = drop_axis(x, axis);
  const int s1 = orient2d(a2, b2, x2), s2 = orient2d(b2, c2, x2), s3 = orient2d(c2, a2, x2);
  const bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
  const bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
  return !(has_neg && has_pos);
}

enum class Hit { none, one, non_generic };

/// Counts s ∩ conv(t) when that is empty or one transversal interior point.
/// Any endpoint of s in the plane of t, or a crossing on the boundary of t,
/// yields non_generic.
inline Hit seg_hits_solid_triangle(const Segment3& s, const Triangle3& t) {
  const int dp = orient3d(t.a, t.b, t.c, s.p);
  const int dq = orient3d(t.a, t.b, t.c, s.q);
  if (dp == 0 || dq == 0) return Hit::non_generic;
  if (dp == dq) return Hit::none;
  const int e1 = orient3d(s.p, s.q, t.a, t.b);
  const int e2 = orient3d(s.p, s.q, t.b, t.c);
  const int e3 = orient3d(s.p, s.q, t.c, t.a);
  const bool has_neg = e1 < 0 || e2 < 0 || e3 < 0;
  const bool has_pos = e1 > 0 || e2 > 0 || e3 > 0;
  if (has_neg && has_pos) return Hit::none;
  if (e1 == 0 || e2 == 0 || e3 == 0) return Hit::non_generic;
  return Hit::one;
}

}  // namespace intlink
