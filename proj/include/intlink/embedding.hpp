#pragma once

// Graphs mapped into space (piecewise-linear embeddings) or into the plane
// (drawings). Each edge carries a polyline route running from the position
// of its smaller endpoint to the position of its larger one.

#include <intlink/errors.hpp>
#include <intlink/geometry.hpp>
#include <intlink/graph.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace intlink {

template <class P>
struct GraphMap {
  Graph graph;
  std::map<Vertex, P> position;
  std::map<Edge, std::vector<P>> route;

  /// Route of e read starting at vertex `from`.
  std::vector<P> route_from(const Edge& e, Vertex from) const {
    std::vector<P> r = route.at(e);
    if (from == e.v) std::reverse(r.begin(), r.end());
    return r;
  }

  std::size_t side_count() const {
    std::size_t n = 0;
    for (const auto& [e, r] : route) n += r.size() > 0 ? r.size() - 1 : 0;
    return n;
  }

  friend bool operator==(const GraphMap&, const GraphMap&) = default;
};

using PLEmbedding = GraphMap<Point3>;
using PlanarDrawing = GraphMap<Point2>;

/// Every edge routed as the straight segment between its endpoints.
template <class P>
GraphMap<P> straight_map(const Graph& g, const std::map<Vertex, P>& position) {
  GraphMap<P> m{g, position, {}};
  for (const Edge& e : g.edges()) m.route[e] = {position.at(e.u), position.at(e.v)};
  return m;
}

template <class P>
GraphMap<P> straight_map(const Graph& g, const std::vector<P>& position) {
  std::map<Vertex, P> pos;
  for (std::size_t i = 0; i < g.vertices().size(); ++i) pos[g.vertices()[i]] = position.at(i);
  return straight_map(g, pos);
}

/// Restriction to the subgraph without the given vertices.
template <class P>
GraphMap<P> remove_vertices(const GraphMap<P>& m, const std::vector<Vertex>& removed) {
  GraphMap<P> out;
  out.graph = m.graph.without(removed);
  for (Vertex v : out.graph.vertices()) out.position[v] = m.position.at(v);
  for (const Edge& e : out.graph.edges()) out.route[e] = m.route.at(e);
  return out;
}

/// A planar crossing between sides of two different edge routes.
struct Crossing {
  Edge e1, e2;  // e1 < e2
  int side1 = 0, side2 = 0;
  Point2 point;
  bool adjacent = false;      // edges share a graph vertex
  std::optional<Edge> upper;  // set when the drawing comes from a projection
};

namespace detail {

inline bool on_route_side(const Point2& x, const Point2& p, const Point2& q) { return on_segment2(x, p, q); }
inline bool on_route_side(const Point3& x, const Point3& p, const Point3& q) { return on_segment3(x, p, q); }

template <class P>
std::vector<Violation> check_routes(const GraphMap<P>& m) {
  std::vector<Violation> out;
  const auto ep = [](const Edge& e) { return std::pair<int, int>{e.u, e.v}; };
  for (Vertex v : m.graph.vertices())
    if (!m.position.count(v)) out.push_back({"missing-position", "vertex " + std::to_string(v)});
  for (const Edge& e : m.graph.edges()) {
    auto it = m.route.find(e);
    if (it == m.route.end()) {
      out.push_back({"missing-route", "edge " + to_string(e), ep(e)});
      continue;
    }
    const auto& r = it->second;
    if (r.size() < 2) {
      out.push_back({"short-route", "edge " + to_string(e), ep(e)});
      continue;
    }
    if (m.position.count(e.u) && m.position.count(e.v) &&
        (!(r.front() == m.position.at(e.u)) || !(r.back() == m.position.at(e.v))))
      out.push_back({"route-endpoints", "route of " + to_string(e) + " does not join its vertices", ep(e)});
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      if (r[i] == r[i + 1])
        out.push_back({"degenerate-side", "edge " + to_string(e), ep(e), static_cast<int>(i)});
  }
  for (const auto& [e, r] : m.route)
    if (!m.graph.has_edge(e.u, e.v)) out.push_back({"stray-route", "no edge " + to_string(e), ep(e)});
  std::set<P, std::less<>> seen;
  for (const auto& [v, p] : m.position)
    if (!seen.insert(p).second) out.push_back({"repeated-position", "vertex " + std::to_string(v)});
  return out;
}

template <class P>
struct SideRef {
  Edge edge;
  int index;
  int last;  // index of the final side of this route
  P p, q;
};

template <class P>
std::vector<SideRef<P>> collect_sides(const GraphMap<P>& m) {
  std::vector<SideRef<P>> sides;
  for (const Edge& e : m.graph.edges()) {
    const auto& r = m.route.at(e);
    const int last = static_cast<int>(r.size()) - 2;
    for (int i = 0; i <= last; ++i) sides.push_back({e, i, last, r[i], r[i + 1]});
  }
  return sides;
}

/// Contacts permitted between two sides: adjacent sides of one route meet at
/// their common corner, end-sides of two routes at their shared graph vertex.
/// Returns the only allowed contact point, if any.
template <class P>
std::optional<P> allowed_contact(const GraphMap<P>& m, const SideRef<P>& a, const SideRef<P>& b) {
  if (a.edge == b.edge) {
    if (b.index == a.index + 1) return a.q;
    if (a.index == b.index + 1) return a.p;
    return std::nullopt;
  }
  if (!a.edge.shares_vertex(b.edge)) return std::nullopt;
  const Vertex w = a.edge.touches(b.edge.u) ? b.edge.u : b.edge.v;
  auto end_side_at = [&](const SideRef<P>& s) {
    return (w == s.edge.u && s.index == 0) || (w == s.edge.v && s.index == s.last);
  };
  if (end_side_at(a) && end_side_at(b)) return m.position.at(w);
  return std::nullopt;
}

struct DrawingScan {
  std::vector<Violation> violations;
  std::vector<Crossing> crossings;
};

inline DrawingScan scan_drawing(const PlanarDrawing& d) {
  DrawingScan out;
  out.violations = check_routes(d);
  if (!out.violations.empty()) return out;
  const auto sides = collect_sides(d);
  const auto ep = [](const Edge& e) { return std::pair<int, int>{e.u, e.v}; };
  std::map<Point2, int> crossing_multiplicity;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    for (std::size_t j = i + 1; j < sides.size(); ++j) {
      const auto& a = sides[i];
      const auto& b = sides[j];
      const Contact2 c = classify_segments2(a.p, a.q, b.p, b.q);
      if (c.kind == Contact2::Kind::empty) continue;
      const auto allowed = allowed_contact(d, a, b);
      if (allowed) {
        if (c.kind == Contact2::Kind::point && c.point == *allowed) continue;
        out.violations.push_back({"bad-contact", "sides meet beyond their common vertex", ep(a.edge), a.index,
                                  ep(b.edge), b.index});
        continue;
      }
      if (c.kind == Contact2::Kind::point && c.proper) {
        ++crossing_multiplicity[c.point];
        if (!(a.edge == b.edge))
          out.crossings.push_back({a.edge, b.edge, a.index, b.index, c.point, a.edge.shares_vertex(b.edge), {}});
        continue;
      }
      out.violations.push_back({c.kind == Contact2::Kind::overlap ? "overlap" : "vertex-on-side",
                                "non-transversal contact at " + (c.kind == Contact2::Kind::point ? to_string(c.point) : std::string("a segment")),
                                ep(a.edge), a.index, ep(b.edge), b.index});
    }
  }
  for (const auto& [p, n] : crossing_multiplicity)
    if (n > 1) out.violations.push_back({"triple-point", "three or more sides through " + to_string(p)});
  for (Vertex v : d.graph.vertices()) {
    if (d.graph.degree(v) != 0) continue;
    for (const auto& s : sides)
      if (on_segment2(d.position.at(v), s.p, s.q))
        out.violations.push_back({"vertex-on-side", "isolated vertex " + std::to_string(v) + " lies on a route",
                                  ep(s.edge), s.index});
  }
  return out;
}

}  // namespace detail

/// Empty iff the embedding is valid: positions distinct, routes simple, and
/// routes meet only at shared graph vertices.
inline std::vector<Violation> validate_embedding(const PLEmbedding& emb) {
  std::vector<Violation> out = detail::check_routes(emb);
  if (!out.empty()) return out;
  const auto sides = detail::collect_sides(emb);
  const auto ep = [](const Edge& e) { return std::pair<int, int>{e.u, e.v}; };
  for (std::size_t i = 0; i < sides.size(); ++i) {
    for (std::size_t j = i + 1; j < sides.size(); ++j) {
      const auto& a = sides[i];
      const auto& b = sides[j];
      const Contact3 c = intersect_segments3(a.p, a.q, b.p, b.q);
      if (c.kind == Contact3::Kind::empty) continue;
      const auto allowed = detail::allowed_contact(emb, a, b);
      if (allowed && c.kind == Contact3::Kind::point && c.point == *allowed) continue;
      out.push_back({a.edge == b.edge ? "self-intersection" : "routes-meet",
                     c.kind == Contact3::Kind::point ? "at " + to_string(c.point) : "along a segment",
                     ep(a.edge), a.index, ep(b.edge), b.index});
    }
  }
  for (Vertex v : emb.graph.vertices()) {
    if (emb.graph.degree(v) != 0) continue;
    for (const auto& s : sides)
      if (on_segment3(emb.position.at(v), s.p, s.q))
        out.push_back({"vertex-on-route", "vertex " + std::to_string(v), ep(s.edge), s.index});
  }
  return out;
}

/// Empty iff the drawing is a general position map: no three sides through a
/// point, no polyline vertex inside a side, and sides touch only as adjacent
/// sides of one route or end-sides at a shared graph vertex.
inline std::vector<Violation> validate_drawing(const PlanarDrawing& d) { return detail::scan_drawing(d).violations; }

/// Transversal crossings between sides of different routes, in a fixed order
/// (edge pair, then side indices). Crossings of edges sharing a vertex are
/// included and flagged.
inline std::vector<Crossing> extract_crossings(const PlanarDrawing& d) {
  auto scan = detail::scan_drawing(d);
  if (!scan.violations.empty()) throw DrawingNotGeneral("drawing is not in general position", scan.violations);
  std::sort(scan.crossings.begin(), scan.crossings.end(), [](const Crossing& a, const Crossing& b) {
    return std::tie(a.e1, a.e2, a.side1, a.side2) < std::tie(b.e1, b.e2, b.side1, b.side2);
  });
  return scan.crossings;
}

// ---------------------------------------------------------------------------
// Subdivision and smoothing

/// Replaces edge e by a path through new vertices placed at `points`, which
/// must lie strictly inside the route of e, in order from e.u to e.v. New
/// vertex ids continue after the largest existing id. The union of routes is
/// unchanged.
template <class P>
GraphMap<P> subdivide(const GraphMap<P>& m, const Edge& e, const std::vector<P>& points) {
  if (!m.graph.has_edge(e.u, e.v)) throw GraphError("no edge " + to_string(e));
  const std::vector<P>& r = m.route.at(e);
  auto fail = [](const P& x) {
    return PointsNotOnRoute("point " + to_string(x) + " is not strictly inside the route, in order");
  };
  std::vector<P> path{r.front()};
  std::vector<std::size_t> cut_at;  // indices into `path` of the new vertices
  std::size_t next = 0;
  for (std::size_t k = 0; k + 1 < r.size(); ++k) {
    while (next < points.size() && detail::on_route_side(points[next], r[k], r[k + 1]) &&
           !(points[next] == r[k + 1])) {
      const P& x = points[next++];
      if (x == path.back()) {
        // Cut at an existing corner.
        if (k == 0 || (!cut_at.empty() && cut_at.back() == path.size() - 1)) throw fail(x);
      } else {
        if (dot(x - path.back(), r[k + 1] - r[k]) <= 0) throw fail(x);
        path.push_back(x);
      }
      cut_at.push_back(path.size() - 1);
    }
    path.push_back(r[k + 1]);
  }
  if (next != points.size()) throw fail(points[next]);

  GraphMap<P> out = m;
  out.graph.remove_edge(e);
  out.route.erase(e);
  Vertex prev = e.u;
  std::size_t begin = 0;
  Vertex next_id = m.graph.next_free_vertex();
  auto add_piece = [&](Vertex a, Vertex b, std::size_t from, std::size_t to) {
    std::vector<P> piece(path.begin() + static_cast<std::ptrdiff_t>(from),
                         path.begin() + static_cast<std::ptrdiff_t>(to) + 1);
    if (b < a) std::reverse(piece.begin(), piece.end());
    out.graph.add_edge(a, b);
    out.route[Edge(a, b)] = std::move(piece);
  };
  for (std::size_t c : cut_at) {
    const Vertex w = next_id++;
    out.graph.add_vertex(w);
    out.position[w] = path[c];
    add_piece(prev, w, begin, c);
    prev = w;
    begin = c;
  }
  add_piece(prev, e.v, begin, path.size() - 1);
  return out;
}

/// Inverse of subdivision at a degree-2 vertex w whose neighbours are not
/// already adjacent. The merged route keeps w's position as a corner.
template <class P>
GraphMap<P> smooth(const GraphMap<P>& m, Vertex w) {
  const auto nb = m.graph.neighbors(w);
  if (nb.size() != 2) throw GraphError("vertex " + std::to_string(w) + " does not have degree 2");
  if (m.graph.has_edge(nb[0], nb[1])) throw GraphError("smoothing would create a multi-edge");
  const Vertex x = std::min(nb[0], nb[1]), y = std::max(nb[0], nb[1]);
  std::vector<P> merged = m.route_from(Edge(x, w), x);
  const std::vector<P> tail = m.route_from(Edge(w, y), w);
  merged.insert(merged.end(), tail.begin() + 1, tail.end());

  GraphMap<P> out = m;
  out.route.erase(Edge(x, w));
  out.route.erase(Edge(w, y));
  out.graph.remove_vertex(w);
  out.position.erase(w);
  out.graph.add_edge(x, y);
  out.route[Edge(x, y)] = std::move(merged);
  return out;
}

/// Smooths degree-2 vertices (smallest id first) until none can be smoothed.
template <class P>
GraphMap<P> smooth_all(GraphMap<P> m) {
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v : m.graph.vertices()) {
      const auto nb = m.graph.neighbors(v);
      if (nb.size() == 2 && !m.graph.has_edge(nb[0], nb[1])) {
        m = smooth(m, v);
        changed = true;
        break;
      }
    }
  }
  return m;
}

/// Removes route corners that lie on the straight line through their
/// neighbours (between them). Leaves the carrier unchanged.
template <class P>
GraphMap<P> drop_straight_corners(GraphMap<P> m) {
  for (auto& [e, r] : m.route) {
    std::vector<P> out{r.front()};
    for (std::size_t i = 1; i + 1 < r.size(); ++i)
      if (!detail::on_route_side(r[i], out.back(), r[i + 1])) out.push_back(r[i]);
    out.push_back(r.back());
    r = std::move(out);
  }
  return m;
}

}  // namespace intlink
