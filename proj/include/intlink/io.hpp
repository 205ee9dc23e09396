#pragma once

// JSON instance files and reports. Coordinates are always written as
// rational strings; integers are also accepted on input. See
// docs/instance-format.md for the schema.

#include <intlink/embedding.hpp>
#include <intlink/errors.hpp>
#include <intlink/generate.hpp>
#include <intlink/geometry.hpp>
#include <intlink/graph.hpp>
#include <intlink/invariants.hpp>
#include <intlink/projection.hpp>
#include <intlink/rational.hpp>

#include <json.hpp>

#include <algorithm>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace intlink {

using json = nlohmann::json;

namespace io_detail {

inline Rational rational_at(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (!j.is_string()) throw ParseError(where + ": expected a rational string or integer");
  auto r = parse_rational(j.get<std::string>());
  if (!r) throw ParseError(where + ": invalid rational \"" + j.get<std::string>() + "\"");
  return *r;
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

template <class P>
P point_at(const json& j, const std::string& where) {
  constexpr std::size_t dim = std::is_same_v<P, Point3> ? 3 : 2;
  if (!j.is_array() || j.size() != dim)
    throw ParseError(where + ": expected an array of " + std::to_string(dim) + " coordinates");
  if constexpr (dim == 3)
    return Point3{rational_at(j[0], where + "[0]"), rational_at(j[1], where + "[1]"), rational_at(j[2], where + "[2]")};
  else
    return Point2{rational_at(j[0], where + "[0]"), rational_at(j[1], where + "[1]")};
}

inline json to_json(const Rational& r) { return to_string(r); }
inline json to_json(const Point3& p) { return json::array({to_string(p.x), to_string(p.y), to_string(p.z)}); }
inline json to_json(const Point2& p) { return json::array({to_string(p.x), to_string(p.y)}); }

template <class P>
std::vector<P> points_at(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of points");
  std::vector<P> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point_at<P>(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline Vertex vertex_at(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer vertex id");
  return j.get<Vertex>();
}

inline Edge edge_key(const std::string& key, const std::string& where, Vertex& first) {
  const auto dash = key.find('-', 1);
  auto num = [&](std::string_view s) {
    if (s.empty()) throw ParseError(where + ": bad edge key \"" + key + "\"");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(std::string(s), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw ParseError(where + ": bad edge key \"" + key + "\"");
    return v;
  };
  if (dash == std::string::npos) throw ParseError(where + ": bad edge key \"" + key + "\"");
  first = num(std::string_view(key).substr(0, dash));
  return Edge(first, num(std::string_view(key).substr(dash + 1)));
}

template <class P>
GraphMap<P> graph_map_at(const json& j) {
  const json& jg = field(j, "graph", "instance");
  const json& jv = field(jg, "vertices", "graph");
  const json& je = field(jg, "edges", "graph");
  if (!jv.is_array() || !je.is_array()) throw ParseError("graph: vertices and edges must be arrays");
  GraphMap<P> m;
  try {
    for (std::size_t i = 0; i < jv.size(); ++i) m.graph.add_vertex(vertex_at(jv[i], "graph.vertices[" + std::to_string(i) + "]"));
    for (std::size_t i = 0; i < je.size(); ++i) {
      const std::string where = "graph.edges[" + std::to_string(i) + "]";
      if (!je[i].is_array() || je[i].size() != 2) throw ParseError(where + ": expected [u, v]");
      m.graph.add_edge(vertex_at(je[i][0], where), vertex_at(je[i][1], where));
    }
  } catch (const GraphError& e) {
    throw ValidationError(std::string("graph: ") + e.what());
  }

  const json& jp = field(j, "positions", "instance");
  if (!jp.is_object()) throw ParseError("positions: expected an object keyed by vertex id");
  for (auto it = jp.begin(); it != jp.end(); ++it) {
    const std::string where = "positions." + it.key();
    std::size_t used = 0;
    Vertex v = 0;
    try {
      v = std::stoi(it.key(), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != it.key().size()) throw ParseError(where + ": key is not a vertex id");
    if (!m.graph.has_vertex(v)) throw ValidationError(where + ": no such vertex");
    m.position[v] = point_at<P>(it.value(), where);
  }
  for (Vertex v : m.graph.vertices())
    if (!m.position.count(v)) throw ValidationError("positions: vertex " + std::to_string(v) + " has no position");

  for (const Edge& e : m.graph.edges()) m.route[e] = {m.position.at(e.u), m.position.at(e.v)};
  if (j.contains("routes")) {
    const json& jr = j.at("routes");
    if (!jr.is_object()) throw ParseError("routes: expected an object keyed by \"u-v\"");
    for (auto it = jr.begin(); it != jr.end(); ++it) {
      const std::string where = "routes." + it.key();
      Vertex first = 0;
      const Edge e = edge_key(it.key(), where, first);
      if (!m.graph.has_edge(e.u, e.v)) throw ValidationError(where + ": no such edge");
      std::vector<P> interior = points_at<P>(it.value(), where);
      if (first == e.v) std::reverse(interior.begin(), interior.end());
      std::vector<P> r{m.position.at(e.u)};
      r.insert(r.end(), interior.begin(), interior.end());
      r.push_back(m.position.at(e.v));
      m.route[e] = std::move(r);
    }
  }
  return m;
}

template <class P>
json graph_map_json(const GraphMap<P>& m, std::string_view kind) {
  json j;
  j["kind"] = kind;
  json edges = json::array();
  for (const Edge& e : m.graph.edges()) edges.push_back({e.u, e.v});
  j["graph"] = {{"vertices", m.graph.vertices()}, {"edges", edges}};
  json pos = json::object();
  for (const auto& [v, p] : m.position) pos[std::to_string(v)] = to_json(p);
  j["positions"] = pos;
  json routes = json::object();
  for (const auto& [e, r] : m.route) {
    if (r.size() <= 2) continue;
    json interior = json::array();
    for (std::size_t i = 1; i + 1 < r.size(); ++i) interior.push_back(to_json(r[i]));
    routes[to_string(e)] = interior;
  }
  if (!routes.empty()) j["routes"] = routes;
  return j;
}

inline std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace io_detail

/// Parses an instance file. Throws ParseError on malformed JSON or fields and
/// ValidationError when the content does not describe a well-formed object.
inline Instance parse_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(io_detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  const json& jk = io_detail::field(j, "kind", "instance");
  if (!jk.is_string()) throw ParseError("kind: expected a string");
  const std::string kind = jk.get<std::string>();
  if (kind == "points3") return io_detail::points_at<Point3>(io_detail::field(j, "positions", "instance"), "positions");
  if (kind == "points2") return io_detail::points_at<Point2>(io_detail::field(j, "positions", "instance"), "positions");
  if (kind == "embedding") return io_detail::graph_map_at<Point3>(j);
  if (kind == "drawing") return io_detail::graph_map_at<Point2>(j);
  throw ParseError("kind: unknown kind \"" + kind + "\"");
}

inline json instance_json(const Instance& inst) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PLEmbedding>) {
          return io_detail::graph_map_json(x, "embedding");
        } else if constexpr (std::is_same_v<T, PlanarDrawing>) {
          return io_detail::graph_map_json(x, "drawing");
        } else {
          json pts = json::array();
          for (const auto& p : x) pts.push_back(io_detail::to_json(p));
          return {{"kind", std::is_same_v<T, std::vector<Point3>> ? "points3" : "points2"}, {"positions", pts}};
        }
      },
      inst);
}

inline std::string emit_instance(const Instance& inst) { return instance_json(inst).dump(2) + "\n"; }

inline std::string_view instance_kind(const Instance& inst) {
  static constexpr std::string_view names[] = {"points3", "points2", "embedding", "drawing"};
  return names[inst.index()];
}

// ---------------------------------------------------------------------------
// Reports

inline json violation_json(const Violation& v) {
  json j{{"kind", v.kind}, {"detail", v.detail}};
  if (v.edge1.first >= 0) j["edge1"] = {{"edge", {v.edge1.first, v.edge1.second}}, {"side", v.side1}};
  if (v.edge2.first >= 0) j["edge2"] = {{"edge", {v.edge2.first, v.edge2.second}}, {"side", v.side2}};
  return j;
}

inline json report_json(const LinkReport& r) {
  json j;
  j["method"] = to_string(r.method);
  j["cycle1"] = r.cycle1.vertices();
  j["cycle2"] = r.cycle2.vertices();
  j["lk"] = r.lk_value;
  j["oracle_confirmed"] = r.oracle_confirmed ? json(*r.oracle_confirmed) : json(nullptr);
  j["removed"] = r.removed;
  if (r.functional) j["functional"] = io_detail::to_json(r.functional->vector());
  if (r.direction) j["direction"] = io_detail::to_json(r.direction->vector());
  json ledgers = json::array();
  for (const auto& l : r.ledgers) {
    json entries = json::array();
    for (const auto& [term, bit] : l.entries) entries.push_back({term, bit});
    ledgers.push_back({{"sum", l.label}, {"total", l.total()}, {"terms", entries}});
  }
  j["ledgers"] = ledgers;
  return j;
}

inline json oracle_json(const OracleResult& r, std::size_t len1, std::size_t len2) {
  json pairs = json::array();
  for (const auto& [a, b] : r.linked) pairs.push_back({a.vertices(), b.vertices()});
  return {{"cycle_lengths", {len1, len2}},
          {"pairs_examined", r.pairs_examined},
          {"linked_count", r.count()},
          {"linked_pairs", pairs}};
}

inline json diagram_json(const ProjectedDiagram& d, const Direction3& dir) {
  json crossings = json::array();
  for (const auto& c : d.crossings) {
    json jc{{"edges", {to_string(c.e1), to_string(c.e2)}},
            {"point", io_detail::to_json(c.point)},
            {"adjacent", c.adjacent}};
    if (c.upper) jc["upper"] = to_string(*c.upper);
    crossings.push_back(jc);
  }
  return {{"direction", io_detail::to_json(dir.vector())},
          {"drawing", instance_json(d.drawing)},
          {"crossings", crossings}};
}

}  // namespace intlink
