#pragma once

#include <intlink/errors.hpp>

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace intlink {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0, v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  bool shares_vertex(const Edge& o) const { return touches(o.u) || touches(o.v); }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

/// Simple undirected graph: no loops, no multi-edges, sorted vertex and edge
/// lists.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Vertex> vertices, std::vector<Edge> edges) {
    for (Vertex v : vertices) add_vertex(v);
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  void add_vertex(Vertex v) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it != vertices_.end() && *it == v) throw GraphError("duplicate vertex " + std::to_string(v));
    vertices_.insert(it, v);
  }

  void add_edge(Vertex a, Vertex b) {
    if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
    if (!has_vertex(a) || !has_vertex(b)) throw GraphError("edge endpoint is not a vertex");
    const Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) throw GraphError("multi-edge " + to_string(e));
    edges_.insert(it, e);
  }

  void remove_edge(const Edge& e) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) throw GraphError("no edge " + to_string(e));
    edges_.erase(it);
  }

  void remove_vertex(Vertex v) {
    std::erase_if(edges_, [v](const Edge& e) { return e.touches(v); });
    std::erase(vertices_, v);
  }

  bool has_vertex(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }
  bool has_edge(Vertex a, Vertex b) const {
    return a != b && std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const Edge& e : edges_)
      if (e.touches(v)) out.push_back(e.other(v));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  Vertex next_free_vertex() const { return vertices_.empty() ? 0 : vertices_.back() + 1; }

  /// Subgraph induced on everything except `removed`.
  Graph without(const std::vector<Vertex>& removed) const {
    Graph g = *this;
    for (Vertex v : removed) g.remove_vertex(v);
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// K_n on vertices 0..n-1.
inline Graph complete_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// K_{n,m} with parts 0..n-1 and n..n+m-1.
inline Graph complete_bipartite(int n, int m) {
  Graph g;
  for (int i = 0; i < n + m; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i)
    for (int j = n; j < n + m; ++j) g.add_edge(i, j);
  return g;
}

/// Two-colouring of a connected bipartite graph, if one exists.
inline std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition(const Graph& g) {
  std::map<Vertex, int> color;
  for (Vertex s : g.vertices()) {
    if (color.count(s)) continue;
    color[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        auto it = color.find(y);
        if (it == color.end()) {
          color[y] = 1 - color[x];
          stack.push_back(y);
        } else if (it->second == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<Vertex>, std::vector<Vertex>> parts;
  for (auto [v, c] : color) (c == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

inline bool is_complete(const Graph& g, std::size_t n) {
  return g.vertices().size() == n && g.edges().size() == n * (n - 1) / 2;
}

/// Whether g is K_{n,n}; returns the two parts ordered by their least vertex.
inline std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> as_complete_bipartite(const Graph& g,
                                                                                                std::size_t n) {
  if (g.vertices().size() != 2 * n || g.edges().size() != n * n) return std::nullopt;
  auto parts = bipartition(g);
  if (!parts || parts->first.size() != n || parts->second.size() != n) return std::nullopt;
  if (parts->second.front() < parts->first.front()) std::swap(parts->first, parts->second);
  return parts;
}

/// Simple cycle, stored canonically: least vertex first, then towards the
/// smaller of its two neighbours.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::vector<Vertex> seq) : vertices_(canonical(std::move(seq))) {}

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      out.emplace_back(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
    return out;
  }
  bool contains(Vertex v) const { return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end(); }
  bool disjoint_from(const Cycle& o) const {
    for (Vertex v : vertices_)
      if (o.contains(v)) return false;
    return true;
  }

  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  static std::vector<Vertex> canonical(std::vector<Vertex> seq) {
    if (seq.size() < 3) throw GraphError("cycle needs at least three vertices");
    if (std::set<Vertex>(seq.begin(), seq.end()).size() != seq.size())
      throw GraphError("cycle repeats a vertex");
    auto least = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), least, seq.end());
    if (seq.back() < seq[1]) std::reverse(seq.begin() + 1, seq.end());
    return seq;
  }

  std::vector<Vertex> vertices_;
};

inline std::string to_string(const Cycle& c) {
  std::string s;
  for (Vertex v : c.vertices()) s += (s.empty() ? "" : "-") + std::to_string(v);
  return s;
}

/// Checks the cycle runs along edges of g.
inline bool cycle_in_graph(const Cycle& c, const Graph& g) {
  for (const Edge& e : c.edges())
    if (!g.has_edge(e.u, e.v)) return false;
  return true;
}

/// All simple cycles of the given length, sorted canonically.
inline std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t length) {
  std::vector<Cycle> out;
  if (length < 3) return out;
  std::vector<Vertex> path;
  auto extend = [&](auto&& self) -> void {
    const Vertex start = path.front();
    if (path.size() == length) {
      if (g.has_edge(path.back(), start) && path[1] < path.back()) out.emplace_back(path);
      return;
    }
    for (Vertex n : g.neighbors(path.back())) {
      if (n <= start || std::find(path.begin(), path.end(), n) != path.end()) continue;
      path.push_back(n);
      self(self);
      path.pop_back();
    }
  };
  for (Vertex s : g.vertices()) {
    path = {s};
    extend(extend);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Unordered pairs of vertex-disjoint cycles with lengths len1 and len2.
/// For equal lengths each pair appears once with the smaller cycle first.
inline std::vector<std::pair<Cycle, Cycle>> enumerate_disjoint_cycle_pairs(const Graph& g, std::size_t len1,
                                                                          std::size_t len2) {
  std::vector<std::pair<Cycle, Cycle>> out;
  const auto first = enumerate_cycles(g, len1);
  if (len1 == len2) {
    for (std::size_t i = 0; i < first.size(); ++i)
      for (std::size_t j = i + 1; j < first.size(); ++j)
        if (first[i].disjoint_from(first[j])) out.emplace_back(first[i], first[j]);
    return out;
  }
  const auto second = enumerate_cycles(g, len2);
  for (const auto& a : first)
    for (const auto& b : second)
      if (a.disjoint_from(b)) out.emplace_back(a, b);
  return out;
}

}  // namespace intlink
