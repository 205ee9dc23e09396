#pragma once

// SVG 1.1 export of planar drawings and projected diagrams. This is the only
// place coordinates are converted to floating point.

#include <intlink/embedding.hpp>
#include <intlink/projection.hpp>
#include <intlink/rational.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace intlink {

namespace svg_detail {

struct Frame {
  double min_x = 0, min_y = 0, scale = 1;
  double size = 600, margin = 30;

  std::pair<double, double> map(const Point2& p) const {
    return {margin + (to_double(p.x) - min_x) * scale, size - margin - (to_double(p.y) - min_y) * scale};
  }
};

inline Frame frame_for(const PlanarDrawing& d) {
  Frame f;
  double max_x = 0, max_y = 0;
  bool first = true;
  auto add = [&](const Point2& p) {
    const double x = to_double(p.x), y = to_double(p.y);
    if (first) {
      f.min_x = max_x = x;
      f.min_y = max_y = y;
      first = false;
    }
    f.min_x = std::min(f.min_x, x);
    f.min_y = std::min(f.min_y, y);
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  };
  for (const auto& [v, p] : d.position) add(p);
  for (const auto& [e, r] : d.route)
    for (const auto& p : r) add(p);
  const double extent = std::max({max_x - f.min_x, max_y - f.min_y, 1e-9});
  f.scale = (f.size - 2 * f.margin) / extent;
  return f;
}

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string render(const PlanarDrawing& d, const std::vector<Crossing>& crossings, bool gaps) {
  const Frame f = frame_for(d);
  const double gap_px = 6;

  // Parameters along each (edge, side) where that strand passes under.
  std::map<std::pair<Edge, int>, std::vector<double>> under;
  if (gaps)
    for (const auto& c : crossings) {
      if (!c.upper) continue;
      const bool first_lower = *c.upper != c.e1;
      const Edge e = first_lower ? c.e1 : c.e2;
      const int side = first_lower ? c.side1 : c.side2;
      const auto& r = d.route.at(e);
      const Point2 a = r[side], b = r[side + 1];
      const Point2 ab = b - a;
      under[{e, side}].push_back(to_double(dot(c.point - a, ab) / dot(ab, ab)));
    }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(f.size) + "\" height=\"" +
         num(f.size) + "\" viewBox=\"0 0 " + num(f.size) + " " + num(f.size) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& [e, r] : d.route) {
    std::string path;
    for (std::size_t s = 0; s + 1 < r.size(); ++s) {
      const auto [x0, y0] = f.map(r[s]);
      const auto [x1, y1] = f.map(r[s + 1]);
      if (path.empty()) path += "M " + num(x0) + " " + num(y0);
      auto it = under.find({e, static_cast<int>(s)});
      if (it != under.end()) {
        std::vector<double> ts = it->second;
        std::sort(ts.begin(), ts.end());
        const double len = std::hypot(x1 - x0, y1 - y0);
        const double half = len > 0 ? gap_px / 2 / len : 0;
        for (double t : ts) {
          const double t0 = std::max(0.0, t - half), t1 = std::min(1.0, t + half);
          path += " L " + num(x0 + (x1 - x0) * t0) + " " + num(y0 + (y1 - y0) * t0);
          path += " M " + num(x0 + (x1 - x0) * t1) + " " + num(y0 + (y1 - y0) * t1);
        }
      }
      path += " L " + num(x1) + " " + num(y1);
    }
    out += "<path class=\"edge\" data-edge=\"" + to_string(e) + "\" d=\"" + path +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& c : crossings) {
    const auto [x, y] = f.map(c.point);
    out += "<circle class=\"crossing\" cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"2.5\" fill=\"" +
           (c.adjacent ? "gray" : "red") + "\"/>\n";
  }
  for (const auto& [v, p] : d.position) {
    const auto [x, y] = f.map(p);
    out += "<circle class=\"vertex\" cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"4\" fill=\"steelblue\"/>\n";
    out += "<text x=\"" + num(x + 6) + "\" y=\"" + num(y - 6) + "\" font-family=\"sans-serif\" font-size=\"12\">" +
           std::to_string(v) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace svg_detail

/// Plain drawing: crossings marked, no over/under information.
inline std::string render_svg(const PlanarDrawing& d) {
  return svg_detail::render(d, extract_crossings(d), false);
}

/// Projected diagram: the lower strand is interrupted at every crossing.
inline std::string render_svg(const ProjectedDiagram& diag) {
  return svg_detail::render(diag.drawing, diag.crossings, true);
}

}  // namespace intlink
