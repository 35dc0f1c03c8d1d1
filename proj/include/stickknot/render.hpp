#ifndef STICKKNOT_RENDER_HPP
#define STICKKNOT_RENDER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "stickknot/polygon.hpp"

namespace stickknot {

struct RenderOptions {
  double stroke_width = 0;  // 0: 1.5% of the larger picture dimension
  double gap_factor = 3;    // gap length in stroke widths
  double margin = 0.05;     // fraction of the picture size
  std::string stroke = "#1a1a1a";
};

/// A crossing as seen by the renderer: the under-edge parameter where the
/// gap goes, and the sign axis.(e_over x e_under).
struct RenderedCrossing {
  std::size_t under_edge = 0;
  double under_param = 0;
  int sign = 0;
};

/// Crossings of the projection along `axis`, found directly from 3D edge
/// geometry.
inline std::vector<RenderedCrossing> render_crossings(const Polygon& p, const Direction& axis) {
  const ViewFrame f(axis);
  const std::size_t n = p.size();
  std::vector<RenderedCrossing> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edges_adjacent(i, j, n)) continue;
      const Vec3 a = p.vertex(i), b = p.vertex(i + 1), c = p.vertex(j), d = p.vertex(j + 1);
      const Vec3 ea = b - a, ec = d - c;
      // Solve a + s ea = c + t ec in the image plane.
      const Vec2 pa = f.project(a), da = f.project(ea), pc = f.project(c), dc = f.project(ec);
      const double den = cross(da, dc);
      if (den == 0) continue;
      const Vec2 r = pc - pa;
      const double s = cross(r, dc) / den, t = cross(r, da) / den;
      if (s <= 0 || s >= 1 || t <= 0 || t >= 1) continue;
      const double ha = f.depth(a + s * ea), hc = f.depth(c + t * ec);
      const bool i_over = ha > hc;
      const Vec3 eo = i_over ? ea : ec, eu = i_over ? ec : ea;
      RenderedCrossing x;
      x.under_edge = i_over ? j : i;
      x.under_param = i_over ? t : s;
      x.sign = dot(f.axis, cross(eo, eu)) > 0 ? 1 : -1;
      out.push_back(x);
    }
  return out;
}

inline int render_writhe(const Polygon& p, const Direction& axis) {
  int w = 0;
  for (const auto& c : render_crossings(p, axis)) w += c.sign;
  return w;
}

/// Orthographic SVG picture seen from +infinity along `axis`. Each strand
/// between two under-crossing gaps is its own <path class="strand">; a
/// diagram without crossings is one closed path.
inline std::string render_svg(const Polygon& p, const Direction& axis, const RenderOptions& opt = {}) {
  const ViewFrame f(axis);
  const std::size_t n = p.size();
  std::vector<Vec2> pt(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 q = f.project(p[i]);
    pt[i] = {q.x, -q.y};
  }
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
  for (const Vec2& q : pt) {
    x0 = std::min(x0, q.x), x1 = std::max(x1, q.x);
    y0 = std::min(y0, q.y), y1 = std::max(y1, q.y);
  }
  const double size = std::max({x1 - x0, y1 - y0, 1e-9});
  const double sw = opt.stroke_width > 0 ? opt.stroke_width : 0.015 * size;
  const double pad = opt.margin * size;

  char buf[160];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    return s == "-0.000000" ? std::string("0.000000") : s;
  };
  auto at = [&](std::size_t e, double t) { return pt[e] + t * (pt[(e + 1) % n] - pt[e]); };

  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(x0 - pad) + " " + num(y0 - pad) + " " +
         num(x1 - x0 + 2 * pad) + " " + num(y1 - y0 + 2 * pad) + "\">\n";
  svg += "<g fill=\"none\" stroke=\"" + opt.stroke + "\" stroke-width=\"" + num(sw) + "\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";

  const auto xs = render_crossings(p, axis);
  if (xs.empty()) {
    std::string d = "M " + num(pt[0].x) + " " + num(pt[0].y);
    for (std::size_t i = 1; i < n; ++i) d += " L " + num(pt[i].x) + " " + num(pt[i].y);
    svg += "<path class=\"strand\" d=\"" + d + " Z\"/>\n";
  } else {
    // Gaps as intervals of arclength parameter (edge index + t).
    struct Gap {
      double from, to;
    };
    std::vector<Gap> gaps;
    for (const auto& c : xs) {
      const double len = norm(pt[(c.under_edge + 1) % n] - pt[c.under_edge]);
      const double half = std::min(0.45, 0.5 * opt.gap_factor * sw / std::max(len, 1e-300));
      const double t0 = std::max(c.under_param - half, 0.0), t1 = std::min(c.under_param + half, 1.0);
      gaps.push_back({static_cast<double>(c.under_edge) + t0, static_cast<double>(c.under_edge) + t1});
    }
    std::sort(gaps.begin(), gaps.end(), [](const Gap& a, const Gap& b) { return a.from < b.from; });
    auto point_at = [&](double s) {
      const auto e = static_cast<std::size_t>(std::floor(s)) % n;
      return at(e, s - std::floor(s));
    };
    const std::size_t g = gaps.size();
    for (std::size_t k = 0; k < g; ++k) {
      const double start = gaps[k].to;
      double stop = gaps[(k + 1) % g].from;
      if (k + 1 == g) stop += static_cast<double>(n);
      stop = std::max(stop, start);
      const Vec2 s0 = point_at(start);
      std::string d = "M " + num(s0.x) + " " + num(s0.y);
      for (double v = std::floor(start) + 1; v < stop; v += 1) {
        const Vec2 q = pt[static_cast<std::size_t>(v) % n];
        d += " L " + num(q.x) + " " + num(q.y);
      }
      const Vec2 s1 = point_at(stop);
      d += " L " + num(s1.x) + " " + num(s1.y);
      svg += "<path class=\"strand\" d=\"" + d + "\"/>\n";
    }
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

/// Number of strands (under-crossing gaps) in SVG text from render_svg.
inline std::size_t count_strands(const std::string& svg) {
  std::size_t count = 0;
  for (std::size_t pos = svg.find("class=\"strand\""); pos != std::string::npos; pos = svg.find("class=\"strand\"", pos + 1)) ++count;
  return count;
}

}  // namespace stickknot

#endif  // STICKKNOT_RENDER_HPP
