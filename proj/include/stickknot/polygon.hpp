#ifndef STICKKNOT_POLYGON_HPP
#define STICKKNOT_POLYGON_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stickknot/errors.hpp"
#include "stickknot/vec.hpp"

namespace stickknot {

/// A nonzero direction in R^3. Only the ray matters for projections; the
/// sign matters for sign-alternation questions.
class Direction {
 public:
  explicit Direction(Vec3 v) : v_(v) {
    if (!(dot(v, v) > 0) || !std::isfinite(dot(v, v))) throw InputError("direction must be a finite nonzero vector");
  }
  Direction(double x, double y, double z) : Direction(Vec3{x, y, z}) {}

  Vec3 vec() const { return v_; }
  Vec3 unit() const { return normalized(v_); }

 private:
  Vec3 v_;
};

/// Closed polygonal curve. Edge i runs from vertex i to vertex (i+1) mod n.
class Polygon {
 public:
  explicit Polygon(std::vector<Vec3> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) throw InputError("too few vertices: a polygon needs at least 3");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const Vec3& a = vertices_[i];
      if (!std::isfinite(a.x) || !std::isfinite(a.y) || !std::isfinite(a.z))
        throw InputError("vertex " + std::to_string(i) + " has a non-finite coordinate");
      if (a == vertices_[(i + 1) % vertices_.size()])
        throw InputError("coincident consecutive vertices " + std::to_string(i) + " and " +
                         std::to_string((i + 1) % vertices_.size()));
    }
  }

  std::size_t size() const { return vertices_.size(); }
  std::span<const Vec3> vertices() const { return vertices_; }
  const Vec3& operator[](std::size_t i) const { return vertices_[i]; }
  const Vec3& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  Vec3 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }

  std::vector<Vec3> edges() const {
    std::vector<Vec3> e(size());
    for (std::size_t i = 0; i < size(); ++i) e[i] = edge(i);
    return e;
  }

  Vec3 centroid() const {
    Vec3 c;
    for (const Vec3& v : vertices_) c += v;
    return c / static_cast<double>(size());
  }

 private:
  std::vector<Vec3> vertices_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

/// Splits a line on whitespace, after removing a trailing '#' comment.
inline std::vector<std::string_view> fields(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline double parse_double(std::string_view s, std::size_t line_no) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw InputError("line " + std::to_string(line_no) + ": '" + std::string(s) + "' is not a number");
  return v;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    f(text.substr(0, nl), ++line_no);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

}  // namespace detail

/// Parses whitespace-separated vertex coordinates, one vertex per line.
/// Blank lines and '#' comments are ignored.
inline Polygon load_polygon(std::string_view text) {
  std::vector<Vec3> vs;
  detail::for_each_line(text, [&](std::string_view line, std::size_t no) {
    const auto f = detail::fields(line);
    if (f.empty()) return;
    if (f.size() != 3)
      throw InputError("line " + std::to_string(no) + ": expected 3 coordinates, found " + std::to_string(f.size()));
    vs.push_back({detail::parse_double(f[0], no), detail::parse_double(f[1], no), detail::parse_double(f[2], no)});
  });
  if (vs.size() < 3) throw InputError("too few vertices: found " + std::to_string(vs.size()) + ", need at least 3");
  return Polygon(std::move(vs));
}

/// Lengths L_i of edge (i, i+1 mod n).
inline std::vector<double> edge_lengths(const Polygon& p) {
  std::vector<double> l(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) l[i] = norm(p.edge(i));
  return l;
}

/// Euclidean distance between segments [p0,p1] and [q0,q1], by the clamped
/// closest-point parametrization.
inline double segment_distance(Vec3 p0, Vec3 p1, Vec3 q0, Vec3 q1) {
  const Vec3 d1 = p1 - p0, d2 = q1 - q0, r = p0 - q0;
  const double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
  constexpr double tiny = 1e-300;
  double s = 0, t = 0;
  if (a <= tiny && e <= tiny) return norm(r);
  if (a <= tiny) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = dot(d1, r);
    if (e <= tiny) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = dot(d1, d2);
      const double denom = a * e - b * b;
      // Parallel segments: any s works, pick 0 and let the clamps fix t.
      s = denom > 1e-14 * a * e ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0) {
        t = 0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1) {
        t = 1;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return norm((p0 + s * d1) - (q0 + t * d2));
}

/// Edges i and j share a vertex (or are the same edge).
inline bool edges_adjacent(std::size_t i, std::size_t j, std::size_t n) {
  return i == j || (i + 1) % n == j || (j + 1) % n == i;
}

/// Minimum distance mu between non-adjacent edges; 0 means self-intersection.
inline double min_nonadjacent_edge_distance(const Polygon& p) {
  const std::size_t n = p.size();
  if (n <= 3) throw InputError("no non-adjacent edges: polygon has " + std::to_string(n) + " edges");
  double mu = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) {
      if (edges_adjacent(i, j, n)) continue;
      mu = std::min(mu, segment_distance(p.vertex(i), p.vertex(i + 1), p.vertex(j), p.vertex(j + 1)));
    }
  return mu;
}

/// Applies x -> R x + t to every vertex.
inline Polygon transformed(const Polygon& p, const Mat3& rotation, Vec3 translation = {}) {
  std::vector<Vec3> vs;
  vs.reserve(p.size());
  for (const Vec3& v : p.vertices()) vs.push_back(rotation * v + translation);
  return Polygon(std::move(vs));
}

inline Polygon scaled(const Polygon& p, double s) {
  std::vector<Vec3> vs;
  vs.reserve(p.size());
  for (const Vec3& v : p.vertices()) vs.push_back(s * v);
  return Polygon(std::move(vs));
}

/// Cyclically relabels so that vertex `start` becomes vertex 0.
inline Polygon rotated_start(const Polygon& p, std::size_t start) {
  std::vector<Vec3> vs;
  vs.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) vs.push_back(p.vertex(start + i));
  return Polygon(std::move(vs));
}

/// Rigid motion (proper rotation plus translation) taking vertex 0 to the
/// origin, vertex 1 onto the positive x-axis and vertex 2 into the xy-plane
/// with positive y. Never reflects.
inline Polygon normalize(const Polygon& p) {
  const Vec3 o = p[0];
  const Vec3 a = p[1] - o, b = p[2] - o;
  const Vec3 n = cross(a, b);
  if (norm(n) <= 1e-14 * norm(a) * norm(b)) throw DegenerateError("degenerate frame: first three vertices are collinear");
  const Vec3 ex = normalized(a);
  const Vec3 ez = normalized(n);
  const Vec3 ey = cross(ez, ex);
  Mat3 r;
  r.rows = {ex, ey, ez};
  std::vector<Vec3> vs;
  vs.reserve(p.size());
  for (const Vec3& v : p.vertices()) vs.push_back(r * (v - o));
  // The frame vertices satisfy the convention exactly, not just to rounding.
  vs[0] = {0, 0, 0};
  vs[1].y = vs[1].z = 0;
  vs[2].z = 0;
  return Polygon(std::move(vs));
}

/// Right-handed orthonormal frame (u, w, axis): a picture drawn with u to the
/// right and w up is what a viewer at +infinity along `axis` sees.
struct ViewFrame {
  Vec3 u, w, axis;

  explicit ViewFrame(const Direction& d) : axis(d.unit()) {
    const Vec3 helper = std::abs(axis.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    u = normalized(helper - dot(helper, axis) * axis);
    w = cross(axis, u);
  }

  Vec2 project(Vec3 v) const { return {dot(v, u), dot(v, w)}; }
  double depth(Vec3 v) const { return dot(v, axis); }
};

struct Projection {
  std::vector<Vec2> points;
  std::vector<double> depth;  // larger = closer to the viewer
};

/// Orthographic projection along `axis`. For axis +z this is (x, y) with z as depth.
inline Projection project_orthographic(const Polygon& p, const Direction& axis) {
  const ViewFrame f(axis);
  Projection out;
  out.points.reserve(p.size());
  out.depth.reserve(p.size());
  for (const Vec3& v : p.vertices()) {
    out.points.push_back(f.project(v));
    out.depth.push_back(f.depth(v));
  }
  return out;
}

/// Plain-text coordinates, 17 significant digits (round-trips doubles).
inline std::string format_polygon(const Polygon& p) {
  std::string out;
  char buf[96];
  for (const Vec3& v : p.vertices()) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", v.x, v.y, v.z);
    out += buf;
  }
  return out;
}

}  // namespace stickknot

#endif  // STICKKNOT_POLYGON_HPP
