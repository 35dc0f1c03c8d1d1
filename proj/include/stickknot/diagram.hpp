#ifndef STICKKNOT_DIAGRAM_HPP
#define STICKKNOT_DIAGRAM_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "stickknot/errors.hpp"
#include "stickknot/pd_code.hpp"
#include "stickknot/polygon.hpp"

namespace stickknot {

/// Transverse double point of a projected polygon.
struct Crossing {
  std::size_t over_edge = 0;
  std::size_t under_edge = 0;
  double over_param = 0;   // position along the over edge, in (0,1)
  double under_param = 0;  // position along the under edge, in (0,1)
  Vec2 position;
  int sign = 0;            // +1 right-handed, -1 left-handed
};

struct Diagram {
  std::vector<Crossing> crossings;
  PDCode pd;

  int writhe() const {
    int w = 0;
    for (const Crossing& c : crossings) w += c.sign;
    return w;
  }
};

inline constexpr double kGenericityTolerance = 1e-9;

namespace detail {

inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  const double len2 = dot(d, d);
  const double t = len2 > 0 ? std::clamp(dot(p - a, d) / len2, 0.0, 1.0) : 0.0;
  return norm(p - (a + t * d));
}

/// Projected length scale so tolerances behave the same for unit-edge and
/// integer-coordinate polygons.
inline double polygon_scale(const Polygon& p) {
  double s = 0;
  for (double l : edge_lengths(p)) s = std::max(s, l);
  return std::max(s, 1.0);
}

}  // namespace detail

/// All crossings of the projection along `axis`, after checking genericity.
/// Throws DegenerateError naming the first degeneracy found.
inline std::vector<Crossing> find_crossings(const Polygon& p, const Direction& axis) {
  const std::size_t n = p.size();
  const Projection proj = project_orthographic(p, axis);
  const auto& pt = proj.points;
  const double tol = kGenericityTolerance * detail::polygon_scale(p);
  auto edge_name = [](std::size_t i) { return "edge " + std::to_string(i); };

  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 d = pt[(i + 1) % n] - pt[i];
    if (norm(d) < tol) throw DegenerateError("non-generic projection: " + edge_name(i) + " is parallel to the viewing axis");
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k || (j + 1) % n == k) continue;  // edges incident to vertex k
      if (detail::point_segment_distance(pt[k], pt[j], pt[(j + 1) % n]) < tol)
        throw DegenerateError("non-generic projection: vertex " + std::to_string(k) + " projects onto " + edge_name(j));
    }

  std::vector<Crossing> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) {
      if (edges_adjacent(i, j, n)) continue;
      const Vec2 p0 = pt[i], d1 = pt[(i + 1) % n] - p0;
      const Vec2 q0 = pt[j], d2 = pt[(j + 1) % n] - q0;
      const double den = cross(d1, d2);
      const Vec2 r = q0 - p0;
      if (std::abs(den) < 1e-300) continue;  // parallel; overlaps were caught by the vertex test
      const double s = cross(r, d2) / den, t = cross(r, d1) / den;
      if (s <= 0 || s >= 1 || t <= 0 || t >= 1) continue;
      const double zi = proj.depth[i] + s * (proj.depth[(i + 1) % n] - proj.depth[i]);
      const double zj = proj.depth[j] + t * (proj.depth[(j + 1) % n] - proj.depth[j]);
      if (std::abs(zi - zj) < tol)
        throw DegenerateError("non-generic projection: " + edge_name(i) + " and " + edge_name(j) + " are within tolerance in depth (self-intersection?)");
      Crossing c;
      c.position = p0 + s * d1;
      if (zi > zj) {
        c.over_edge = i, c.over_param = s, c.under_edge = j, c.under_param = t;
      } else {
        c.over_edge = j, c.over_param = t, c.under_edge = i, c.under_param = s;
      }
      const Vec2 dover = pt[(c.over_edge + 1) % n] - pt[c.over_edge];
      const Vec2 dunder = pt[(c.under_edge + 1) % n] - pt[c.under_edge];
      c.sign = cross(dover, dunder) > 0 ? +1 : -1;
      out.push_back(c);
    }
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (norm(out[a].position - out[b].position) < tol)
        throw DegenerateError("non-generic projection: triple point near crossing " + std::to_string(a));
  return out;
}

/// PD code of the crossings, arcs numbered along the polygon from vertex 0.
/// Arc 1 is the arc through vertex 0.
inline PDCode pd_from_crossings(const std::vector<Crossing>& xs) {
  struct Pass {
    double where;  // edge index + parameter
    std::size_t crossing;
    bool over;
  };
  std::vector<Pass> passes;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    passes.push_back({static_cast<double>(xs[k].over_edge) + xs[k].over_param, k, true});
    passes.push_back({static_cast<double>(xs[k].under_edge) + xs[k].under_param, k, false});
  }
  std::sort(passes.begin(), passes.end(), [](const Pass& a, const Pass& b) { return a.where < b.where; });
  const int m = static_cast<int>(passes.size());
  // Pass k (0-based) ends arc k+1 and starts arc k+2 (mod m).
  std::vector<int> in_over(xs.size()), in_under(xs.size());
  for (int k = 0; k < m; ++k) (passes[k].over ? in_over : in_under)[passes[k].crossing] = k + 1;
  auto out_of = [m](int in) { return in % m + 1; };
  PDCode pd;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const int a = in_under[k], b = in_over[k];
    if (xs[k].sign > 0) {
      pd.crossings.push_back({a, out_of(b), out_of(a), b});
    } else {
      pd.crossings.push_back({a, b, out_of(a), out_of(b)});
    }
  }
  return pd;
}

/// Generic projection along `axis` as crossings plus PD code.
inline Diagram project_to_diagram(const Polygon& p, const Direction& axis) {
  Diagram d;
  d.crossings = find_crossings(p, axis);
  d.pd = pd_from_crossings(d.crossings);
  return d;
}

inline bool is_generic(const Polygon& p, const Direction& axis) {
  try {
    (void)find_crossings(p, axis);
    return true;
  } catch (const DegenerateError&) {
    return false;
  }
}

/// A direction within 0.01 rad of `axis` that is generic for `p`; `axis`
/// itself when already generic. Deterministic in `seed`.
inline Direction perturb_axis_until_generic(const Polygon& p, const Direction& axis, std::uint64_t seed) {
  if (is_generic(p, axis)) return axis;
  const Vec3 a = axis.unit();
  const Vec3 helper = std::abs(a.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 u = normalized(cross(a, helper));
  const Vec3 w = cross(a, u);
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const double phi = 2 * std::numbers::pi * uniform();
    const double theta = 0.01 * (0.05 + 0.9 * uniform());
    const Direction cand(std::cos(theta) * a + std::sin(theta) * (std::cos(phi) * u + std::sin(phi) * w));
    if (is_generic(p, cand)) return cand;
  }
  throw DegenerateError("no generic direction found near the requested axis after 1000 attempts");
}

/// Random unit vector, uniform on the sphere.
template <typename Rng>
Vec3 random_unit_vector(Rng& rng) {
  std::normal_distribution<double> g;
  for (;;) {
    const Vec3 v{g(rng), g(rng), g(rng)};
    const double n = norm(v);
    if (n > 1e-12) return v / n;
  }
}

}  // namespace stickknot

#endif  // STICKKNOT_DIAGRAM_HPP
