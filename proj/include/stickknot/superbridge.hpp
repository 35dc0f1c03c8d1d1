#ifndef STICKKNOT_SUPERBRIDGE_HPP
#define STICKKNOT_SUPERBRIDGE_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stickknot/errors.hpp"
#include "stickknot/exact.hpp"
#include "stickknot/polygon.hpp"

namespace stickknot {

/// Number of local maxima of the height function v on the polygon, i.e. the
/// cyclic +/- sign changes in v.e_1, ..., v.e_n.
inline int local_maxima_count(const std::vector<int>& edge_signs) {
  const std::size_t n = edge_signs.size();
  int count = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (edge_signs[i] > 0 && edge_signs[(i + 1) % n] < 0) ++count;
  return count;
}

inline int local_maxima_count(const Polygon& p, const Direction& v) {
  const Vec3 u = v.unit();
  std::vector<int> s(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec3 e = p.edge(i);
    const double h = dot(u, e);
    if (std::abs(h) <= 1e-12 * norm(e))
      throw DegenerateError("non-generic direction: perpendicular to edge " + std::to_string(i));
    s[i] = h > 0 ? 1 : -1;
  }
  return local_maxima_count(s);
}

struct SbResult {
  int value = 0;
  Direction witness_direction{Vec3{0, 0, 1}};
  std::size_t cell_count = 0;
};

namespace detail {

/// Sign pattern of the cell touching the vertex w = e_i x e_j of the
/// great-circle arrangement, on the side given by (side, ray). The probe is
/// v = w + ray*eps2*(w x e_i) + side*eps1*e_i with 0 < eps1 << eps2 << 1.
struct CellProbe {
  std::size_t i, j;
  int side, ray;
};

/// Floating-point direction inside the probed cell, checked against the
/// exact sign pattern.
inline std::optional<Vec3> realize_probe(const std::vector<Vec3>& e, const CellProbe& c, const std::vector<int>& want) {
  const Vec3 ei = normalized(e[c.i]);
  const Vec3 w = normalized(cross(e[c.i], e[c.j]));
  const Vec3 t = normalized(cross(w, ei));
  for (double eps2 = 1e-2; eps2 > 1e-7; eps2 *= 0.1)
    for (double ratio = 1e-2; ratio > 1e-6; ratio *= 0.1) {
      const Vec3 v = w + (c.ray * eps2) * t + (c.side * eps2 * ratio) * ei;
      bool ok = true;
      for (std::size_t k = 0; k < e.size() && ok; ++k) {
        const double h = dot(v, e[k]);
        ok = std::abs(h) > 1e-12 * norm(e[k]) * norm(v) && (h > 0 ? 1 : -1) == want[k];
      }
      if (ok) return v;
    }
  return std::nullopt;
}

}  // namespace detail

/// Exact superbridge number: the largest local-maxima count over all
/// generic directions, found by visiting every cell of the arrangement of
/// great circles {v : v.e_i = 0}. Signs are decided in exact integer
/// arithmetic on the stored coordinates.
inline SbResult superbridge_number(const Polygon& p) {
  const std::size_t n = p.size();
  const std::vector<IntVec3> e = exact_edges(p);
  const std::vector<Vec3> ef = p.edges();

  std::vector<std::vector<BigInt>> gram(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) gram[i][j] = gram[j][i] = dot(e[i], e[j]);

  std::set<std::vector<int>> cells;
  int best = -1;
  std::vector<int> best_signs;
  detail::CellProbe best_probe{};
  bool any_vertex = false;
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const IntVec3 w = cross(e[i], e[j]);
      if (w[0] == 0 && w[1] == 0 && w[2] == 0) continue;
      any_vertex = true;
      std::vector<int> first(n), second(n);
      for (std::size_t k = 0; k < n; ++k) {
        first[k] = sign_of(dot(w, e[k]));
        // (w x e_i).e_k = (e_i.e_i)(e_j.e_k) - (e_i.e_k)(e_j.e_i)
        second[k] = sign_of(gram[i][i] * gram[j][k] - gram[i][k] * gram[j][i]);
      }
      for (int ray : {1, -1})
        for (int side : {1, -1}) {
          for (std::size_t k = 0; k < n; ++k) {
            if (first[k] != 0) {
              s[k] = first[k];
            } else if (second[k] != 0) {
              s[k] = ray * second[k];
            } else {
              s[k] = side * sign_of(gram[i][k]);
            }
          }
          if (!cells.insert(s).second) continue;
          const int m = local_maxima_count(s);
          if (m > best) {
            best = m;
            best_signs = s;
            best_probe = {i, j, side, ray};
          }
        }
    }
  if (!any_vertex) throw DegenerateError("all edges are parallel");

  SbResult r;
  r.value = best;
  r.cell_count = cells.size();
  if (auto v = detail::realize_probe(ef, best_probe, best_signs)) {
    r.witness_direction = Direction(*v);
  } else {
    r.witness_direction = Direction(cross(ef[best_probe.i], ef[best_probe.j]));
  }
  return r;
}

}  // namespace stickknot

#endif  // STICKKNOT_SUPERBRIDGE_HPP
