#ifndef STICKKNOT_EQUILATERAL_HPP
#define STICKKNOT_EQUILATERAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "stickknot/polygon.hpp"

namespace stickknot {

/// Outcome of the Millett-Rawdon test max_i |L_i - 1| < min(mu/n, mu^2/4).
struct EquilateralReport {
  std::size_t n = 0;
  double mu = 0;
  double max_deviation = 0;   // max_i |L_i - 1|
  double threshold = 0;       // min(mu/n, mu^2/4)
  double margin_exponent = 0; // log10(max_deviation / threshold); -inf for exact polygons
  bool certified = false;
};

/// Edges are compared against length 1, not the mean edge length, so the
/// caller is responsible for scaling. A self-intersecting polygon (mu = 0)
/// gets threshold 0 and is never certified.
inline EquilateralReport certify_equilateral(const Polygon& p) {
  EquilateralReport r;
  r.n = p.size();
  r.mu = min_nonadjacent_edge_distance(p);
  for (double len : edge_lengths(p)) r.max_deviation = std::max(r.max_deviation, std::abs(len - 1.0));
  r.threshold = std::min(r.mu / static_cast<double>(r.n), r.mu * r.mu / 4.0);
  if (r.threshold <= 0) {
    r.margin_exponent = std::numeric_limits<double>::infinity();
  } else if (r.max_deviation == 0) {
    r.margin_exponent = -std::numeric_limits<double>::infinity();
  } else {
    r.margin_exponent = std::log10(r.max_deviation / r.threshold);
  }
  r.certified = r.max_deviation < r.threshold;
  return r;
}

}  // namespace stickknot

#endif  // STICKKNOT_EQUILATERAL_HPP
