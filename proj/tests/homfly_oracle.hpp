#ifndef STICKKNOT_HOMFLY_ORACLE_HPP
#define STICKKNOT_HOMFLY_ORACLE_HPP

#include <array>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "stickknot/homfly.hpp"

namespace testing_support {

using stickknot::LaurentPoly2;
using stickknot::PDCode;

// Naive skein oracle: no simplification, no memo, fixed base points.
// Crossings carry their four arc labels by role; the sign is +1 when the
// over-strand runs from position 3 to position 1 of the PD tuple.
struct OXing {
  int ui, uo, oi, oo, sign;
};

struct ODiagram {
  std::vector<OXing> xs;
  int loops = 0;
};

// Orientation from sequential labels 1..2c along a knot.
inline ODiagram from_knot_pd(const PDCode& pd) {
  const int m = 2 * static_cast<int>(pd.size());
  ODiagram d;
  for (const auto& c : pd.crossings) {
    const bool d_to_b = ((c[1] - c[3]) % m + m) % m == 1;
    if (d_to_b) {
      d.xs.push_back({c[0], c[2], c[3], c[1], +1});
    } else {
      d.xs.push_back({c[0], c[2], c[1], c[3], -1});
    }
  }
  if (pd.empty()) d.loops = 1;
  return d;
}

inline LaurentPoly2 naive_homfly(ODiagram d) {
  const LaurentPoly2 delta = LaurentPoly2::delta();
  if (d.xs.empty()) return delta.pow(static_cast<unsigned>(d.loops - 1));
  std::map<int, int> next;
  for (int i = 0; i < static_cast<int>(d.xs.size()); ++i) {
    next[d.xs[i].ui] = d.xs[i].uo;
    next[d.xs[i].oi] = d.xs[i].oo;
  }
  std::map<int, std::pair<int, bool>> arrive;  // label -> (crossing, arrives as under)
  for (int i = 0; i < static_cast<int>(d.xs.size()); ++i) {
    arrive[d.xs[i].ui] = {i, true};
    arrive[d.xs[i].oi] = {i, false};
  }
  std::set<int> seen_label;
  std::set<int> met;
  int components = 0;
  int bad = -1;
  for (const auto& [start, unused] : next) {
    if (seen_label.count(start)) continue;
    ++components;
    for (int l = start; !seen_label.count(l); l = next[l]) {
      seen_label.insert(l);
      const auto [x, under] = arrive[l];
      if (met.insert(x).second && under && bad < 0) bad = x;
    }
  }
  if (bad < 0) return delta.pow(static_cast<unsigned>(components + d.loops - 1));

  const OXing c = d.xs[bad];
  ODiagram sw = d;
  sw.xs[bad] = {c.oi, c.oo, c.ui, c.uo, -c.sign};
  ODiagram sm = d;
  sm.xs.erase(sm.xs.begin() + bad);
  std::array<std::pair<int, int>, 2> merges{{{c.ui, c.oo}, {c.oi, c.uo}}};
  for (std::size_t k = 0; k < 2; ++k) {
    const auto [p, q] = merges[k];
    if (p == q) {
      ++sm.loops;
      continue;
    }
    for (OXing& x : sm.xs)
      for (int* l : {&x.ui, &x.uo, &x.oi, &x.oo})
        if (*l == q) *l = p;
    for (std::size_t j = k + 1; j < 2; ++j) {
      if (merges[j].first == q) merges[j].first = p;
      if (merges[j].second == q) merges[j].second = p;
    }
  }
  if (c.sign > 0) return naive_homfly(sw).times_monomial(1, -2, 0) + naive_homfly(sm).times_monomial(1, -1, 1);
  return naive_homfly(sw).times_monomial(1, 2, 0) + naive_homfly(sm).times_monomial(-1, 1, 1);
}

inline PDCode switch_knot_crossing(const PDCode& pd, std::size_t k) {
  const int m = 2 * static_cast<int>(pd.size());
  PDCode out = pd;
  const auto c = pd.crossings[k];
  const bool d_to_b = ((c[1] - c[3]) % m + m) % m == 1;
  out.crossings[k] = d_to_b ? std::array<int, 4>{c[3], c[0], c[1], c[2]} : std::array<int, 4>{c[1], c[2], c[3], c[0]};
  return out;
}

}  // namespace testing_support

#endif  // STICKKNOT_HOMFLY_ORACLE_HPP
