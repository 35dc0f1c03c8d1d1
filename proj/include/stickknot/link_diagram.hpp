#ifndef STICKKNOT_LINK_DIAGRAM_HPP
#define STICKKNOT_LINK_DIAGRAM_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stickknot/errors.hpp"

namespace stickknot {

/// One crossing of an oriented diagram. Arc labels are listed
/// counterclockwise starting from the incoming under-strand, so arc[0] -> arc[2]
/// is the under-strand. For sign +1 the over-strand runs arc[3] -> arc[1],
/// for sign -1 it runs arc[1] -> arc[3].
struct Xing {
  std::array<int, 4> arc{};
  int sign = 1;

  /// True when the arc at `pos` enters this crossing.
  bool incoming(int pos) const {
    switch (pos) {
      case 0: return true;
      case 2: return false;
      case 1: return sign < 0;
      default: return sign > 0;
    }
  }

  friend bool operator==(const Xing&, const Xing&) = default;
};

/// Where an arc label sits: crossing index and position 0..3.
struct Slot {
  int x = -1;
  int pos = -1;
};

/// Oriented link diagram on the sphere. Every arc label appears exactly twice
/// among the crossings; closed components without crossings are counted in
/// `free_loops`.
class LinkDiagram {
 public:
  std::vector<Xing> xs;
  int free_loops = 0;

  std::size_t crossing_count() const { return xs.size(); }

  /// Relabels arcs as 0..2c-1, preserving their relative order (so a
  /// diagram that is already compact keeps its labels).
  void compact() {
    std::vector<int> uniq;
    uniq.reserve(4 * xs.size());
    for (const Xing& x : xs) uniq.insert(uniq.end(), x.arc.begin(), x.arc.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (Xing& x : xs)
      for (int& l : x.arc) l = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), l) - uniq.begin());
  }

  /// For compact labels: both slots of every arc.
  std::vector<std::array<Slot, 2>> slots() const {
    std::vector<std::array<Slot, 2>> s(2 * xs.size());
    std::vector<int> fill(2 * xs.size(), 0);
    for (int x = 0; x < static_cast<int>(xs.size()); ++x)
      for (int p = 0; p < 4; ++p) {
        const int l = xs[x].arc[p];
        if (l < 0 || l >= static_cast<int>(s.size()) || fill[l] >= 2)
          throw InputError("malformed diagram: arc label " + std::to_string(l) + " does not appear exactly twice");
        s[l][fill[l]++] = {x, p};
      }
    for (std::size_t l = 0; l < s.size(); ++l)
      if (fill[l] != 2) throw InputError("malformed diagram: arc label " + std::to_string(l) + " appears once");
    return s;
  }

  /// Checks that each arc has one head and one tail.
  void validate_orientation() const {
    const auto s = slots();
    for (std::size_t l = 0; l < s.size(); ++l) {
      const bool h0 = xs[s[l][0].x].incoming(s[l][0].pos);
      const bool h1 = xs[s[l][1].x].incoming(s[l][1].pos);
      if (h0 == h1) throw InputError("malformed diagram: inconsistent orientation on arc " + std::to_string(l));
    }
  }

  /// Slot where arc `l` ends.
  static Slot head(const LinkDiagram& d, const std::vector<std::array<Slot, 2>>& s, int l) {
    const Slot a = s[l][0];
    return d.xs[a.x].incoming(a.pos) ? a : s[l][1];
  }

  /// Arc that continues the strand after arc `l`.
  static int next_arc(const LinkDiagram& d, const std::vector<std::array<Slot, 2>>& s, int l) {
    const Slot h = head(d, s, l);
    return d.xs[h.x].arc[(h.pos + 2) % 4];
  }

  /// Number of link components (free loops included). Requires compact labels.
  int component_count() const {
    const auto s = slots();
    std::vector<char> seen(s.size(), 0);
    int k = free_loops;
    for (int l = 0; l < static_cast<int>(s.size()); ++l) {
      if (seen[l]) continue;
      ++k;
      for (int a = l; !seen[a]; a = next_arc(*this, s, a)) seen[a] = 1;
    }
    return k;
  }

  /// Swaps over and under at crossing x.
  void switch_crossing(std::size_t x) {
    Xing& c = xs[x];
    const auto a = c.arc;
    if (c.sign > 0) {
      c.arc = {a[3], a[0], a[1], a[2]};
    } else {
      c.arc = {a[1], a[2], a[3], a[0]};
    }
    c.sign = -c.sign;
  }

  void mirror() {
    for (std::size_t x = 0; x < xs.size(); ++x) switch_crossing(x);
  }

  /// Oriented smoothing of crossing x. Labels are compacted afterwards.
  void smooth(std::size_t x) {
    const Xing c = xs[x];
    const int under_in = c.arc[0], under_out = c.arc[2];
    const int over_in = c.sign > 0 ? c.arc[3] : c.arc[1];
    const int over_out = c.sign > 0 ? c.arc[1] : c.arc[3];
    remove_and_merge({x}, {{under_in, over_out}, {over_in, under_out}});
  }

  /// Applies Reidemeister I and II reductions until none applies. Returns the
  /// number of crossings removed.
  std::size_t simplify() {
    std::size_t removed = 0;
    for (;;) {
      compact();
      if (xs.empty()) break;
      const auto s = slots();
      auto step = [&](Slot d) -> Slot {
        const int l = xs[d.x].arc[d.pos];
        const Slot o = (s[l][0].x == d.x && s[l][0].pos == d.pos) ? s[l][1] : s[l][0];
        return {o.x, (o.pos + 1) % 4};
      };
      bool changed = false;
      // Monogons first: they are cheap and never block a bigon.
      for (int x = 0; x < static_cast<int>(xs.size()) && !changed; ++x)
        for (int p = 0; p < 4 && !changed; ++p) {
          const Slot n = step({x, p});
          if (n.x == x && n.pos == p) {
            const int m = xs[x].arc[(p + 1) % 4], k = xs[x].arc[(p + 2) % 4];
            remove_and_merge({static_cast<std::size_t>(x)}, {{m, k}});
            removed += 1;
            changed = true;
          }
        }
      for (int x = 0; x < static_cast<int>(xs.size()) && !changed; ++x)
        for (int p = 0; p < 4 && !changed; ++p) {
          const Slot n = step({x, p});
          if (n.x == x) continue;
          const Slot back = step(n);
          if (back.x != x || back.pos != p) continue;
          // Bigon with arcs A = arc[x][p] and B = arc[n.x][n.pos]. A sits at
          // position p at x and n.pos-1 at the other crossing.
          const int q = (n.pos + 3) % 4;
          if ((p % 2) != (q % 2)) continue;  // alternating bigon: not an R2 move
          const int a1 = xs[x].arc[(p + 2) % 4], b1 = xs[x].arc[(p + 1) % 4];
          const int a2 = xs[n.x].arc[(n.pos + 1) % 4], b2 = xs[n.x].arc[(n.pos + 2) % 4];
          remove_and_merge({static_cast<std::size_t>(x), static_cast<std::size_t>(n.x)}, {{a1, a2}, {b1, b2}});
          removed += 2;
          changed = true;
        }
      if (!changed) break;
    }
    return removed;
  }

  /// Splits into connected pieces (sharing no arcs). Free loops stay with
  /// the caller: returned pieces have free_loops = 0.
  std::vector<LinkDiagram> connected_pieces() const {
    const std::size_t n = xs.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    const auto s = slots();
    for (const auto& occ : s) parent[find(occ[0].x)] = find(occ[1].x);
    std::vector<int> piece_of(n, -1);
    std::vector<LinkDiagram> out;
    for (std::size_t x = 0; x < n; ++x) {
      const int r = find(static_cast<int>(x));
      if (piece_of[r] < 0) {
        piece_of[r] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[piece_of[r]].xs.push_back(xs[x]);
    }
    for (auto& d : out) d.compact();
    return out;
  }

 private:
  /// Deletes the given crossings and identifies each pair of arc labels.
  /// Identified classes left with no occurrence become free loops.
  void remove_and_merge(std::vector<std::size_t> gone, const std::vector<std::pair<int, int>>& merges) {
    std::vector<int> labels;
    for (const auto& [a, b] : merges) {
      labels.push_back(a);
      labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<int> parent(labels.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto idx = [&](int l) { return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()); };
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& [a, b] : merges) {
      const int ra = find(idx(a)), rb = find(idx(b));
      // Keep the smallest label as representative.
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::sort(gone.begin(), gone.end());
    std::vector<Xing> kept;
    kept.reserve(xs.size() - gone.size());
    for (std::size_t x = 0; x < xs.size(); ++x)
      if (!std::binary_search(gone.begin(), gone.end(), x)) kept.push_back(xs[x]);
    std::vector<char> alive(labels.size(), 0);
    for (Xing& c : kept)
      for (int& l : c.arc) {
        auto it = std::lower_bound(labels.begin(), labels.end(), l);
        if (it != labels.end() && *it == l) {
          const int r = find(static_cast<int>(it - labels.begin()));
          l = labels[r];
          alive[r] = 1;
        }
      }
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i) && !alive[i]) ++free_loops;
    xs = std::move(kept);
  }
};

}  // namespace stickknot

#endif  // STICKKNOT_LINK_DIAGRAM_HPP
