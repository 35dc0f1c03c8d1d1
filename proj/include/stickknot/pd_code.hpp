#ifndef STICKKNOT_PD_CODE_HPP
#define STICKKNOT_PD_CODE_HPP

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stickknot/errors.hpp"
#include "stickknot/link_diagram.hpp"

namespace stickknot {

/// Planar-diagram code of a knot: per crossing, four arc labels
/// counterclockwise from the incoming under-strand. Labels run 1..2c.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  std::size_t size() const { return crossings.size(); }
  bool empty() const { return crossings.empty(); }
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Accepts "[[1,5,2,4],[3,1,4,6],...]", "PD[X[1,5,2,4], ...]" and similar:
/// every integer is read, in groups of four. "[]" is the unknot.
inline PDCode parse_pd(std::string_view text) {
  std::vector<int> nums;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isdigit(static_cast<unsigned char>(text[i])) ||
        (text[i] == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      nums.push_back(std::stoi(std::string(text.substr(i, j - i))));
      i = j;
    } else {
      ++i;
    }
  }
  if (nums.size() % 4 != 0) throw InputError("malformed PD code: label count is not a multiple of 4");
  PDCode pd;
  for (std::size_t i = 0; i < nums.size(); i += 4) pd.crossings.push_back({nums[i], nums[i + 1], nums[i + 2], nums[i + 3]});
  return pd;
}

inline std::string format_pd(const PDCode& pd) {
  std::string s = "[";
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    if (i) s += ',';
    const auto& c = pd.crossings[i];
    s += '[' + std::to_string(c[0]) + ',' + std::to_string(c[1]) + ',' + std::to_string(c[2]) + ',' +
         std::to_string(c[3]) + ']';
  }
  return s + ']';
}

/// Builds the oriented diagram of a PD code. Over-strand directions are
/// inferred by propagating arc orientations from the under-strands, so the
/// labels need not be consecutive along the knot.
inline LinkDiagram to_link_diagram(const PDCode& pd) {
  LinkDiagram d;
  if (pd.empty()) {
    d.free_loops = 1;
    return d;
  }
  std::map<int, int> relabel;
  for (const auto& c : pd.crossings)
    for (int l : c) relabel.try_emplace(l, static_cast<int>(relabel.size()));
  for (const auto& c : pd.crossings) {
    Xing x;
    for (int p = 0; p < 4; ++p) x.arc[p] = relabel.at(c[p]);
    x.sign = 0;
    d.xs.push_back(x);
  }
  const std::size_t arcs = relabel.size();
  if (arcs != 2 * pd.size()) throw InputError("malformed PD code: expected " + std::to_string(2 * pd.size()) + " distinct arc labels");
  // Slots per arc.
  std::vector<std::vector<Slot>> at(arcs);
  for (int x = 0; x < static_cast<int>(d.xs.size()); ++x)
    for (int p = 0; p < 4; ++p) at[d.xs[x].arc[p]].push_back({x, p});
  for (std::size_t l = 0; l < arcs; ++l)
    if (at[l].size() != 2) throw InputError("malformed PD code: an arc label does not appear exactly twice");

  // role: +1 head (arc enters the crossing there), -1 tail, 0 unknown.
  std::vector<std::array<int, 4>> role(d.xs.size(), {+1, 0, -1, 0});
  auto set_role = [&](Slot s, int r, std::vector<Slot>& work) {
    int& cur = role[s.x][s.pos];
    if (cur == r) return;
    if (cur != 0) throw InputError("malformed PD code: inconsistent strand orientation");
    cur = r;
    work.push_back(s);
  };
  std::vector<Slot> work;
  for (int x = 0; x < static_cast<int>(d.xs.size()); ++x) {
    work.push_back({x, 0});
    work.push_back({x, 2});
  }
  auto drain = [&] {
    while (!work.empty()) {
      const Slot s = work.back();
      work.pop_back();
      const int r = role[s.x][s.pos];
      const int l = d.xs[s.x].arc[s.pos];
      const Slot other = (at[l][0].x == s.x && at[l][0].pos == s.pos) ? at[l][1] : at[l][0];
      set_role(other, -r, work);
      set_role({s.x, (s.pos + 2) % 4}, -r, work);
    }
  };
  drain();
  // Components that pass only over crossings keep the direction implied by
  // consecutive labels.
  for (int x = 0; x < static_cast<int>(d.xs.size()); ++x) {
    if (role[x][1] != 0) continue;
    const auto& c = pd.crossings[x];
    const bool up = c[1] == c[3] + 1 || (c[3] - c[1] > 1);
    set_role({x, 3}, up ? +1 : -1, work);
    drain();
  }
  for (std::size_t x = 0; x < d.xs.size(); ++x) d.xs[x].sign = role[x][3] > 0 ? +1 : -1;
  d.validate_orientation();
  return d;
}

/// PD code of a single-component diagram, labels 1..2c assigned along the
/// orientation starting from arc `start` (compact label).
inline PDCode to_pd(LinkDiagram d, int start = 0) {
  if (d.xs.empty()) {
    if (d.free_loops != 1) throw InputError("diagram is not a knot: " + std::to_string(d.free_loops) + " components");
    return {};
  }
  if (d.free_loops != 0) throw InputError("diagram is not a knot: it has split components");
  d.compact();
  const auto s = d.slots();
  std::vector<int> label(s.size(), 0);
  int next = 1, a = start;
  while (label[a] == 0) {
    label[a] = next++;
    a = LinkDiagram::next_arc(d, s, a);
  }
  if (next - 1 != static_cast<int>(s.size())) throw InputError("diagram is not a knot: more than one component");
  PDCode pd;
  for (const Xing& x : d.xs) pd.crossings.push_back({label[x.arc[0]], label[x.arc[1]], label[x.arc[2]], label[x.arc[3]]});
  return pd;
}

/// Checks labels and that the code describes one closed component.
inline void validate_knot_pd(const PDCode& pd) {
  const LinkDiagram d = to_link_diagram(pd);
  if (d.component_count() != 1) throw InputError("PD code describes " + std::to_string(d.component_count()) + " components, expected 1");
}

/// Writhe contributions of each crossing, in code order.
inline std::vector<int> crossing_signs(const PDCode& pd) {
  std::vector<int> out;
  for (const Xing& x : to_link_diagram(pd).xs) out.push_back(x.sign);
  return out;
}

/// Over/under swapped at every crossing.
inline PDCode mirror(const PDCode& pd) {
  LinkDiagram d = to_link_diagram(pd);
  d.mirror();
  return to_pd(d);
}

/// Reidemeister I/II reduction to a fixed point; never adds crossings.
inline PDCode simplify_diagram(const PDCode& pd) {
  LinkDiagram d = to_link_diagram(pd);
  d.simplify();
  return to_pd(d);
}

}  // namespace stickknot

#endif  // STICKKNOT_PD_CODE_HPP
