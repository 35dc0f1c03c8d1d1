#ifndef STICKKNOT_BOUNDS_HPP
#define STICKKNOT_BOUNDS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stickknot/errors.hpp"
#include "stickknot/polygon.hpp"

namespace stickknot {

/// Closed integer interval [lo, hi] of current knowledge about an invariant.
struct Interval {
  int lo = 0;
  int hi = 0;

  bool contains(int v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct BoundsEntry {
  std::string knot;
  int crossing_number = 0;
  int bridge_index = 0;
  Interval stick;
  Interval eqstick;
  Interval sb;
  std::string provenance;

  bool nontrivial() const { return crossing_number > 0; }
  friend bool operator==(const BoundsEntry&, const BoundsEntry&) = default;
};

inline constexpr std::string_view kBoundsHeader = "knot,cr,bridge,stick_lo,stick_hi,eqstick_lo,eqstick_hi,sb_lo,sb_hi,provenance";

namespace detail {

inline void check_interval(const BoundsEntry& e, const Interval& iv, const char* what, const std::string& cause) {
  if (iv.lo > iv.hi)
    throw InconsistentDataError("inconsistent data for " + e.knot + ": " + what + " lower bound " + std::to_string(iv.lo) +
                                " exceeds upper bound " + std::to_string(iv.hi) + (cause.empty() ? "" : " (" + cause + ")"));
}

inline void check_entry(const BoundsEntry& e, const std::string& cause = "") {
  check_interval(e, e.stick, "stick", cause);
  check_interval(e, e.eqstick, "eqstick", cause);
  check_interval(e, e.sb, "sb", cause);
}

}  // namespace detail

/// Tightens an entry with the general bounds
///   sb <= stick / 2, sb <= 3 b - 1, stick <= 3 (cr + 1) / 2, stick <= eqstick,
///   eqstick >= stick, sb >= b + 1 (nontrivial knots).
/// Idempotent, and never widens an interval.
inline BoundsEntry propagate(BoundsEntry e) {
  detail::check_entry(e);
  if (e.nontrivial()) {
    e.stick.hi = std::min(e.stick.hi, 3 * (e.crossing_number + 1) / 2);
    detail::check_interval(e, e.stick, "stick", "stick <= 3(cr+1)/2");
  }
  e.stick.hi = std::min(e.stick.hi, e.eqstick.hi);
  detail::check_interval(e, e.stick, "stick", "stick <= eqstick");
  e.eqstick.lo = std::max(e.eqstick.lo, e.stick.lo);
  detail::check_interval(e, e.eqstick, "eqstick", "eqstick >= stick");
  e.sb.hi = std::min(e.sb.hi, e.stick.hi / 2);
  detail::check_interval(e, e.sb, "sb", "sb <= stick/2");
  if (e.bridge_index > 0) {
    e.sb.hi = std::min(e.sb.hi, 3 * e.bridge_index - 1);
    detail::check_interval(e, e.sb, "sb", "sb <= 3b-1");
    if (e.nontrivial()) {
      e.sb.lo = std::max(e.sb.lo, e.bridge_index + 1);
      detail::check_interval(e, e.sb, "sb", "sb >= b+1");
    }
  }
  return e;
}

/// Lowers stick and eqstick upper bounds to a newly realized value, then
/// propagates. Bounds that are already lower are kept.
inline BoundsEntry apply_theorem_result(BoundsEntry e, int new_stick_hi, int new_eqstick_hi, std::string_view tag = {}) {
  if (new_stick_hi < e.stick.lo)
    throw InconsistentDataError("inconsistent data for " + e.knot + ": new stick bound " + std::to_string(new_stick_hi) +
                                " is below the lower bound " + std::to_string(e.stick.lo));
  if (new_eqstick_hi < e.eqstick.lo)
    throw InconsistentDataError("inconsistent data for " + e.knot + ": new eqstick bound " + std::to_string(new_eqstick_hi) +
                                " is below the lower bound " + std::to_string(e.eqstick.lo));
  const BoundsEntry before = e;
  e.stick.hi = std::min(e.stick.hi, new_stick_hi);
  e.eqstick.hi = std::min(e.eqstick.hi, new_eqstick_hi);
  e = propagate(std::move(e));
  if (!tag.empty() && !(e == before)) e.provenance = e.provenance.empty() ? std::string(tag) : std::string(tag) + "; " + e.provenance;
  return e;
}

/// sb <= ceil(cr / 2), stated for knots with crossing number at least 7.
inline bool check_conjecture(int crossing_number, int sb_hi) {
  if (crossing_number < 7) throw InputError("conjecture scope: crossing number must be at least 7, got " + std::to_string(crossing_number));
  return sb_hi <= (crossing_number + 1) / 2;
}

/// The conjectured bound for the torus knot T(p,q): min(2p, q) <= ceil(q(p-1)/2).
inline bool check_torus_conjecture(int p, int q) {
  if (p < 2 || q <= p) throw InputError("torus knot parameters need 2 <= p < q");
  if (std::gcd(p, q) != 1) throw InputError("torus knot parameters must be coprime");
  const int cr = q * (p - 1);
  if (cr < 7) throw InputError("conjecture scope: T(" + std::to_string(p) + "," + std::to_string(q) + ") has crossing number " + std::to_string(cr));
  return std::min(2 * p, q) <= (cr + 1) / 2;
}

class BoundsTable {
 public:
  BoundsTable() = default;
  explicit BoundsTable(std::vector<BoundsEntry> entries) {
    for (auto& e : entries) insert(std::move(e));
  }

  void insert(BoundsEntry e) {
    if (index_.count(e.knot)) throw InputError("duplicate knot in bounds table: " + e.knot);
    detail::check_entry(e);
    if (e.eqstick.lo < e.stick.lo || e.eqstick.hi < e.stick.hi)
      throw InconsistentDataError("inconsistent data for " + e.knot + ": eqstick interval does not dominate the stick interval");
    index_[e.knot] = entries_.size();
    entries_.push_back(std::move(e));
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<BoundsEntry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  const BoundsEntry* find(std::string_view knot) const {
    auto it = index_.find(std::string(knot));
    return it == index_.end() ? nullptr : &entries_[it->second];
  }

  const BoundsEntry& at(std::string_view knot) const {
    if (const BoundsEntry* e = find(knot)) return *e;
    throw InputError("unknown knot: " + std::string(knot));
  }

  void replace(const BoundsEntry& e) {
    auto it = index_.find(e.knot);
    if (it == index_.end()) throw InputError("unknown knot: " + e.knot);
    entries_[it->second] = e;
  }

 private:
  std::vector<BoundsEntry> entries_;
  std::map<std::string, std::size_t> index_;
};

inline BoundsTable load_table(std::string_view csv) {
  BoundsTable t;
  bool header_seen = false;
  detail::for_each_line(csv, [&](std::string_view raw, std::size_t no) {
    const std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') return;
    if (!header_seen && line.substr(0, 5) == "knot,") {
      if (line != kBoundsHeader) throw InputError("line " + std::to_string(no) + ": unexpected header");
      header_seen = true;
      return;
    }
    std::vector<std::string> f;
    std::size_t pos = 0;
    for (int k = 0; k < 9; ++k) {
      const auto comma = line.find(',', pos);
      if (comma == std::string_view::npos) throw InputError("line " + std::to_string(no) + ": expected 10 comma-separated fields");
      f.emplace_back(line.substr(pos, comma - pos));
      pos = comma + 1;
    }
    f.emplace_back(line.substr(pos));
    std::vector<int> v;
    for (int k = 1; k <= 8; ++k) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoi(f[k], &used));
        if (used != f[k].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(no) + ": field " + std::to_string(k + 1) + " is not an integer");
      }
    }
    BoundsEntry e{f[0], v[0], v[1], {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}, f[9]};
    try {
      t.insert(std::move(e));
    } catch (const InputError& err) {
      throw InputError("line " + std::to_string(no) + ": " + err.what());
    } catch (const InconsistentDataError& err) {
      throw InconsistentDataError("line " + std::to_string(no) + ": " + err.what());
    }
  });
  return t;
}

inline std::string emit_table(const BoundsTable& t) {
  std::string out(kBoundsHeader);
  out += '\n';
  for (const BoundsEntry& e : t) {
    for (const auto& part : {e.knot, std::to_string(e.crossing_number), std::to_string(e.bridge_index), std::to_string(e.stick.lo),
                             std::to_string(e.stick.hi), std::to_string(e.eqstick.lo), std::to_string(e.eqstick.hi),
                             std::to_string(e.sb.lo), std::to_string(e.sb.hi)})
      out += part + ',';
    out += e.provenance + '\n';
  }
  return out;
}

/// Findings of a whole-table audit; empty vectors mean the table is
/// internally consistent.
struct TableAudit {
  std::vector<std::string> not_fixed_point;   // propagation would tighten these
  std::vector<std::string> inconsistent;      // propagation fails
  std::vector<std::string> conjecture_fails;  // cr >= 7 and sb.hi > ceil(cr/2)
  int max_sb_hi = 0;

  bool ok() const { return not_fixed_point.empty() && inconsistent.empty() && conjecture_fails.empty(); }
};

inline TableAudit audit_table(const BoundsTable& t) {
  TableAudit a;
  for (const BoundsEntry& e : t) {
    a.max_sb_hi = std::max(a.max_sb_hi, e.sb.hi);
    try {
      if (!(propagate(e) == e)) a.not_fixed_point.push_back(e.knot);
    } catch (const InconsistentDataError& err) {
      a.inconsistent.push_back(err.what());
    }
    if (e.crossing_number >= 7 && !check_conjecture(e.crossing_number, e.sb.hi)) a.conjecture_fails.push_back(e.knot);
  }
  return a;
}

}  // namespace stickknot

#endif  // STICKKNOT_BOUNDS_HPP
