#ifndef STICKKNOT_KNOT_TABLE_HPP
#define STICKKNOT_KNOT_TABLE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stickknot/diagram.hpp"
#include "stickknot/errors.hpp"
#include "stickknot/homfly.hpp"
#include "stickknot/laurent.hpp"
#include "stickknot/pd_code.hpp"
#include "stickknot/polygon.hpp"

namespace stickknot {

/// Knot name plus chirality. The mirror of "3_1" prints as "m3_1".
struct KnotId {
  std::string name;
  bool mirror = false;

  std::string str() const { return mirror ? "m" + name : name; }
  friend auto operator<=>(const KnotId&, const KnotId&) = default;
};

/// One row of the reference PD file.
struct ReferenceKnot {
  std::string name;
  int crossing_number = 0;
  int bridge_index = 0;
  PDCode pd;
};

/// Reads lines "name cr bridge pd", '#' comments allowed.
inline std::vector<ReferenceKnot> load_reference_knots(std::string_view text) {
  std::vector<ReferenceKnot> out;
  detail::for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    const auto f = detail::fields(line);
    if (f.empty()) return;
    if (f.size() < 4) throw InputError("reference line " + std::to_string(lineno) + ": expected name, crossing number, bridge index, PD code");
    ReferenceKnot k;
    k.name = std::string(f[0]);
    try {
      k.crossing_number = std::stoi(std::string(f[1]));
      k.bridge_index = std::stoi(std::string(f[2]));
    } catch (const std::exception&) {
      throw InputError("reference line " + std::to_string(lineno) + ": bad integer field");
    }
    const std::size_t at = line.find(f[3]);
    k.pd = parse_pd(line.substr(at));
    out.push_back(std::move(k));
  });
  return out;
}

/// HOMFLY values of reference knots and their mirror images. Amphichiral
/// knots get a single entry.
class KnotTable {
 public:
  struct Entry {
    KnotId id;
    LaurentPoly2 poly;
  };

  void add(const std::string& name, const LaurentPoly2& poly) {
    if (!names_.insert(name).second) throw InputError("duplicate knot name in reference data: " + name);
    entries_.push_back({{name, false}, poly});
    const LaurentPoly2 m = poly.mirrored();
    if (m != poly) entries_.push_back({{name, true}, m});
  }

  std::size_t base_count() const { return names_.size(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  bool contains(const std::string& name) const { return names_.count(name) > 0; }

  std::optional<LaurentPoly2> lookup(const KnotId& id) const {
    for (const Entry& e : entries_)
      if (e.id.name == id.name && (e.id.mirror == id.mirror || e.poly == e.poly.mirrored())) return e.poly;
    return std::nullopt;
  }

  std::set<KnotId> matching(const LaurentPoly2& poly) const {
    std::set<KnotId> out;
    for (const Entry& e : entries_)
      if (e.poly == poly) out.insert(e.id);
    return out;
  }

  /// Groups of distinct base names sharing a polynomial (up to mirror).
  std::vector<std::vector<std::string>> collisions() const {
    std::map<LaurentPoly2, std::set<std::string>> by_poly;
    for (const Entry& e : entries_) by_poly[e.poly].insert(e.id.name);
    std::set<std::vector<std::string>> groups;
    for (const auto& [p, names] : by_poly)
      if (names.size() > 1) groups.insert({names.begin(), names.end()});
    return {groups.begin(), groups.end()};
  }

 private:
  std::vector<Entry> entries_;
  std::set<std::string> names_;
};

/// Table from reference PD codes, each evaluated with homfly.
inline KnotTable build_table(const std::vector<ReferenceKnot>& refs, std::size_t crossing_budget = kDefaultSkeinBudget) {
  HomflyEvaluator eval(crossing_budget);
  KnotTable t;
  for (const ReferenceKnot& k : refs) t.add(k.name, eval(k.pd));
  return t;
}

inline KnotTable build_table(std::string_view reference_text, std::size_t crossing_budget = kDefaultSkeinBudget) {
  return build_table(load_reference_knots(reference_text), crossing_budget);
}

/// Table names whose HOMFLY polynomial equals that of `pd`.
inline std::set<KnotId> identify(const PDCode& pd, const KnotTable& table, std::size_t crossing_budget = kDefaultSkeinBudget) {
  return table.matching(homfly(pd, crossing_budget));
}

/// Distinct base names in an identification result.
inline std::set<std::string> base_names(const std::set<KnotId>& ids) {
  std::set<std::string> out;
  for (const KnotId& k : ids) out.insert(k.name);
  return out;
}

struct PolygonIdentification {
  Direction axis{Vec3{0, 0, 1}};
  std::size_t raw_crossings = 0;
  std::size_t reduced_crossings = 0;
  PDCode pd;  // reduced code
  LaurentPoly2 poly;
  std::set<KnotId> matches;
};

/// Projects along +z (perturbed if needed) and along `extra_axes` seeded
/// random directions, keeps the projection with the fewest crossings after
/// R1/R2 reduction, and identifies it.
inline PolygonIdentification identify_polygon(const Polygon& p, const KnotTable& table, std::uint64_t seed = 1,
                                              std::size_t crossing_budget = kDefaultSkeinBudget, int extra_axes = 24) {
  std::mt19937_64 rng(seed);
  std::optional<PolygonIdentification> best;
  auto consider = [&](const Direction& axis) {
    const Diagram d = project_to_diagram(p, axis);
    const PDCode reduced = d.crossings.empty() ? PDCode{} : simplify_diagram(d.pd);
    if (!best || reduced.size() < best->reduced_crossings) {
      best = PolygonIdentification{axis, d.crossings.size(), reduced.size(), reduced, {}, {}};
    }
  };
  consider(perturb_axis_until_generic(p, Direction(Vec3{0, 0, 1}), seed));
  for (int k = 0; k < extra_axes; ++k) {
    const Direction axis(random_unit_vector(rng));
    if (is_generic(p, axis)) consider(axis);
  }
  best->poly = homfly(best->pd, crossing_budget);
  best->matches = table.matching(best->poly);
  return *best;
}

}  // namespace stickknot

#endif  // STICKKNOT_KNOT_TABLE_HPP
