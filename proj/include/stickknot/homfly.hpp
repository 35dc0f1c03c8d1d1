#ifndef STICKKNOT_HOMFLY_HPP
#define STICKKNOT_HOMFLY_HPP

#include <algorithm>
#include <climits>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "stickknot/errors.hpp"
#include "stickknot/laurent.hpp"
#include "stickknot/link_diagram.hpp"
#include "stickknot/pd_code.hpp"

namespace stickknot {

inline constexpr std::size_t kDefaultSkeinBudget = 16;

/// Crossing budget from STICKKNOT_SKEIN_BUDGET, falling back to 16.
inline std::size_t skein_budget_from_env() {
  if (const char* v = std::getenv("STICKKNOT_SKEIN_BUDGET")) {
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return kDefaultSkeinBudget;
}

/// HOMFLY polynomial by skein-tree evaluation, normalized by
/// a P(L+) - a^-1 P(L-) = z P(L0) and P(unknot) = 1.
///
/// Each node is reduced by R1/R2 moves and split into connected pieces. A
/// piece is resolved at the first crossing met from below while walking the
/// components from a chosen base point; once no such crossing remains the
/// piece is a descending diagram of an unlink. Results are memoized on a
/// canonical relabeling, so one evaluator can be reused across many knots.
class HomflyEvaluator {
 public:
  explicit HomflyEvaluator(std::size_t crossing_budget = kDefaultSkeinBudget) : budget_(crossing_budget) {}

  LaurentPoly2 operator()(const PDCode& pd) {
    if (pd.empty()) return LaurentPoly2(1);
    LinkDiagram d = to_link_diagram(pd);
    if (d.component_count() != 1) throw InputError("homfly expects a single-component PD code");
    d.simplify();
    if (d.crossing_count() > budget_)
      throw BudgetError("skein crossing budget exceeded: " + std::to_string(d.crossing_count()) + " crossings after R1/R2 reduction, budget " +
                        std::to_string(budget_));
    return evaluate(std::move(d));
  }

  /// Any oriented link diagram, without the budget check.
  LaurentPoly2 evaluate(LinkDiagram d) {
    d.simplify();
    const auto pieces = d.connected_pieces();
    const int parts = d.free_loops + static_cast<int>(pieces.size());
    LaurentPoly2 result = LaurentPoly2::delta().pow(static_cast<unsigned>(std::max(parts - 1, 0)));
    for (const auto& piece : pieces) result = result * evaluate_piece(piece, {});
    return result;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  using Slots = std::vector<std::array<Slot, 2>>;

  /// Start arc per component, in walking order.
  using Base = std::vector<int>;

  static std::vector<std::vector<int>> components(const LinkDiagram& d, const Slots& s) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(s.size(), 0);
    for (int l = 0; l < static_cast<int>(s.size()); ++l) {
      if (seen[l]) continue;
      comps.emplace_back();
      for (int a = l; !seen[a]; a = LinkDiagram::next_arc(d, s, a)) {
        seen[a] = 1;
        comps.back().push_back(a);
      }
    }
    return comps;
  }

  /// Canonical code: the lexicographically smallest relabeling over all
  /// starting arcs, walking components in order of first contact.
  static std::vector<int> canonical_key(const LinkDiagram& d, const Slots& s) {
    const int arcs = static_cast<int>(s.size());
    const int nx = static_cast<int>(d.xs.size());
    std::vector<int> best, cur, arc_id(arcs), x_id(nx), order;
    cur.reserve(5 * nx + 1);
    order.reserve(nx);
    for (int start = 0; start < arcs; ++start) {
      std::fill(arc_id.begin(), arc_id.end(), -1);
      std::fill(x_id.begin(), x_id.end(), -1);
      order.clear();
      int next_arc_id = 0;
      auto walk = [&](int a) {
        while (arc_id[a] < 0) {
          arc_id[a] = next_arc_id++;
          const Slot h = LinkDiagram::head(d, s, a);
          if (x_id[h.x] < 0) {
            x_id[h.x] = static_cast<int>(order.size());
            order.push_back(h.x);
          }
          a = d.xs[h.x].arc[(h.pos + 2) % 4];
        }
      };
      walk(start);
      for (std::size_t k = 0; k < order.size(); ++k) {
        const Xing& x = d.xs[order[k]];
        for (int p = 0; p < 4; ++p)
          if (x.incoming(p) && arc_id[x.arc[p]] < 0) walk(x.arc[p]);
      }
      cur.clear();
      cur.push_back(nx);
      for (int xi : order) {
        const Xing& x = d.xs[xi];
        cur.push_back(x.sign);
        for (int p = 0; p < 4; ++p) cur.push_back(arc_id[x.arc[p]]);
      }
      if (best.empty() || cur < best) best = cur;
    }
    return best;
  }

  /// Crossings first met as under-strand when walking from `base`, in order.
  static int first_bad_crossing(const LinkDiagram& d, const Slots& s, const Base& base, int* bad_count) {
    std::vector<char> met(d.xs.size(), 0);
    int first = -1, count = 0;
    std::vector<char> seen(s.size(), 0);
    for (int start : base)
      for (int a = start; !seen[a]; a = LinkDiagram::next_arc(d, s, a)) {
        seen[a] = 1;
        const Slot h = LinkDiagram::head(d, s, a);
        if (met[h.x]) continue;
        met[h.x] = 1;
        if (h.pos == 0) {
          ++count;
          if (first < 0) first = h.x;
        }
      }
    if (bad_count) *bad_count = count;
    return first;
  }

  /// Chooses start arcs and component order with few resolutions needed.
  static Base choose_base(const LinkDiagram& d, const Slots& s) {
    const auto comps = components(d, s);
    const int k = static_cast<int>(comps.size());
    std::vector<int> comp_of(s.size());
    for (int c = 0; c < k; ++c)
      for (int a : comps[c]) comp_of[a] = c;

    // Best start within each component, counting only its self-crossings.
    std::vector<int> start(k);
    for (int c = 0; c < k; ++c) {
      int best = INT_MAX;
      for (int cand : comps[c]) {
        int bad = 0;
        std::vector<char> met(d.xs.size(), 0);
        for (std::size_t i = 0, a = cand; i < comps[c].size(); ++i, a = LinkDiagram::next_arc(d, s, static_cast<int>(a))) {
          const Slot h = LinkDiagram::head(d, s, static_cast<int>(a));
          const Xing& x = d.xs[h.x];
          if (comp_of[x.arc[0]] != comp_of[x.arc[1]] || met[h.x]) continue;
          met[h.x] = 1;
          if (h.pos == 0) ++bad;
        }
        if (bad < best) {
          best = bad;
          start[c] = cand;
        }
      }
    }
    if (k == 1) return {start[0]};

    // under_of[c1][c2]: crossings where c1 passes under c2.
    std::vector<std::vector<int>> under(k, std::vector<int>(k, 0));
    for (const Xing& x : d.xs) {
      const int cu = comp_of[x.arc[0]], co = comp_of[x.arc[1]];
      if (cu != co) ++under[cu][co];
    }
    std::vector<int> perm(k), best_perm;
    std::iota(perm.begin(), perm.end(), 0);
    auto cost = [&](const std::vector<int>& p) {
      int c = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) c += under[p[i]][p[j]];
      return c;
    };
    if (k <= 7) {
      int best = INT_MAX;
      do {
        const int c = cost(perm);
        if (c < best) {
          best = c;
          best_perm = perm;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      // Greedy: repeatedly take the component lying under the fewest others.
      std::vector<char> used(k, 0);
      for (int step = 0; step < k; ++step) {
        int pick = -1, pick_cost = INT_MAX;
        for (int c = 0; c < k; ++c) {
          if (used[c]) continue;
          int cc = 0;
          for (int o = 0; o < k; ++o)
            if (!used[o] && o != c) cc += under[c][o];
          if (cc < pick_cost) {
            pick_cost = cc;
            pick = c;
          }
        }
        used[pick] = 1;
        best_perm.push_back(pick);
      }
    }
    Base base;
    for (int c : best_perm) base.push_back(start[c]);
    return base;
  }

  /// Connected diagram with at least one crossing. `base` is reused from the
  /// parent after a crossing switch that R1/R2 could not shrink, which makes
  /// the count of bad crossings strictly decrease along such chains.
  LaurentPoly2 evaluate_piece(LinkDiagram d, Base base) {
    d.compact();
    const Slots s = d.slots();
    const std::vector<int> key = canonical_key(d, s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    if (base.empty()) base = choose_base(d, s);
    const int x = first_bad_crossing(d, s, base, nullptr);
    LaurentPoly2 result;
    if (x < 0) {
      const int k = static_cast<int>(base.size());
      result = LaurentPoly2::delta().pow(static_cast<unsigned>(k - 1));
    } else {
      const int sign = d.xs[x].sign;
      LinkDiagram switched = d;
      switched.switch_crossing(static_cast<std::size_t>(x));
      LinkDiagram smoothed = d;
      smoothed.smooth(static_cast<std::size_t>(x));

      LaurentPoly2 p_switched;
      {
        LinkDiagram probe = switched;
        if (probe.simplify() == 0) {
          // Labels are unchanged by a switch, so the base still applies.
          p_switched = evaluate_piece(std::move(switched), base);
        } else {
          p_switched = evaluate(std::move(probe));
        }
      }
      const LaurentPoly2 p_smoothed = evaluate(std::move(smoothed));
      if (sign > 0) {
        result = p_switched.times_monomial(1, -2, 0) + p_smoothed.times_monomial(1, -1, 1);
      } else {
        result = p_switched.times_monomial(1, 2, 0) + p_smoothed.times_monomial(-1, 1, 1);
      }
    }
    memo_.emplace(key, result);
    return result;
  }

  std::size_t budget_;
  std::map<std::vector<int>, LaurentPoly2> memo_;
};

/// HOMFLY polynomial of a knot PD code. Throws BudgetError when the code
/// still has more than `crossing_budget` crossings after R1/R2 reduction.
inline LaurentPoly2 homfly(const PDCode& pd, std::size_t crossing_budget = kDefaultSkeinBudget) {
  HomflyEvaluator eval(crossing_budget);
  return eval(pd);
}

}  // namespace stickknot

#endif  // STICKKNOT_HOMFLY_HPP
