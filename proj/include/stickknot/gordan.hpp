#ifndef STICKKNOT_GORDAN_HPP
#define STICKKNOT_GORDAN_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/integer/common_factor_rt.hpp>

#include "stickknot/errors.hpp"
#include "stickknot/exact.hpp"

namespace stickknot {

/// 3 x n integer matrix whose column i is (-1)^i times edge i (0-based), so
/// a direction v with v.column > 0 for every column makes every vertex a
/// critical point of the height function v.
struct AlternationMatrix {
  std::vector<IntVec3> columns;

  explicit AlternationMatrix(const IntegerPolygon& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      IntVec3 e = p.edge(i);
      if (i % 2 == 1)
        for (auto& c : e) c = -c;
      columns.push_back(std::move(e));
    }
  }

  std::size_t size() const { return columns.size(); }

  IntVec3 times(const std::vector<BigInt>& u) const {
    IntVec3 r{0, 0, 0};
    for (std::size_t i = 0; i < columns.size(); ++i)
      for (int k = 0; k < 3; ++k) r[k] += columns[i][k] * u[i];
    return r;
  }
};

/// Nonnegative, nonzero integer vector u with A u = 0.
struct GordanCertificate {
  std::vector<BigInt> u;
};

/// Integer direction v with v.a_i > 0 for every column a_i.
struct AlternationWitness {
  IntVec3 v;
};

/// Checks u >= 0, u != 0 and A u = 0 exactly.
inline bool verify_gordan_certificate(const IntegerPolygon& p, const std::vector<BigInt>& u) {
  if (u.size() != p.size())
    throw InputError("certificate has " + std::to_string(u.size()) + " entries, polygon has " + std::to_string(p.size()) + " vertices");
  if (p.size() % 2 != 0) throw InputError("sign alternation needs an even number of edges");
  bool nonzero = false;
  for (const BigInt& x : u) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  if (!nonzero) return false;
  const IntVec3 r = AlternationMatrix(p).times(u);
  return r[0] == 0 && r[1] == 0 && r[2] == 0;
}

inline bool verify_alternation_witness(const IntegerPolygon& p, const IntVec3& v) {
  for (const IntVec3& a : AlternationMatrix(p).columns)
    if (dot(v, a) <= 0) return false;
  return true;
}

namespace detail {

/// Phase-one simplex for {x >= 0 : M x = b} with b >= 0, Bland's rule,
/// exact rationals. Returns a feasible x, or the dual vector y with
/// y^T M <= 0 and y^T b > 0 proving infeasibility.
struct FeasibilityResult {
  std::optional<std::vector<Rational>> x;
  std::vector<Rational> y;
};

inline FeasibilityResult phase_one(const std::vector<std::vector<Rational>>& M, const std::vector<Rational>& b) {
  const std::size_t m = M.size(), n = M[0].size(), cols = n + m;
  // Tableau rows: [M | I | b]; artificial j sits in column n + j.
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) T[r][c] = M[r][c];
    T[r][n + r] = 1;
    T[r][cols] = b[r];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;
  std::vector<Rational> cost(cols, 0);
  for (std::size_t c = n; c < cols; ++c) cost[c] = 1;

  auto reduced_cost = [&](std::size_t c) {
    Rational z = cost[c];
    for (std::size_t r = 0; r < m; ++r) z -= cost[basis[r]] * T[r][c];
    return z;
  };
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c)
      if (reduced_cost(c) < 0) {
        enter = c;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (T[r][enter] <= 0) continue;
      const Rational ratio = T[r][cols] / T[r][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // unbounded cannot happen: the objective is bounded below by 0
    const Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || T[r][enter] == 0) continue;
      const Rational f = T[r][enter];
      for (std::size_t c = 0; c <= cols; ++c) T[r][c] -= f * T[leave][c];
    }
    basis[leave] = enter;
  }
  Rational objective = 0;
  for (std::size_t r = 0; r < m; ++r) objective += cost[basis[r]] * T[r][cols];
  FeasibilityResult res;
  if (objective == 0) {
    std::vector<Rational> x(n, 0);
    for (std::size_t r = 0; r < m; ++r)
      if (basis[r] < n) x[basis[r]] = T[r][cols];
    res.x = std::move(x);
  } else {
    // Simplex multipliers from the artificial columns: y_j = 1 - reduced cost.
    res.y.resize(m);
    for (std::size_t j = 0; j < m; ++j) res.y[j] = Rational(1) - reduced_cost(n + j);
  }
  return res;
}

inline std::vector<BigInt> clear_denominators(const std::vector<Rational>& x) {
  BigInt l = 1;
  for (const Rational& q : x) l = boost::integer::lcm(l, BigInt(denominator(q)));
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const Rational& q : x) {
    out.push_back(BigInt(numerator(q)) * (l / BigInt(denominator(q))));
    g = boost::integer::gcd(g, out.back());
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

}  // namespace detail

/// Gordan's alternative for the alternation matrix: either some direction
/// alternates (every vertex critical), or a nonnegative kernel vector
/// certifies that none does. Exactly one branch is returned.
inline std::variant<GordanCertificate, AlternationWitness> find_gordan_certificate(const IntegerPolygon& p) {
  const std::size_t n = p.size();
  if (n % 2 != 0) throw InputError("sign alternation needs an even number of edges; an odd polygon never alternates fully");
  const AlternationMatrix A(p);
  // A u = 0, sum(u) = 1, u >= 0.
  std::vector<std::vector<Rational>> M(4, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k < 3; ++k) M[k][i] = Rational(A.columns[i][k]);
    M[3][i] = 1;
  }
  const auto res = detail::phase_one(M, {0, 0, 0, 1});
  if (res.x) return GordanCertificate{detail::clear_denominators(*res.x)};
  // y^T M <= 0 and y_4 > 0 give (-y_1, -y_2, -y_3).a_i >= y_4 > 0.
  const auto v = detail::clear_denominators({-res.y[0], -res.y[1], -res.y[2]});
  return AlternationWitness{{v[0], v[1], v[2]}};
}

}  // namespace stickknot

#endif  // STICKKNOT_GORDAN_HPP
