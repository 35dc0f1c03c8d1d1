#ifndef STICKKNOT_EXACT_HPP
#define STICKKNOT_EXACT_HPP

#include <array>
#include <climits>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stickknot/errors.hpp"
#include "stickknot/polygon.hpp"

namespace stickknot {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVec3 = std::array<BigInt, 3>;

inline BigInt dot(const IntVec3& a, const IntVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline IntVec3 cross(const IntVec3& a, const IntVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline IntVec3 operator-(const IntVec3& a, const IntVec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline int sign_of(const BigInt& x) { return x.sign(); }

/// Exact integer images of a set of doubles, all scaled by the same power of
/// two: out[i] = values[i] * 2^shift, with `shift` as small as possible.
inline std::vector<BigInt> scale_to_integers(const std::vector<double>& values) {
  int min_exp = INT_MAX;
  std::vector<std::pair<std::int64_t, int>> parts(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw InputError("non-finite coordinate");
    if (values[i] == 0) {
      parts[i] = {0, 0};
      continue;
    }
    int e = 0;
    const double m = std::frexp(values[i], &e);
    parts[i] = {static_cast<std::int64_t>(std::ldexp(m, 53)), e - 53};
    min_exp = std::min(min_exp, e - 53);
  }
  std::vector<BigInt> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (parts[i].first != 0) out[i] = BigInt(parts[i].first) << (parts[i].second - min_exp);
  return out;
}

/// Edge vectors of a polygon as exact integer vectors (a common power-of-two
/// multiple of the exact edge vectors of the stored doubles).
inline std::vector<IntVec3> exact_edges(const Polygon& p) {
  std::vector<double> flat;
  flat.reserve(3 * p.size());
  for (const Vec3& v : p.vertices()) flat.insert(flat.end(), {v.x, v.y, v.z});
  const auto ints = scale_to_integers(flat);
  const std::size_t n = p.size();
  std::vector<IntVec3> e(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    e[i] = {ints[3 * j] - ints[3 * i], ints[3 * j + 1] - ints[3 * i + 1], ints[3 * j + 2] - ints[3 * i + 2]};
  }
  return e;
}

/// Polygon with exact integer vertex coordinates.
class IntegerPolygon {
 public:
  explicit IntegerPolygon(std::vector<IntVec3> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 3) throw InputError("too few vertices: a polygon needs at least 3");
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (v_[i] == v_[(i + 1) % v_.size()])
        throw InputError("coincident consecutive vertices " + std::to_string(i) + " and " + std::to_string((i + 1) % v_.size()));
  }

  std::size_t size() const { return v_.size(); }
  const IntVec3& operator[](std::size_t i) const { return v_[i]; }
  IntVec3 edge(std::size_t i) const { return v_[(i + 1) % v_.size()] - v_[i]; }

  Polygon to_polygon() const {
    std::vector<Vec3> vs;
    for (const auto& v : v_) vs.push_back({v[0].convert_to<double>(), v[1].convert_to<double>(), v[2].convert_to<double>()});
    return Polygon(std::move(vs));
  }

 private:
  std::vector<IntVec3> v_;
};

namespace detail {

inline BigInt parse_bigint(std::string_view s, std::size_t line_no) {
  std::string t(s);
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  // "12." and "12.0" are accepted as integers.
  if (auto dot = t.find('.'); dot != std::string::npos) {
    if (t.find_first_not_of('0', dot + 1) != std::string::npos)
      throw InputError("line " + std::to_string(line_no) + ": '" + std::string(s) + "' is not an integer");
    t.erase(dot);
  }
  const std::size_t start = (!t.empty() && t[0] == '-') ? 1 : 0;
  if (t.size() == start || t.find_first_not_of("0123456789", start) != std::string::npos)
    throw InputError("line " + std::to_string(line_no) + ": '" + std::string(s) + "' is not an integer");
  return BigInt(t);
}

}  // namespace detail

inline IntegerPolygon load_integer_polygon(std::string_view text) {
  std::vector<IntVec3> vs;
  detail::for_each_line(text, [&](std::string_view line, std::size_t no) {
    const auto f = detail::fields(line);
    if (f.empty()) return;
    if (f.size() != 3)
      throw InputError("line " + std::to_string(no) + ": expected 3 coordinates, found " + std::to_string(f.size()));
    vs.push_back({detail::parse_bigint(f[0], no), detail::parse_bigint(f[1], no), detail::parse_bigint(f[2], no)});
  });
  if (vs.size() < 3) throw InputError("too few vertices: found " + std::to_string(vs.size()) + ", need at least 3");
  return IntegerPolygon(std::move(vs));
}

/// One nonnegative integer per line (or whitespace-separated).
inline std::vector<BigInt> load_integer_vector(std::string_view text) {
  std::vector<BigInt> out;
  detail::for_each_line(text, [&](std::string_view line, std::size_t no) {
    for (auto f : detail::fields(line)) out.push_back(detail::parse_bigint(f, no));
  });
  return out;
}

}  // namespace stickknot

#endif  // STICKKNOT_EXACT_HPP
