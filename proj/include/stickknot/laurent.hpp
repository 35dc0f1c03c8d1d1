#ifndef STICKKNOT_LAURENT_HPP
#define STICKKNOT_LAURENT_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "stickknot/errors.hpp"

namespace stickknot {

/// Laurent polynomial in (a, z) with integer coefficients. Zero coefficients
/// are never stored, so equality is coefficient equality.
class LaurentPoly2 {
 public:
  using Exponents = std::pair<int, int>;  // (power of a, power of z)
  using Coeff = std::int64_t;

  LaurentPoly2() = default;
  explicit LaurentPoly2(Coeff c) {
    if (c != 0) terms_[{0, 0}] = c;
  }

  static LaurentPoly2 monomial(Coeff c, int a_pow, int z_pow) {
    LaurentPoly2 p;
    if (c != 0) p.terms_[{a_pow, z_pow}] = c;
    return p;
  }

  /// (a - a^-1) / z, the value of a two-component unlink.
  static LaurentPoly2 delta() { return monomial(1, 1, -1) + monomial(-1, -1, -1); }

  const std::map<Exponents, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(int a_pow, int z_pow) const {
    auto it = terms_.find({a_pow, z_pow});
    return it == terms_.end() ? 0 : it->second;
  }

  LaurentPoly2& operator+=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly2& operator-=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }

  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
  }

  /// Multiplies by c * a^i * z^j.
  LaurentPoly2 times_monomial(Coeff c, int a_pow, int z_pow) const {
    LaurentPoly2 r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[{e.first + a_pow, e.second + z_pow}] = v * c;
    return r;
  }

  LaurentPoly2 pow(unsigned k) const {
    LaurentPoly2 r(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Image under a -> -a^-1, the effect of mirroring on the HOMFLY polynomial.
  LaurentPoly2 mirrored() const {
    LaurentPoly2 r;
    for (const auto& [e, c] : terms_) r.terms_[{-e.first, e.second}] = (e.first % 2 == 0) ? c : -c;
    return r;
  }

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;
  friend bool operator<(const LaurentPoly2& x, const LaurentPoly2& y) { return x.terms_ < y.terms_; }

  /// Terms `c*a^i*z^j` sorted by (i, j) and joined with " + "; "0" if empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += std::to_string(c) + "*a^" + std::to_string(e.first) + "*z^" + std::to_string(e.second);
    }
    return out;
  }

  /// Inverse of to_string. Whitespace is insignificant; terms may repeat.
  static LaurentPoly2 parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s == "0") return {};
    LaurentPoly2 p;
    std::size_t pos = 0;
    auto fail = [&] { throw InputError("malformed polynomial term near '" + s.substr(pos, 20) + "'"); };
    auto read_int = [&]() -> long long {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(s.substr(pos), &used);
      } catch (const std::exception&) {
        fail();
      }
      pos += used;
      return v;
    };
    auto expect = [&](std::string_view lit) {
      if (s.compare(pos, lit.size(), lit) != 0) fail();
      pos += lit.size();
    };
    bool first = true;
    while (pos < s.size()) {
      if (!first) expect("+");
      first = false;
      const long long c = read_int();
      expect("*a^");
      const int i = static_cast<int>(read_int());
      expect("*z^");
      const int j = static_cast<int>(read_int());
      p.add_term({i, j}, c);
    }
    return p;
  }

 private:
  void add_term(Exponents e, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  std::map<Exponents, Coeff> terms_;
};

}  // namespace stickknot

#endif  // STICKKNOT_LAURENT_HPP
