#pragma once

// Exact arithmetic primitives shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "weylot/error.hpp"

namespace weylot {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }
inline Rational abs(const Rational& a) { return a < 0 ? Rational(-a) : a; }

/// Always "p/q", including integers ("3/1") and zero ("0/1").
inline std::string to_string(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// Accepts "p", "p/q", or "-p/q".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw Error(ErrorCode::NonIntegerEntry, "empty number in '" + text + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw Error(ErrorCode::NonIntegerEntry, "'" + text + "'");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::NonIntegerEntry, "'" + text + "'");
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::NonIntegerEntry, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

inline std::int64_t to_int64(const Integer& z) {
  if (z > Integer(INT64_MAX) || z < Integer(INT64_MIN)) {
    throw Error(ErrorCode::ArithmeticOverflow, "integer does not fit in 64 bits: " + z.str());
  }
  return z.convert_to<std::int64_t>();
}

/// A point of M_R or N_R in lattice coordinates.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static RationalVector from_ints(const std::vector<std::int64_t>& v) {
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
  }

  static RationalVector unit(std::size_t dim, std::size_t i) {
    RationalVector r(dim);
    r[i] = 1;
    return r;
  }

  std::size_t size() const noexcept { return coords_.size(); }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
  }

  bool is_integral() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Rational& q) { return weylot::is_integral(q); });
  }

  /// Least common multiple of the coordinate denominators.
  Integer common_denominator() const {
    Integer l = 1;
    for (const auto& q : coords_) l = lcm(l, denominator_of(q));
    return l;
  }

  RationalVector& operator+=(const RationalVector& o) {
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += o[i];
    return *this;
  }
  RationalVector& operator-=(const RationalVector& o) {
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o[i];
    return *this;
  }
  RationalVector& operator*=(const Rational& s) {
    for (auto& q : coords_) q *= s;
    return *this;
  }

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, RationalVector a) { return a *= s; }
  friend RationalVector operator-(RationalVector a) {
    for (auto& q : a.coords_) q = -q;
    return a;
  }

  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const RationalVector& a, const RationalVector& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      os << v[i];
    }
    return os << ')';
  }

 private:
  std::vector<Rational> coords_;
};

/// The duality bracket <m, n> between M_R and N_R.
inline Rational bracket(const RationalVector& m, const RationalVector& n) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * n[i];
  return s;
}

/// Scales v by a positive rational so that it becomes a primitive integer vector.
/// Returns the scale factor alongside.
inline std::pair<std::vector<Integer>, Rational> primitive_integer(const RationalVector& v) {
  Integer den = v.common_denominator();
  std::vector<Integer> z(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    z[i] = numerator_of(v[i] * den);
    g = gcd(g, abs(z[i]));
  }
  if (g == 0) return {z, Rational(1)};
  for (auto& x : z) x /= g;
  return {z, Rational(den, g)};
}

inline RationalVector to_rational(const std::vector<Integer>& z) {
  RationalVector v(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) v[i] = Rational(z[i]);
  return v;
}

inline std::vector<std::int64_t> to_int64(const RationalVector& v) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i])) throw Error(ErrorCode::NotLatticePoint, "non-integral coordinate");
    out[i] = to_int64(numerator_of(v[i]));
  }
  return out;
}

inline std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += is_integral(v[i]) ? numerator_of(v[i]).str() : to_string(v[i]);
  }
  return s + ")";
}

inline Rational factorial(unsigned k) {
  Integer f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

}  // namespace weylot
