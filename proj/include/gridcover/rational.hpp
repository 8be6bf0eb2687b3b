#pragma once

// Exact scalar and point types shared by every geometry predicate.
//
// Rational is a normalized fraction over a checked 128-bit integer: any
// intermediate overflow throws std::overflow_error instead of wrapping, so a
// predicate either answers exactly or fails loudly.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gridcover {

using Integer = boost::multiprecision::checked_int128_t;
using Rational = boost::rational<Integer>;

}  // namespace gridcover

// Boost 1.74 rational == integer recurses forever under C++20 rewritten
// comparisons; exact non-template overloads take precedence.
namespace boost {
#define GRIDCOVER_RATIONAL_EQ(T)                                                                          \
  inline bool operator==(const rational<gridcover::Integer>& a, T b) { return a == rational<gridcover::Integer>(gridcover::Integer(b)); } \
  inline bool operator==(T b, const rational<gridcover::Integer>& a) { return a == rational<gridcover::Integer>(gridcover::Integer(b)); } \
  inline bool operator!=(const rational<gridcover::Integer>& a, T b) { return !(a == b); }                \
  inline bool operator!=(T b, const rational<gridcover::Integer>& a) { return !(a == b); }
GRIDCOVER_RATIONAL_EQ(int)
GRIDCOVER_RATIONAL_EQ(long)
GRIDCOVER_RATIONAL_EQ(long long)
#undef GRIDCOVER_RATIONAL_EQ
}  // namespace boost

namespace gridcover {

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(Integer(num), Integer(den));
}

double to_double(const Rational& r);

// Largest integer <= r.
std::int64_t floor_to_int(const Rational& r);
// Smallest integer >= r.
std::int64_t ceil_to_int(const Rational& r);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline Rational abs_value(const Rational& r) { return r < 0 ? -r : r; }

// Always "p/q", including integers ("3/1"), so the wire format is uniform.
std::string to_fraction_string(const Rational& r);

// Accepts "p/q", integers and finite decimals ("1.25", "-0.5", "2e-1").
// Throws Error(parse) on anything else.
Rational parse_rational(std::string_view text);

// Exact value of a finite double (every double is a dyadic rational).
Rational rational_from_double(double value);

// Largest multiple of 1/2^bits not above value (value must be finite).
Rational quantize_down(double value, int bits);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  // Lexicographic (x, then y).
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

inline Rational l1_distance(const Point& p, const Point& q) {
  return abs_value(p.x - q.x) + abs_value(p.y - q.y);
}

inline double l1_distance_approx(double px, double py, double qx, double qy) {
  double dx = px - qx;
  double dy = py - qy;
  return (dx < 0 ? -dx : dx) + (dy < 0 ? -dy : dy);
}

}  // namespace gridcover
