#ifndef TSURF_RATIONAL_HPP
#define TSURF_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "tsurf/errors.hpp"

namespace tsurf {

using Int = boost::multiprecision::cpp_int;
// Always kept in lowest terms with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor(const Rat& r) { return floor_div(num(r), den(r)); }

/// Fractional part in [0, 1).
inline Rat frac(const Rat& r) { return r - Rat(floor(r)); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = boost::multiprecision::gcd(a, b);
  Int l = a / g * b;
  return l < 0 ? Int(-l) : l;
}

inline std::int64_t to_i64(const Int& v) {
  if (v > Int(INT64_MAX) || v < Int(INT64_MIN)) throw InvalidArgument("integer out of 64-bit range");
  return static_cast<std::int64_t>(v);
}

/// "a/b", or "a" when b = 1. Sign only on the numerator.
inline std::string to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

/// Parses the "a/b" literal syntax. Throws InvalidArgument on malformed input.
inline Rat parse_rat(std::string_view text) {
  auto bad = [&] { return InvalidArgument("bad rational literal '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s, bool allow_sign) -> Int {
    std::size_t i = 0;
    bool neg = false;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
      neg = s[0] == '-';
      i = 1;
    }
    if (i >= s.size()) throw bad();
    Int v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw bad();
      v = v * 10 + (s[i] - '0');
    }
    return neg ? Int(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text, true));
  Int n = parse_int(text.substr(0, slash), true);
  Int d = parse_int(text.substr(slash + 1), false);
  if (d == 0) throw bad();
  return Rat(n, d);
}

}  // namespace tsurf

#endif  // TSURF_RATIONAL_HPP
