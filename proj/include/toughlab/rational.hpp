#pragma once

#include <charconv>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "toughlab/errors.hpp"

namespace toughlab {

// Exact rational, normalized so that den >= 1 and gcd(|num|, den) == 1.
// Toughness values are ratios of a cut size to a component count, so
// int64 arithmetic never comes close to overflow; comparisons still
// cross-multiply in 128 bits.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InputError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    Rational r;
    r.num = num;
    r.den = den;
    return r;
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  // "p" for integers, "p/q" otherwise; parse() accepts both.
  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  static Rational parse(std::string_view text) {
    const auto bad = [&] { return InputError("malformed rational: '" + std::string(text) + "'"); };
    std::int64_t p = 0;
    std::int64_t q = 1;
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    auto res = std::from_chars(begin, end, p);
    if (res.ec != std::errc{}) throw bad();
    if (res.ptr != end) {
      if (*res.ptr != '/') throw bad();
      auto res2 = std::from_chars(res.ptr + 1, end, q);
      if (res2.ec != std::errc{} || res2.ptr != end) throw bad();
    }
    return of(p, q);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

inline bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

}  // namespace toughlab
