#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "ghr/error.hpp"

namespace ghr {

/// Exact membership value in [0,1], always kept in lowest terms.
class Rational01 {
 public:
  constexpr Rational01() = default;

  Rational01(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) throw PreconditionError("rational with zero denominator");
    if (numerator > denominator) throw PreconditionError("membership value exceeds 1");
    auto g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
  }

  static Rational01 zero() { return {}; }
  static Rational01 one() { return Rational01(1, 1); }

  /// Parses "p/q" or an integer string ("0", "1").
  static Rational01 parse(std::string_view text) {
    auto parse_uint = [&](std::string_view part) {
      if (part.empty() || part.size() > 18) throw StructuralError("bad rational: '" + std::string(text) + "'");
      std::uint64_t v = 0;
      for (char c : part) {
        if (c < '0' || c > '9') throw StructuralError("bad rational: '" + std::string(text) + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
      }
      return v;
    };
    auto slash = text.find('/');
    std::uint64_t p = parse_uint(text.substr(0, slash));
    std::uint64_t q = slash == std::string_view::npos ? 1 : parse_uint(text.substr(slash + 1));
    if (q == 0) throw StructuralError("bad rational: zero denominator in '" + std::string(text) + "'");
    if (p > q) throw StructuralError("membership value outside [0,1]: '" + std::string(text) + "'");
    return Rational01(p, q);
  }

  std::uint64_t numerator() const { return num_; }
  std::uint64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Rational01&, const Rational01&) = default;
  friend std::strong_ordering operator<=>(const Rational01& a, const Rational01& b) {
    auto lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
    auto rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational01& r) { return os << r.str(); }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace ghr
