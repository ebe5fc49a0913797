#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clos {

// Exact rational arithmetic on 64-bit numerator/denominator. All intermediate
// products go through 128-bit integers and overflow past 64 bits throws
// instead of wrapping, so congestion comparisons are never silently wrong.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  Rational operator+(const Rational& o) const {
    __int128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    __int128 d = i128(den_) * o.den_;
    return from_i128(n, d);
  }
  Rational operator-(const Rational& o) const {
    __int128 n = i128(num_) * o.den_ - i128(o.num_) * den_;
    __int128 d = i128(den_) * o.den_;
    return from_i128(n, d);
  }
  Rational operator*(const Rational& o) const {
    return from_i128(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("rational: division by zero");
    return from_i128(i128(num_) * o.den_, i128(den_) * o.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Exact comparison via cross multiplication; denominators are positive.
  std::strong_ordering operator<=>(const Rational& o) const {
    __int128 lhs = i128(num_) * o.den_;
    __int128 rhs = i128(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  // Canonical form "num/den", e.g. "3/2", "-1/4", "0/1".
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "a/b" or a bare integer "a".
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
      return Rational(parse_int(text), 1);
    return Rational(parse_int(text.substr(0, slash)),
                    parse_int(text.substr(slash + 1)));
  }

 private:
  static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

  static std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("rational: value exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
  }

  static Rational from_i128(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  static std::int64_t parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rational: empty number");
    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') {
      neg = (s[0] == '-');
      pos = 1;
      if (s.size() == 1) throw std::invalid_argument("rational: bare sign");
    }
    __int128 value = 0;
    for (; pos < s.size(); ++pos) {
      char c = s[pos];
      if (c < '0' || c > '9')
        throw std::invalid_argument("rational: bad digit in '" +
                                    std::string(s) + "'");
      value = value * 10 + (c - '0');
      if (value > static_cast<__int128>(INT64_MAX) + 1)
        throw std::overflow_error("rational: literal out of range");
    }
    return narrow(neg ? -value : value);
  }

  void normalize() {
    if (den_ < 0) {
      num_ = narrow(-i128(num_));
      den_ = narrow(-i128(den_));
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace clos
