#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pte {

/// Exact rational number with int64 numerator and positive int64 denominator,
/// always stored in lowest terms. Comparisons are exact (128-bit cross
/// multiplication), so ordinal payoff comparisons can never be corrupted by
/// rounding.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
    if (denominator < 0) {
      numerator = checked_negate(numerator);
      denominator = checked_negate(denominator);
    }
    const std::uint64_t g = gcd_magnitude(numerator, denominator);
    num_ = numerator / static_cast<std::int64_t>(g);
    den_ = denominator / static_cast<std::int64_t>(g);
  }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = checked_negate(a.num_);
    r.den_ = a.den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    const __int128 den = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(num, den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    const __int128 num = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
    const __int128 den = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(num, den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  /// Parses "3", "-7", "3/4", "-3/4", "1.375", "-0.5". Decimal literals are
  /// converted exactly (1.375 -> 11/8).
  static Rational parse(std::string_view text);

  /// Canonical text form: integers as "n", terminating decimals as the exact
  /// shortest decimal ("11/8" -> "1.375"), everything else as "p/q".
  std::string str() const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static std::uint64_t magnitude(std::int64_t v) {
    return v < 0 ? ~static_cast<std::uint64_t>(v) + 1u : static_cast<std::uint64_t>(v);
  }
  static std::uint64_t gcd_magnitude(std::int64_t a, std::int64_t b) {
    return std::gcd(magnitude(a), magnitude(b));
  }
  static std::int64_t checked_negate(std::int64_t v) {
    if (v == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("Rational: negation overflow");
    return -v;
  }
  static Rational from_wide(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = wide_gcd(num < 0 ? -num : num, den);
    if (g != 0) {
      num /= g;
      den /= g;
    }
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi) throw std::overflow_error("Rational: arithmetic overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  static __int128 wide_gcd(__int128 a, __int128 b) {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational Rational::parse(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  };

  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return fail();

  const auto parse_digits = [&](std::string_view d, std::int64_t& out) -> bool {
    if (d.empty() || d.size() > 18) return false;  // 10^18 < 2^63, no overflow
    out = 0;
    for (const char c : d) {
      if (c < '0' || c > '9') return false;
      out = out * 10 + (c - '0');
    }
    return true;
  };

  std::int64_t num = 0;
  std::int64_t den = 1;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t q = 0;
    if (!parse_digits(s.substr(0, slash), num) || !parse_digits(s.substr(slash + 1), q) || q == 0) return fail();
    den = q;
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    std::int64_t w = 0;
    std::int64_t f = 0;
    if (!parse_digits(whole.empty() ? std::string_view("0") : whole, w)) return fail();
    if (!parse_digits(frac, f)) return fail();
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const __int128 wide = static_cast<__int128>(w) * scale + f;
    if (wide > std::numeric_limits<std::int64_t>::max()) return fail();
    num = static_cast<std::int64_t>(wide);
    den = scale;
  } else {
    if (!parse_digits(s, num)) return fail();
  }
  if (negative) num = -num;
  return Rational(num, den);
}

inline std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);

  // The denominator divides a power of ten iff it is of the form 2^a * 5^b;
  // then max(a, b) decimal places render the value exactly.
  std::int64_t rest = den_;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  const int places = twos > fives ? twos : fives;
  if (rest == 1 && places <= 18) {
    std::int64_t pow10 = 1;
    for (int i = 0; i < places; ++i) pow10 *= 10;
    const unsigned __int128 scaled =
        static_cast<unsigned __int128>(magnitude(num_)) * static_cast<std::uint64_t>(pow10 / den_);
    const auto whole = static_cast<std::uint64_t>(scaled / static_cast<std::uint64_t>(pow10));
    const auto frac = static_cast<std::uint64_t>(scaled % static_cast<std::uint64_t>(pow10));
    std::string digits = std::to_string(frac);
    digits.insert(digits.begin(), static_cast<std::size_t>(places) - digits.size(), '0');
    std::string out = num_ < 0 ? "-" : "";
    out += std::to_string(whole);
    out += '.';
    out += digits;
    return out;
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace pte
