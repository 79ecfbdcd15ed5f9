#pragma once

#include <compare>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "lsp/checked.hpp"

namespace lsp {

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d) : num_(n), den_(d) {
    if (d == 0) throw Error(Errc::Parse, "zero denominator");
    normalize();
  }

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }

  Int floor() const noexcept {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Int g = std::gcd(a.den_, b.den_);
    Int d = checked::mul(a.den_ / g, b.den_);
    Int n = checked::add(checked::mul(a.num_, b.den_ / g), checked::mul(b.num_, a.den_ / g));
    return Rational(n, d);
  }
  friend Rational operator-(const Rational& a) { return Rational(checked::neg(a.num_), a.den_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Int g1 = std::gcd(a.num_, b.den_);
    Int g2 = std::gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational(checked::mul(a.num_ / g1, b.num_ / g2), checked::mul(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(Errc::Internal, "rational division by zero");
    return a * Rational(b.den_, b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return checked::mul(a.num_, b.den_) <=> checked::mul(b.num_, a.den_);
  }

  /// "p/q", or "p" for integers.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "p/q", "p" and leading signs; rejects anything else.
  static Rational parse(std::string_view s) {
    auto to_int = [&](std::string_view t) -> Int {
      if (t.empty()) throw Error(Errc::Parse, "bad rational '" + std::string(s) + "'");
      std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (i == t.size()) throw Error(Errc::Parse, "bad rational '" + std::string(s) + "'");
      Int v = 0;
      for (; i < t.size(); ++i) {
        if (t[i] < '0' || t[i] > '9') throw Error(Errc::Parse, "bad rational '" + std::string(s) + "'");
        v = checked::add(checked::mul(v, 10), t[i] - '0');
      }
      return t[0] == '-' ? -v : v;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(to_int(s));
    return Rational(to_int(s.substr(0, slash)), to_int(s.substr(slash + 1)));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = checked::neg(num_);
      den_ = checked::neg(den_);
    }
    Int g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace lsp
