#pragma once

#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "lsp/checked.hpp"

namespace lsp {

/// Integral weight in fundamental-weight coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : c_(rank, 0) {}
  explicit Weight(std::vector<Int> coords) : c_(std::move(coords)) {}
  Weight(std::initializer_list<Int> coords) : c_(coords) {}

  std::size_t rank() const noexcept { return c_.size(); }
  Int operator[](std::size_t i) const { return c_[i]; }
  Int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Int>& coords() const noexcept { return c_; }

  bool is_dominant() const noexcept {
    for (Int x : c_)
      if (x < 0) return false;
    return true;
  }
  bool is_zero() const noexcept {
    for (Int x : c_)
      if (x != 0) return false;
    return true;
  }
  Int coordinate_sum() const {
    Int s = 0;
    for (Int x : c_) s = checked::add(s, x);
    return s;
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked::add(c_[i], o.c_[i]);
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked::sub(c_[i], o.c_[i]);
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Int k, Weight a) {
    for (auto& x : a.c_) x = checked::mul(k, x);
    return a;
  }
  friend Weight operator-(Weight a) { return Int{-1} * std::move(a); }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// Comma-separated coordinates, e.g. "2,-1".
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << '(' << w.str() << ')'; }

 private:
  std::vector<Int> c_;
};

/// A root in simple-root coordinates.
struct Root {
  std::vector<Int> coords;

  bool is_positive() const noexcept {
    for (Int x : coords)
      if (x < 0) return false;
    return true;
  }
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

}  // namespace lsp
