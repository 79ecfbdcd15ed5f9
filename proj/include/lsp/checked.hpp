#pragma once

#include <cstdint>
#include <numeric>

#include "lsp/error.hpp"

namespace lsp {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int pow(Int base, Int exp) {
  Int r = 1;
  for (Int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

inline Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = std::gcd(a, b);
  return mul(a / g, b < 0 ? -b : b);
}

/// Binomial coefficient C(n, k) computed with exact intermediate division.
inline Int binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i
    Int num = n - k + i;
    Int g = std::gcd(r, i);
    r = mul(r / g, num / (i / g));
  }
  return r;
}

}  // namespace checked
}  // namespace lsp
