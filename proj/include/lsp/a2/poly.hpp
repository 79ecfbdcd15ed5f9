#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>

#include "lsp/checked.hpp"
#include "lsp/error.hpp"

namespace lsp::a2 {

/// Exponents of (a, b, c, d).
using Exponents = std::array<Int, 4>;

/// Integer polynomial in a, b, c, d. Arithmetic keeps it in normal form:
/// no stored monomial contains both a and b (ab = c + d is applied).
class A2Poly {
 public:
  using Terms = std::map<Exponents, Int, std::greater<>>;  // descending

  A2Poly() = default;
  static A2Poly constant(Int c) { return monomial({0, 0, 0, 0}, c); }
  static A2Poly monomial(Exponents e, Int c = 1) {
    A2Poly p;
    p.add_raw(e, c);
    return p.normalized();
  }
  static A2Poly a() { return monomial({1, 0, 0, 0}); }
  static A2Poly b() { return monomial({0, 1, 0, 0}); }
  static A2Poly c() { return monomial({0, 0, 1, 0}); }
  static A2Poly d() { return monomial({0, 0, 0, 1}); }

  /// Adds c * a^e0 b^e1 c^e2 d^e3 without rewriting.
  void add_raw(const Exponents& e, Int c) {
    if (c == 0) return;
    Int& slot = terms_[e];
    slot = checked::add(slot, c);
    if (slot == 0) terms_.erase(e);
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_normal() const noexcept {
    for (const auto& [e, c] : terms_)
      if (e[0] > 0 && e[1] > 0) return false;
    return true;
  }
  /// A single term with coefficient one.
  bool is_basis_monomial() const noexcept { return terms_.size() == 1 && terms_.begin()->second == 1; }

  /// Rewrites ab -> c + d to exhaustion: a^k b^l = a^{k-j} b^{l-j} (c+d)^j, j = min(k, l).
  A2Poly normalized() const {
    A2Poly out;
    for (const auto& [e, coef] : terms_) {
      const Int j = std::min(e[0], e[1]);
      if (j == 0) {
        out.add_raw(e, coef);
        continue;
      }
      for (Int i = 0; i <= j; ++i) {
        Exponents f{e[0] - j, e[1] - j, checked::add(e[2], i), checked::add(e[3], j - i)};
        out.add_raw(f, checked::mul(coef, checked::binomial(j, i)));
      }
    }
    return out;
  }

  friend A2Poly operator+(A2Poly p, const A2Poly& q) {
    for (const auto& [e, c] : q.terms_) p.add_raw(e, c);
    return p;
  }
  friend A2Poly operator-(A2Poly p, const A2Poly& q) {
    for (const auto& [e, c] : q.terms_) p.add_raw(e, checked::neg(c));
    return p;
  }
  friend A2Poly operator*(const A2Poly& p, const A2Poly& q) {
    A2Poly raw;
    for (const auto& [e, c] : p.terms_)
      for (const auto& [f, k] : q.terms_) {
        Exponents g;
        for (int i = 0; i < 4; ++i) g[i] = checked::add(e[i], f[i]);
        raw.add_raw(g, checked::mul(c, k));
      }
    return raw.normalized();
  }
  friend bool operator==(const A2Poly&, const A2Poly&) = default;

  /// Terms in descending exponent order, e.g. "c^2 + c d", "1", "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    static const char* names[4] = {"a", "b", "c", "d"};
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Int mag = c < 0 ? -c : c;
      if (first)
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      first = false;
      std::string mono;
      for (int i = 0; i < 4; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += ' ';
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        s += std::to_string(mag);
      else if (mag == 1)
        s += mono;
      else
        s += std::to_string(mag) + " " + mono;
    }
    return s;
  }

 private:
  Terms terms_;
};

inline A2Poly normalize(const A2Poly& raw) { return raw.normalized(); }

inline A2Poly power(const A2Poly& p, Int n) {
  A2Poly out = A2Poly::constant(1);
  for (Int k = 0; k < n; ++k) out = out * p;
  return out;
}

/// Polynomial in the matrix entries u21, u31, u32 of a lower unitriangular 3x3 matrix.
using MatrixPoly = std::map<std::array<Int, 3>, Int>;

namespace detail {

inline MatrixPoly mp_mul(const MatrixPoly& p, const MatrixPoly& q) {
  MatrixPoly out;
  for (const auto& [e, c] : p)
    for (const auto& [f, k] : q) {
      std::array<Int, 3> g{checked::add(e[0], f[0]), checked::add(e[1], f[1]), checked::add(e[2], f[2])};
      Int& slot = out[g];
      slot = checked::add(slot, checked::mul(c, k));
      if (slot == 0) out.erase(g);
    }
  return out;
}

inline MatrixPoly mp_pow(const MatrixPoly& p, Int n) {
  MatrixPoly out{{{0, 0, 0}, 1}};
  for (Int k = 0; k < n; ++k) out = mp_mul(out, p);
  return out;
}

}  // namespace detail

/// a = u21, b = u32, c = u31, d = u21 u32 - u31. Accepts non-normal input.
inline MatrixPoly matrix_model_eval(const A2Poly& p) {
  const MatrixPoly gens[4] = {
      {{{1, 0, 0}, 1}},
      {{{0, 0, 1}, 1}},
      {{{0, 1, 0}, 1}},
      {{{1, 0, 1}, 1}, {{0, 1, 0}, -1}},
  };
  MatrixPoly out;
  for (const auto& [e, c] : p.terms()) {
    MatrixPoly term{{{0, 0, 0}, c}};
    for (int i = 0; i < 4; ++i) term = detail::mp_mul(term, detail::mp_pow(gens[i], e[i]));
    for (const auto& [f, k] : term) {
      Int& slot = out[f];
      slot = checked::add(slot, k);
      if (slot == 0) out.erase(f);
    }
  }
  return out;
}

}  // namespace lsp::a2
