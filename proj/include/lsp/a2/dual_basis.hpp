#pragma once

#include <optional>
#include <vector>

#include "lsp/a2/poly.hpp"
#include "lsp/ls_path.hpp"
#include "lsp/smt.hpp"

namespace lsp::a2 {

enum class MinorSymbol { One, A, B, C, D };

inline char minor_name(MinorSymbol s) { return "1abcd"[static_cast<int>(s)]; }

inline A2Poly minor_poly(MinorSymbol s) {
  switch (s) {
    case MinorSymbol::One: return A2Poly::constant(1);
    case MinorSymbol::A: return A2Poly::a();
    case MinorSymbol::B: return A2Poly::b();
    case MinorSymbol::C: return A2Poly::c();
    case MinorSymbol::D: return A2Poly::d();
  }
  return {};
}

/// Weight in simple-root coordinates: a = -alpha1, b = -alpha2, c = d = -alpha1-alpha2.
inline std::array<Int, 2> monomial_weight(const Exponents& e) {
  return {-(e[0] + e[2] + e[3]), -(e[1] + e[2] + e[3])};
}

inline void require_a2(const RootSystem& rs) {
  if (rs.rank() != 2 || rs.cartan()(0, 1) != -1 || rs.cartan()(1, 0) != -1)
    throw Error(Errc::NotA2, "operation is only defined for type A2");
}

/// Minor of the coset of w modulo the stabilizer of the i-th fundamental weight.
inline MinorSymbol minor(const RootSystem& rs, WeylElement w, int i) {
  require_a2(rs);
  const Word& m = rs.word(coset_of(rs, w, rs.fundamental(i)).min_rep);
  if (m.empty()) return MinorSymbol::One;
  if (i == 0) return m.size() == 1 ? MinorSymbol::A : MinorSymbol::C;  // s1, s2s1
  return m.size() == 1 ? MinorSymbol::B : MinorSymbol::D;             // s2, s1s2
}

inline MinorSymbol minor(const RootSystem& rs, const Coset& c, int i) { return minor(rs, c.min_rep, i); }

/// Smallest even l with l a_i integral for every turning point.
inline Int choose_ell(const LSPath& p) {
  Int l = 1;
  for (const Rational& a : p.a) l = checked::lcm(l, a.den());
  return l % 2 == 0 ? l : checked::mul(l, 2);
}

/// Product over segments j of the minors of tau_j, raised to lambda_i l x_{j+1}.
inline A2Poly monomial_m_pi(const RootSystem& rs, const LSPath& p, Int ell) {
  require_a2(rs);
  Exponents raw{0, 0, 0, 0};
  for (std::size_t j = 0; j < p.chain.size(); ++j) {
    const Rational x = p.segment_length(j);
    for (int i = 0; i < 2; ++i) {
      Rational e = Rational(p.lambda[i]) * Rational(ell) * x;
      if (!e.is_integer()) throw Error(Errc::NonIntegerExponent, "exponent " + e.str() + " is not an integer");
      MinorSymbol s = minor(rs, p.chain[j], i);
      if (s != MinorSymbol::One) {
        auto& slot = raw[static_cast<int>(s) - 1];
        slot = checked::add(slot, e.num());
      }
    }
  }
  return A2Poly::monomial(raw);
}

inline A2Poly monomial_m_pi(const RootSystem& rs, const LSPath& p) { return monomial_m_pi(rs, p, choose_ell(p)); }

/// Keeps monomials whose exponents are all divisible by lbar, dividing them.
inline A2Poly fr_splitting(const A2Poly& p, Int lbar) {
  A2Poly out;
  for (const auto& [e, c] : p.terms()) {
    bool keep = true;
    for (Int x : e) keep = keep && x % lbar == 0;
    if (keep) out.add_raw({e[0] / lbar, e[1] / lbar, e[2] / lbar, e[3] / lbar}, c);
  }
  return out;
}

inline A2Poly path_vector(const RootSystem& rs, const LSPath& p) {
  const Int ell = choose_ell(p);
  const Int lbar = ell;  // the symmetrizer lcm is 1 in type A2
  return fr_splitting(monomial_m_pi(rs, p, ell), lbar);
}

inline A2Poly standard_monomial_vector(const RootSystem& rs, const PathTuple& t) {
  A2Poly out = A2Poly::constant(1);
  for (const LSPath& p : t) out = out * path_vector(rs, p);
  return out;
}

// ---- the crystal B(m omega_1 + m omega_2) ----

/// The four maximal chains w0 > tau > tau' > id through which every path of
/// shape (m, m) runs (with zero-length pieces allowed).
enum class Group { B11, B12, B21, B22 };

inline const char* group_name(Group g) {
  static const char* names[] = {"B11", "B12", "B21", "B22"};
  return names[static_cast<int>(g)];
}

inline std::array<WeylElement, 4> group_chain(const RootSystem& rs, Group g) {
  auto e = [&](const char* w) { return rs.from_word(parse_word(w)); };
  switch (g) {
    case Group::B11: return {rs.longest(), e("12"), e("1"), rs.identity()};
    case Group::B12: return {rs.longest(), e("21"), e("2"), rs.identity()};
    case Group::B21: return {rs.longest(), e("21"), e("1"), rs.identity()};
    case Group::B22: return {rs.longest(), e("12"), e("2"), rs.identity()};
  }
  return {};
}

/// A path written on a group chain with turning points (a1, a2, a3), some
/// segments possibly empty.
struct PaddedPath {
  Group group;
  std::array<Rational, 3> a;

  Rational x(int k) const {  // length spent on the k-th element of the chain
    Rational lo = k == 0 ? Rational(0) : a[static_cast<std::size_t>(k - 1)];
    Rational hi = k == 3 ? Rational(1) : a[static_cast<std::size_t>(k)];
    return hi - lo;
  }
};

inline void require_shape_mm(const LSPath& p, Int m) {
  if (p.lambda.rank() != 2 || p.lambda[0] != m || p.lambda[1] != m)
    throw Error(Errc::NotShapeMM, "path shape " + p.lambda.str() + " is not (m,m) for m = " + std::to_string(m));
}

inline std::optional<PaddedPath> pad(const RootSystem& rs, const LSPath& p, Group g) {
  auto chain = group_chain(rs, g);
  std::array<Rational, 4> len{Rational(0), Rational(0), Rational(0), Rational(0)};
  std::size_t k = 0;
  for (std::size_t j = 0; j < p.chain.size(); ++j) {
    while (k < 4 && chain[k] != p.chain[j].min_rep) ++k;
    if (k == 4) return std::nullopt;
    len[k++] = p.segment_length(j);
  }
  PaddedPath out{g, {len[0], len[0] + len[1], len[0] + len[1] + len[2]}};
  return out;
}

inline bool is_natural(const Rational& r) { return r.is_integer() && r.num() >= 0; }

/// Group membership with the integrality condition of that group.
inline std::optional<PaddedPath> classify(const RootSystem& rs, const LSPath& p, Int m) {
  require_a2(rs);
  require_shape_mm(p, m);
  const Rational M(m);
  for (Group g : {Group::B11, Group::B12, Group::B21, Group::B22}) {
    auto pp = pad(rs, p, g);
    if (!pp) continue;
    const bool one = g == Group::B11 || g == Group::B12;
    bool ok = one ? is_natural(M * pp->a[0]) && is_natural(M * pp->a[1]) && is_natural(M * pp->a[2])
                  : is_natural(M * pp->a[0]) && is_natural(Rational(2) * M * pp->a[1]) && is_natural(M * pp->a[2]);
    if (ok) return pp;
  }
  return std::nullopt;
}

inline Int natural(const Rational& r) {
  if (!is_natural(r)) throw Error(Errc::Internal, "exponent " + r.str() + " is not a natural number");
  return r.num();
}

/// Closed-form dual canonical basis monomial attached to a path of shape (m, m).
inline A2Poly dual_basis_element(const RootSystem& rs, const LSPath& p, Int m) {
  auto pp = classify(rs, p, m);
  if (!pp) throw Error(Errc::UnclassifiablePath, "path fits no group of B(m,m)");
  const Rational M(m), x1 = pp->x(0), x2 = pp->x(1), x3 = pp->x(2);
  auto mono = [](Rational a, Rational b, Rational c, Rational d) {
    return A2Poly::monomial({natural(a), natural(b), natural(c), natural(d)});
  };
  const Rational z(0);
  switch (pp->group) {
    case Group::B11: return mono(M * (x2 + x3), z, M * x1, M * (x1 + x2));
    case Group::B12: return mono(z, M * (x2 + x3), M * (x1 + x2), M * x1);
    case Group::B21:
      if (x2 >= x3) return mono(z, M * (x2 - x3), M * (x1 + x2 + x3), M * x1);
      return mono(M * (x3 - x2), z, M * (x1 + Rational(2) * x2), M * x1);
    case Group::B22:
      if (x2 >= x3) return mono(M * (x2 - x3), z, M * x1, M * (x1 + x2 + x3));
      return mono(z, M * (x3 - x2), M * x1, M * (x1 + Rational(2) * x2));
  }
  throw Error(Errc::Internal, "unreachable");
}

/// Builds the LS path of a padded chain, dropping empty segments.
inline LSPath unpad(const RootSystem& rs, const PaddedPath& pp, Int m) {
  auto chain = group_chain(rs, pp.group);
  const Weight lam{m, m};
  std::vector<Coset> cs;
  std::vector<Rational> a;
  for (int k = 0; k < 4; ++k) {
    if (pp.x(k) <= Rational(0)) continue;
    if (!cs.empty()) a.push_back(pp.a[static_cast<std::size_t>(k - 1)]);
    cs.push_back(coset_of(rs, chain[static_cast<std::size_t>(k)], lam));
  }
  return validate_ls(rs, lam, std::move(cs), std::move(a));
}

/// Inverse of dual_basis_element: the inequality systems of the four groups.
inline LSPath monomial_to_path(const RootSystem& rs, const Exponents& e, Int m) {
  require_a2(rs);
  for (Int x : e)
    if (x < 0) throw Error(Errc::NotInImage, "negative exponent");
  if (e[0] > 0 && e[1] > 0) throw Error(Errc::NotInImage, "monomial is not in normal form");
  const Int u_a = e[0], u_b = e[1], v = e[2], w = e[3];
  const Rational M(m), M2(2 * m);
  std::vector<PaddedPath> hits;
  if (u_b == 0) {
    const Int u = u_a;
    if (v <= w && w <= u + v && u + v <= m) hits.push_back({Group::B11, {Rational(v) / M, Rational(w) / M, Rational(u + v) / M}});
    if (2 * w <= v + w && v + w <= 2 * (u + v) && 2 * (u + v) <= 2 * m)
      hits.push_back({Group::B21, {Rational(w) / M, Rational(v + w) / M2, Rational(u + v) / M}});
    if (2 * v <= u + v + w && u + v + w <= 2 * w && 2 * w <= 2 * m)
      hits.push_back({Group::B22, {Rational(v) / M, Rational(u + v + w) / M2, Rational(w) / M}});
  }
  if (u_a == 0) {
    const Int u = u_b;
    if (w <= v && v <= u + w && u + w <= m) hits.push_back({Group::B12, {Rational(w) / M, Rational(v) / M, Rational(u + w) / M}});
    if (2 * w <= u + v + w && u + v + w <= 2 * v && 2 * v <= 2 * m)
      hits.push_back({Group::B21, {Rational(w) / M, Rational(u + v + w) / M2, Rational(v) / M}});
    if (2 * v <= v + w && v + w <= 2 * (u + w) && 2 * (u + w) <= 2 * m)
      hits.push_back({Group::B22, {Rational(v) / M, Rational(v + w) / M2, Rational(u + w) / M}});
  }
  if (hits.empty()) throw Error(Errc::NotInImage, "monomial satisfies none of the inequality systems");
  LSPath p = unpad(rs, hits.front(), m);
  for (std::size_t k = 1; k < hits.size(); ++k)
    if (!(unpad(rs, hits[k], m) == p)) throw Error(Errc::Internal, "inequality systems give different paths");
  return p;
}

struct TransitionRow {
  LSPath source;
  std::vector<std::pair<LSPath, Int>> entries;  // sorted by target path

  friend bool operator==(const TransitionRow& x, const TransitionRow& y) {
    return x.source == y.source && x.entries == y.entries;
  }
};

/// Expansion of p_pi in the dual canonical basis, computed by brute force.
inline TransitionRow transition_row(const RootSystem& rs, const LSPath& p, Int m) {
  require_shape_mm(p, m);
  TransitionRow row{p, {}};
  const A2Poly pv = path_vector(rs, p);
  for (const auto& [e, c] : pv.terms()) {
    try {
      row.entries.emplace_back(monomial_to_path(rs, e, m), c);
    } catch (const Error& err) {
      if (err.code() != Errc::NotInImage) throw;
      throw Error(Errc::ExpansionMismatch, "path vector term has no path: " + A2Poly::monomial(e, c).str());
    }
  }
  std::sort(row.entries.begin(), row.entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

/// Rows for every path of B(m omega_1 + m omega_2), in path order.
inline std::vector<TransitionRow> transition_matrix(const RootSystem& rs, Int m) {
  require_a2(rs);
  if (m < 1) throw Error(Errc::PreconditionViolated, "m must be positive");
  std::vector<TransitionRow> out;
  for (const LSPath& p : enumerate_B(rs, Weight{m, m})) out.push_back(transition_row(rs, p, m));
  return out;
}

/// The binomial transition formula: one entry in the first two groups; in the
/// other two, sum over j <= t of C(t l, j l) times the path with
/// (a1 + j/m, a2, a3 - j/m), t = min(m x2, m x3).
inline TransitionRow transition_row_formula(const RootSystem& rs, const LSPath& p, Int m) {
  auto pp = classify(rs, p, m);
  if (!pp) throw Error(Errc::UnclassifiablePath, "path fits no group of B(m,m)");
  TransitionRow row{p, {}};
  if (pp->group == Group::B11 || pp->group == Group::B12) {
    row.entries.emplace_back(p, 1);
    return row;
  }
  const Rational M(m);
  const Rational t = std::min(M * pp->x(1), M * pp->x(2));
  const Int ell = choose_ell(p);
  const Rational tl = t * Rational(ell);
  if (!tl.is_integer()) throw Error(Errc::Internal, "t l is not an integer");
  for (Int j = 0; j <= t.floor(); ++j) {
    PaddedPath q = *pp;
    q.a[0] = q.a[0] + Rational(j, m);
    q.a[2] = q.a[2] - Rational(j, m);
    row.entries.emplace_back(unpad(rs, q, m), checked::binomial(tl.num(), checked::mul(j, ell)));
  }
  std::sort(row.entries.begin(), row.entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

// ---- B(infinity) strings ----

/// Monomial of f1^l f2^m f1^n u_inf (m >= n).
inline A2Poly binfty_string_element(Int l, Int m, Int n) {
  if (l < 0 || m < 0 || n < 0 || m < n) throw Error(Errc::PreconditionViolated, "string needs l, m, n >= 0 and m >= n");
  if (l >= m - n) return A2Poly::monomial({l + n - m, 0, n, m - n});
  const Int s = l + n, r = std::max(n, m - l), t = std::min(m - n, l);
  return A2Poly::monomial({0, r + t - s, s - t, t});
}

/// (r, s, t) with f2^r f1^s f2^t u_inf = f1^l f2^m f1^n u_inf.
inline std::array<Int, 3> swap_string(Int l, Int m, Int n) {
  return {std::max(n, m - l), l + n, std::min(m - n, l)};
}

/// Exchanges a <-> b and c <-> d (the diagram automorphism).
inline A2Poly diagram_swap(const A2Poly& p) {
  A2Poly out;
  for (const auto& [e, c] : p.terms()) out.add_raw({e[1], e[0], e[3], e[2]}, c);
  return out;
}

struct Example11 {
  ShapeVector shapes;
  PathTuple tuple;
  A2Poly product;
};

/// Shapes (n w1, (m-n) w2, (l+n-m) w1) with tuple ((s2s1), (s1s2), (s1)),
/// zero shapes dropped.
inline Example11 example11_standard_monomial(const RootSystem& rs, Int l, Int m, Int n) {
  require_a2(rs);
  if (n < 0 || m - n < 0 || l < m - n)
    throw Error(Errc::NotNormalized, "need l >= m - n >= 0 and n >= 0");
  Example11 ex;
  const std::array<std::pair<Weight, const char*>, 3> parts{{
      {Weight{n, 0}, "21"},
      {Weight{0, m - n}, "12"},
      {Weight{l + n - m, 0}, "1"},
  }};
  for (const auto& [shape, w] : parts) {
    if (shape.is_zero()) continue;
    ex.shapes.push_back(shape);
    ex.tuple.push_back(validate_ls(rs, shape, std::vector<WeylElement>{rs.from_word(parse_word(w))}, {}));
  }
  ex.product = standard_monomial_vector(rs, ex.tuple);
  return ex;
}

}  // namespace lsp::a2
