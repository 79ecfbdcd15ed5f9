#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lsp/character.hpp"
#include "lsp/root_system.hpp"

namespace lsp {

/// Coset tau W_lambda, identified by its minimal representative and by the
/// orbit weight tau(lambda).
struct Coset {
  Weight lambda;
  WeylElement min_rep;
  Weight orbit;

  friend bool operator==(const Coset& a, const Coset& b) { return a.lambda == b.lambda && a.min_rep == b.min_rep; }
};

/// Bit i set iff s_i fixes lambda.
inline std::uint64_t stabilizer_mask(const Weight& lambda) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < lambda.rank(); ++i)
    if (lambda[i] == 0) m |= std::uint64_t{1} << i;
  return m;
}

inline std::size_t coset_length(const RootSystem& rs, const Coset& c) { return rs.length(c.min_rep); }

/// Strips right descents lying in W_lambda until none remain.
inline Coset coset_of(const RootSystem& rs, WeylElement w, const Weight& lambda) {
  require_dominant(lambda);
  const std::uint64_t mask = stabilizer_mask(lambda);
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i < rs.rank(); ++i)
      if (((mask >> i) & 1U) && rs.is_right_descent(w, static_cast<int>(i))) {
        w = rs.right_mul(w, static_cast<int>(i));
        again = true;
      }
  }
  return Coset{lambda, w, rs.act(w, lambda)};
}

/// Coset whose orbit weight is nu: reflect nu back to the dominant chamber,
/// always using the smallest index with a negative coordinate.
inline Coset coset_from_orbit(const RootSystem& rs, const Weight& lambda, const Weight& nu) {
  Word letters;
  Weight x = nu;
  for (;;) {
    std::size_t i = 0;
    while (i < x.rank() && x[i] >= 0) ++i;
    if (i == x.rank()) break;
    x = rs.reflect(static_cast<int>(i), std::move(x));
    letters.push_back(static_cast<int>(i));
  }
  if (x != lambda) throw Error(Errc::Internal, "weight " + nu.str() + " is not in the orbit of " + lambda.str());
  WeylElement w = rs.from_word(letters);
  if (rs.length(w) != letters.size()) throw Error(Errc::Internal, "dominance descent produced a non-reduced word");
  return Coset{lambda, w, nu};
}

inline bool bruhat_leq(const RootSystem& rs, WeylElement u, WeylElement v) { return rs.bruhat_leq(u, v); }

inline bool coset_bruhat_leq(const RootSystem& rs, const Coset& a, const Coset& b) {
  if (a.lambda != b.lambda) throw Error(Errc::LambdaMismatch, "cosets over " + a.lambda.str() + " and " + b.lambda.str());
  return rs.bruhat_leq(a.min_rep, b.min_rep);
}

/// u <=_R v iff l(u) + l(u^-1 v) = l(v).
inline bool right_weak_leq(const RootSystem& rs, WeylElement u, WeylElement v) {
  return rs.length(u) + rs.length(rs.mul(rs.inverse(u), v)) == rs.length(v);
}

/// All cosets of W/W_lambda, ordered by minimal representative.
inline std::vector<Coset> coset_space(const RootSystem& rs, const Weight& lambda) {
  require_dominant(lambda);
  const std::uint64_t mask = stabilizer_mask(lambda);
  std::vector<Coset> out;
  for (WeylElement w : rs.elements()) {
    bool minimal = true;
    for (std::size_t i = 0; i < rs.rank() && minimal; ++i)
      if (((mask >> i) & 1U) && rs.is_right_descent(w, static_cast<int>(i))) minimal = false;
    if (minimal) out.push_back(Coset{lambda, w, rs.act(w, lambda)});
  }
  return out;
}

inline std::vector<WeylElement> coset_members(const RootSystem& rs, const Coset& c) {
  auto sub = rs.parabolic_subgroup(stabilizer_mask(c.lambda));
  std::vector<WeylElement> out;
  out.reserve(sub->size());
  for (WeylElement a : *sub) out.push_back(rs.mul(c.min_rep, a));
  std::sort(out.begin(), out.end());
  return out;
}

struct Cover {
  Coset coset;
  Root beta;
};

/// Cosets covered by c, each with the positive root beta such that
/// s_beta c is the cover.
inline std::vector<Cover> bruhat_covers_down(const RootSystem& rs, const Coset& c) {
  std::vector<Cover> out;
  const std::size_t len = coset_length(rs, c);
  if (len == 0) return out;
  for (const Root& beta : rs.positive_roots()) {
    Weight nu = rs.reflect_root(beta, c.orbit);
    if (nu == c.orbit) continue;
    Coset d = coset_from_orbit(rs, c.lambda, nu);
    if (coset_length(rs, d) + 1 == len && rs.bruhat_leq(d.min_rep, c.min_rep)) out.push_back(Cover{d, beta});
  }
  std::sort(out.begin(), out.end(), [](const Cover& a, const Cover& b) { return a.coset.min_rep < b.coset.min_rep; });
  return out;
}

/// Maximal element of the coset lying below bound, by scanning the coset.
/// The maximum is checked to dominate every other candidate.
inline std::optional<WeylElement> max_lift_below(const RootSystem& rs, const Coset& c, WeylElement bound) {
  std::vector<WeylElement> below;
  for (WeylElement x : coset_members(rs, c))
    if (rs.bruhat_leq(x, bound)) below.push_back(x);
  if (below.empty()) return std::nullopt;
  WeylElement best = below.front();
  for (WeylElement x : below)
    if (rs.length(x) > rs.length(best)) best = x;
  for (WeylElement x : below)
    if (!rs.bruhat_leq(x, best)) throw Error(Errc::Internal, "coset has no unique maximal lift below bound");
  return best;
}

/// Minimal element of the coset lying above bound; uniqueness is checked.
inline std::optional<WeylElement> min_lift_above(const RootSystem& rs, const Coset& c, WeylElement bound) {
  std::vector<WeylElement> above;
  for (WeylElement x : coset_members(rs, c))
    if (rs.bruhat_leq(bound, x)) above.push_back(x);
  if (above.empty()) return std::nullopt;
  WeylElement best = above.front();
  for (WeylElement x : above)
    if (rs.length(x) < rs.length(best)) best = x;
  for (WeylElement x : above)
    if (!rs.bruhat_leq(best, x)) throw Error(Errc::Internal, "coset has no unique minimal lift above bound");
  return best;
}

inline WeylElement max_rep(const RootSystem& rs, const Coset& c) {
  return *max_lift_below(rs, c, rs.longest());
}

}  // namespace lsp
