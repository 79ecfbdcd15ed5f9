#pragma once

#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "lsp/bruhat.hpp"
#include "lsp/character.hpp"
#include "lsp/rational.hpp"
#include "lsp/root_system.hpp"

namespace lsp {

/// LS path (tau_0 > ... > tau_r; a_1 < ... < a_r) of shape lambda.
struct LSPath {
  Weight lambda;
  std::vector<Coset> chain;
  std::vector<Rational> a;

  bool is_straight() const { return chain.size() == 1 && chain.front().orbit == lambda; }

  /// a_0 = 0 and a_{r+1} = 1 included.
  Rational turning_point(std::size_t i) const {
    if (i == 0) return Rational(0);
    if (i > a.size()) return Rational(1);
    return a[i - 1];
  }
  /// Length x_{j+1} = a_{j+1} - a_j of the segment travelled in direction tau_j.
  Rational segment_length(std::size_t j) const { return turning_point(j + 1) - turning_point(j); }

  friend bool operator==(const LSPath& p, const LSPath& q) {
    if (p.lambda != q.lambda || p.a != q.a || p.chain.size() != q.chain.size()) return false;
    for (std::size_t k = 0; k < p.chain.size(); ++k)
      if (p.chain[k].min_rep != q.chain[k].min_rep) return false;
    return true;
  }
  /// Shape, then chain words lexicographically, then turning points.
  friend bool operator<(const LSPath& p, const LSPath& q) {
    if (p.lambda != q.lambda) return p.lambda < q.lambda;
    const std::size_t n = std::min(p.chain.size(), q.chain.size());
    for (std::size_t k = 0; k < n; ++k)
      if (p.chain[k].min_rep != q.chain[k].min_rep) return p.chain[k].min_rep < q.chain[k].min_rep;
    if (p.chain.size() != q.chain.size()) return p.chain.size() < q.chain.size();
    return std::lexicographical_compare(p.a.begin(), p.a.end(), q.a.begin(), q.a.end());
  }
};

/// Piecewise-linear path given by its straight pieces.
struct Segment {
  Weight dir;
  Rational len;
};
using PLPath = std::vector<Segment>;

namespace detail {

inline bool search_cover_chain(const RootSystem& rs, const Coset& from, const Coset& target, const Rational& a,
                               std::set<std::uint32_t>& dead) {
  if (from.min_rep == target.min_rep) return true;
  if (coset_length(rs, from) <= coset_length(rs, target) || dead.count(from.min_rep.id)) return false;
  for (const Cover& cv : bruhat_covers_down(rs, from)) {
    if (!rs.bruhat_leq(target.min_rep, cv.coset.min_rep)) continue;
    if (!(a * Rational(rs.pairing(from.orbit, cv.beta))).is_integer()) continue;
    if (search_cover_chain(rs, cv.coset, target, a, dead)) return true;
  }
  dead.insert(from.min_rep.id);
  return false;
}

inline void merge_segments(PLPath& segs) {
  PLPath out;
  for (auto& s : segs) {
    if (s.len.is_zero()) continue;
    if (!out.empty() && out.back().dir == s.dir)
      out.back().len += s.len;
    else
      out.push_back(std::move(s));
  }
  segs = std::move(out);
}

struct Profile {
  std::vector<Rational> times;   // T_0 = 0, ..., T_K
  std::vector<Rational> height;  // h at each breakpoint
  Rational min;
};

inline Profile profile(const PLPath& p, int i) {
  Profile pr;
  pr.times.push_back(Rational(0));
  pr.height.push_back(Rational(0));
  for (const Segment& s : p) {
    pr.times.push_back(pr.times.back() + s.len);
    pr.height.push_back(pr.height.back() + s.len * Rational(s.dir[i]));
  }
  pr.min = *std::min_element(pr.height.begin(), pr.height.end());
  return pr;
}

// Reflects the part of the path inside [t0, t1] by s_i.
inline PLPath reflect_window(const RootSystem& rs, const PLPath& p, int i, const Rational& t0, const Rational& t1) {
  PLPath out;
  Rational start(0);
  for (const Segment& s : p) {
    Rational end = start + s.len;
    Rational lo = std::max(start, t0);
    Rational hi = std::min(end, t1);
    if (lo >= hi) {
      out.push_back(s);
    } else {
      out.push_back(Segment{s.dir, lo - start});
      out.push_back(Segment{rs.reflect(i, s.dir), hi - lo});
      out.push_back(Segment{s.dir, end - hi});
    }
    start = end;
  }
  merge_segments(out);
  return out;
}

inline std::optional<PLPath> apply_f(const RootSystem& rs, const PLPath& p, int i) {
  Profile pr = profile(p, i);
  const Rational q = pr.min;
  const std::size_t k_end = pr.height.size() - 1;
  if (pr.height[k_end] - q < Rational(1)) return std::nullopt;
  std::size_t k0 = 0;
  for (std::size_t k = 0; k <= k_end; ++k)
    if (pr.height[k] == q) k0 = k;
  const Rational target = q + Rational(1);
  for (std::size_t k = k0; k < k_end; ++k) {
    if (pr.height[k + 1] >= target) {
      Rational t1 = pr.times[k] + (target - pr.height[k]) * p[k].len / (pr.height[k + 1] - pr.height[k]);
      return reflect_window(rs, p, i, pr.times[k0], t1);
    }
  }
  throw Error(Errc::Internal, "root operator f: no crossing found");
}

inline std::optional<PLPath> apply_e(const RootSystem& rs, const PLPath& p, int i) {
  Profile pr = profile(p, i);
  const Rational q = pr.min;
  if (q > Rational(-1)) return std::nullopt;
  std::size_t k1 = 0;
  while (pr.height[k1] != q) ++k1;
  const Rational target = q + Rational(1);
  for (std::size_t k = k1; k-- > 0;) {
    if (pr.height[k] >= target) {
      Rational t0 = pr.times[k] + (target - pr.height[k]) * p[k].len / (pr.height[k + 1] - pr.height[k]);
      return reflect_window(rs, p, i, t0, pr.times[k1]);
    }
  }
  throw Error(Errc::Internal, "root operator e: no crossing found");
}

}  // namespace detail

inline PLPath to_segments(const LSPath& p) {
  PLPath segs;
  for (std::size_t j = 0; j < p.chain.size(); ++j) segs.push_back(Segment{p.chain[j].orbit, p.segment_length(j)});
  return segs;
}

/// Rebuilds an LS path from its pieces, merging equal neighbours and dropping
/// zero-length pieces. No integrality check is made.
inline LSPath from_segments(const RootSystem& rs, const Weight& lambda, PLPath segs) {
  detail::merge_segments(segs);
  LSPath p;
  p.lambda = lambda;
  Rational t(0);
  for (std::size_t j = 0; j < segs.size(); ++j) {
    p.chain.push_back(coset_from_orbit(rs, lambda, segs[j].dir));
    t += segs[j].len;
    if (j + 1 < segs.size()) p.a.push_back(t);
  }
  return p;
}

/// Checks the chain, the turning points and the integrality condition.
inline LSPath validate_ls(const RootSystem& rs, const Weight& lambda, std::vector<Coset> chain, std::vector<Rational> a) {
  require_dominant(lambda);
  if (chain.empty()) throw Error(Errc::ChainNotDecreasing, "empty chain");
  for (const Coset& c : chain)
    if (c.lambda != lambda) throw Error(Errc::LambdaMismatch, "coset over " + c.lambda.str() + " in path of shape " + lambda.str());
  if (a.size() + 1 != chain.size())
    throw Error(Errc::BadTurningPoints, "need " + std::to_string(chain.size() - 1) + " turning points, got " + std::to_string(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational lo = i == 0 ? Rational(0) : a[i - 1];
    if (!(lo < a[i]) || !(a[i] < Rational(1)))
      throw Error(Errc::BadTurningPoints, "turning points must satisfy 0 < a_1 < ... < a_r < 1");
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain[i].min_rep == chain[i - 1].min_rep || !coset_bruhat_leq(rs, chain[i], chain[i - 1]))
      throw Error(Errc::ChainNotDecreasing, "chain is not strictly decreasing at position " + std::to_string(i));
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    std::set<std::uint32_t> dead;
    if (!detail::search_cover_chain(rs, chain[i - 1], chain[i], a[i - 1], dead))
      throw NotLSPathError(i, "integrality fails on segment " + std::to_string(i) + " at a = " + a[i - 1].str());
  }
  return LSPath{lambda, std::move(chain), std::move(a)};
}

inline LSPath validate_ls(const RootSystem& rs, const Weight& lambda, const std::vector<WeylElement>& chain,
                          std::vector<Rational> a) {
  std::vector<Coset> cs;
  for (WeylElement w : chain) cs.push_back(coset_of(rs, w, lambda));
  return validate_ls(rs, lambda, std::move(cs), std::move(a));
}

inline LSPath straight_path(const RootSystem& rs, const Weight& lambda) {
  require_dominant(lambda);
  return LSPath{lambda, {coset_of(rs, rs.identity(), lambda)}, {}};
}

/// pi(1) = sum_i (a_{i+1} - a_i) tau_i(lambda).
inline Weight path_weight(const LSPath& p) {
  std::vector<Rational> acc(p.lambda.rank(), Rational(0));
  for (std::size_t j = 0; j < p.chain.size(); ++j) {
    Rational x = p.segment_length(j);
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += x * Rational(p.chain[j].orbit[k]);
  }
  Weight w(p.lambda.rank());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (!acc[k].is_integer()) throw Error(Errc::InternalNonIntegralWeight, "path endpoint is not a lattice point");
    w[k] = acc[k].num();
  }
  return w;
}

inline std::optional<LSPath> root_op_f(const RootSystem& rs, const LSPath& p, int i) {
  auto s = detail::apply_f(rs, to_segments(p), i);
  if (!s) return std::nullopt;
  return from_segments(rs, p.lambda, std::move(*s));
}

inline std::optional<LSPath> root_op_e(const RootSystem& rs, const LSPath& p, int i) {
  auto s = detail::apply_e(rs, to_segments(p), i);
  if (!s) return std::nullopt;
  return from_segments(rs, p.lambda, std::move(*s));
}

/// The crystal B(lambda): closure of the straight path under all f_i, sorted.
/// Every member is re-validated against the integrality condition.
inline std::vector<LSPath> enumerate_B(const RootSystem& rs, const Weight& lambda, bool validate = true) {
  std::set<LSPath> seen{straight_path(rs, lambda)};
  std::deque<LSPath> queue{*seen.begin()};
  while (!queue.empty()) {
    LSPath p = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      auto q = root_op_f(rs, p, static_cast<int>(i));
      if (q && seen.insert(*q).second) queue.push_back(std::move(*q));
    }
  }
  std::vector<LSPath> out(seen.begin(), seen.end());
  if (validate)
    for (const LSPath& p : out) validate_ls(rs, p.lambda, p.chain, p.a);
  return out;
}

/// B(lambda)_tau: paths whose initial coset lies below the coset of tau.
inline std::vector<LSPath> demazure_subset(const RootSystem& rs, const Weight& lambda, WeylElement tau,
                                           const std::vector<LSPath>* crystal = nullptr) {
  std::vector<LSPath> all;
  if (!crystal) {
    all = enumerate_B(rs, lambda);
    crystal = &all;
  }
  Coset top = coset_of(rs, tau, lambda);
  std::vector<LSPath> out;
  for (const LSPath& p : *crystal)
    if (coset_bruhat_leq(rs, p.chain.front(), top)) out.push_back(p);
  return out;
}

inline Character path_character(const std::vector<LSPath>& paths) {
  Character ch;
  for (const LSPath& p : paths) {
    Int& m = ch[path_weight(p)];
    m = checked::add(m, 1);
  }
  return ch;
}

/// Adapted string: n_1 = largest power of e_{d_1} applicable, then n_2 for
/// e_{d_2} on the result, and so on. The end point must be the straight path.
inline std::vector<Int> crystal_string(const RootSystem& rs, LSPath p, const Word& directions) {
  std::vector<Int> out;
  for (int d : directions) {
    Int n = 0;
    while (auto q = root_op_e(rs, p, d)) {
      p = std::move(*q);
      ++n;
    }
    out.push_back(n);
  }
  if (!p.is_straight()) throw Error(Errc::StringIncomplete, "directions do not reach the highest-weight path");
  return out;
}

/// Applies f_{d_1}^{n_1} ... f_{d_k}^{n_k} (rightmost first); nullopt if some
/// step vanishes.
inline std::optional<LSPath> apply_f_string(const RootSystem& rs, LSPath p, const Word& directions,
                                            const std::vector<Int>& exps) {
  for (std::size_t k = directions.size(); k-- > 0;) {
    for (Int t = 0; t < exps[k]; ++t) {
      auto q = root_op_f(rs, p, directions[k]);
      if (!q) return std::nullopt;
      p = std::move(*q);
    }
  }
  return p;
}

/// lcm of the nonzero |<mu, beta^vee>| over mu in W lambda and beta > 0; every
/// turning point of an LS path of shape lambda has a denominator dividing it.
inline Int turning_point_denominator_bound(const RootSystem& rs, const Weight& lambda) {
  Int l = 1;
  for (const Coset& c : coset_space(rs, lambda))
    for (const Root& beta : rs.positive_roots()) {
      Int p = rs.pairing(c.orbit, beta);
      if (p != 0) l = checked::lcm(l, p < 0 ? -p : p);
    }
  return l;
}

}  // namespace lsp
