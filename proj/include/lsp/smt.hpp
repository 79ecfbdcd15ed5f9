#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "lsp/bruhat.hpp"
#include "lsp/ls_path.hpp"

namespace lsp {

using ShapeVector = std::vector<Weight>;
using PathTuple = std::vector<LSPath>;

inline Weight shape_total(const ShapeVector& shapes, std::size_t rank) {
  Weight t(rank);
  for (const Weight& s : shapes) t += s;
  return t;
}

inline Weight tuple_weight(const PathTuple& t, std::size_t rank) {
  Weight w(rank);
  for (const LSPath& p : t) w += path_weight(p);
  return w;
}

/// Lifts of every chain element, lifts[k][j] for segment j of path k.
struct DefiningChain {
  std::vector<std::vector<WeylElement>> lifts;

  std::vector<WeylElement> flat() const {
    std::vector<WeylElement> out;
    for (const auto& l : lifts) out.insert(out.end(), l.begin(), l.end());
    return out;
  }
  friend bool operator==(const DefiningChain&, const DefiningChain&) = default;
};

/// Existence is decided greedily from the top: each lift is the largest coset
/// member below the previous one. The chain returned is the canonical minimal
/// one, built from the bottom with the smallest member above the next lift.
inline std::optional<DefiningChain> find_defining_chain(const RootSystem& rs, const PathTuple& t) {
  WeylElement bound = rs.longest();
  for (const LSPath& p : t)
    for (const Coset& c : p.chain) {
      auto lift = max_lift_below(rs, c, bound);
      if (!lift) return std::nullopt;
      bound = *lift;
    }
  DefiningChain dc;
  dc.lifts.resize(t.size());
  WeylElement floor = rs.identity();
  for (std::size_t k = t.size(); k-- > 0;) {
    auto& row = dc.lifts[k];
    row.resize(t[k].chain.size());
    for (std::size_t j = row.size(); j-- > 0;) {
      auto lift = min_lift_above(rs, t[k].chain[j], floor);
      if (!lift) throw Error(Errc::Internal, "top-down lifts exist but bottom-up lifts do not");
      row[j] = floor = *lift;
    }
  }
  return dc;
}

/// Visits every defining chain of t; the visitor returns false to stop.
inline void for_each_defining_chain(const RootSystem& rs, const PathTuple& t,
                                    const std::function<bool(const DefiningChain&)>& visit) {
  std::vector<std::pair<std::size_t, const Coset*>> slots;
  for (std::size_t k = 0; k < t.size(); ++k)
    for (const Coset& c : t[k].chain) slots.emplace_back(k, &c);
  std::vector<std::vector<WeylElement>> members;
  for (const auto& s : slots) members.push_back(coset_members(rs, *s.second));

  DefiningChain dc;
  dc.lifts.assign(t.size(), {});
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t pos, WeylElement bound) -> void {
    if (stop) return;
    if (pos == slots.size()) {
      if (!visit(dc)) stop = true;
      return;
    }
    auto& row = dc.lifts[slots[pos].first];
    for (auto it = members[pos].rbegin(); it != members[pos].rend() && !stop; ++it) {
      if (!rs.bruhat_leq(*it, bound)) continue;
      row.push_back(*it);
      self(self, pos + 1, *it);
      row.pop_back();
    }
  };
  rec(rec, 0, rs.longest());
}

inline bool has_defining_chain_exhaustive(const RootSystem& rs, const PathTuple& t) {
  bool found = false;
  for_each_defining_chain(rs, t, [&](const DefiningChain&) {
    found = true;
    return false;
  });
  return found;
}

inline bool is_standard(const RootSystem& rs, const PathTuple& t) { return find_defining_chain(rs, t).has_value(); }

/// Standard tuples of the given shape in lexicographic order. The search
/// extends tuples path by path, keeping the greedy bound.
inline std::vector<PathTuple> standard_tuples(const RootSystem& rs, const ShapeVector& shapes) {
  std::vector<std::vector<LSPath>> crystals;
  for (const Weight& s : shapes) crystals.push_back(enumerate_B(rs, s, false));
  std::vector<PathTuple> out;
  PathTuple cur;
  auto rec = [&](auto&& self, std::size_t k, WeylElement bound) -> void {
    if (k == shapes.size()) {
      out.push_back(cur);
      return;
    }
    for (const LSPath& p : crystals[k]) {
      WeylElement b = bound;
      bool ok = true;
      for (const Coset& c : p.chain) {
        auto lift = max_lift_below(rs, c, b);
        if (!lift) {
          ok = false;
          break;
        }
        b = *lift;
      }
      if (!ok) continue;
      cur.push_back(p);
      self(self, k + 1, b);
      cur.pop_back();
    }
  };
  rec(rec, 0, rs.longest());
  return out;
}

inline Int count_standard(const RootSystem& rs, const ShapeVector& shapes) {
  return static_cast<Int>(standard_tuples(rs, shapes).size());
}

// ---- adapted generators and compatibility ----

struct AdaptedWordData {
  Word word;
  std::vector<WeylElement> prefixes;                // y_0 = id, ..., y_N = w0
  std::vector<std::pair<WeylElement, int>> generators;  // (y_j, i_j), j = 1..N
  std::set<std::pair<int, WeylElement>> minors;     // (i, y mod W_{omega_i}) over all i, j, identity cosets dropped
};

inline void require_reduced_w0(const RootSystem& rs, const Word& word) {
  for (int i : word)
    if (i < 0 || static_cast<std::size_t>(i) >= rs.rank())
      throw Error(Errc::NotReducedWordOfW0, "letter out of range in " + word_str(word));
  if (word.size() != rs.length(rs.longest()) || rs.from_word(word) != rs.longest())
    throw Error(Errc::NotReducedWordOfW0, word_str(word) + " is not a reduced word of the longest element");
}

inline AdaptedWordData adapted_generators(const RootSystem& rs, const Word& word) {
  require_reduced_w0(rs, word);
  AdaptedWordData d;
  d.word = word;
  WeylElement y = rs.identity();
  d.prefixes.push_back(y);
  for (int i : word) {
    y = rs.right_mul(y, i);
    d.prefixes.push_back(y);
    d.generators.emplace_back(y, i);
  }
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    const Weight w = rs.fundamental(static_cast<int>(i));
    for (WeylElement p : d.prefixes) {
      WeylElement m = coset_of(rs, p, w).min_rep;
      if (m != rs.identity()) d.minors.emplace(static_cast<int>(i), m);
    }
  }
  return d;
}

inline bool is_compatible_path(const RootSystem& rs, const LSPath& p, const Word& word) {
  require_reduced_w0(rs, word);
  std::set<WeylElement> ys;
  WeylElement y = rs.identity();
  ys.insert(y);
  for (int i : word) ys.insert(y = rs.right_mul(y, i));
  for (const Coset& c : p.chain)
    if (!ys.count(c.min_rep)) return false;
  return true;
}

struct CompatibilityCertificate {
  Word word;
  std::vector<WeylElement> chain;
};

namespace detail {

// Reduced word of w0 passing through the weak-order chain e <=_R x_1 <=_R ... <=_R w0.
inline Word word_through(const RootSystem& rs, const std::vector<WeylElement>& ascending) {
  Word out;
  WeylElement prev = rs.identity();
  auto extend = [&](WeylElement next) {
    const Word& piece = rs.word(rs.mul(rs.inverse(prev), next));
    out.insert(out.end(), piece.begin(), piece.end());
    prev = next;
  };
  for (WeylElement x : ascending) extend(x);
  extend(rs.longest());
  return out;
}

// Largest y_j below index `top` lying in the coset; -1 if none.
inline long best_prefix_in(const RootSystem& rs, const std::vector<WeylElement>& ys, long top, const Coset& c) {
  for (long j = top; j >= 0; --j)
    if (rs.act(ys[static_cast<std::size_t>(j)], c.lambda) == c.orbit) return j;
  return -1;
}

}  // namespace detail

/// Exhaustive scan over reduced words of w0; lexicographically least witness.
inline std::optional<CompatibilityCertificate> compatible_word_scan(const RootSystem& rs, const LSPath& p) {
  for (const Word& w : reduced_words(rs, rs.longest()))
    if (is_compatible_path(rs, p, w)) {
      CompatibilityCertificate cert{w, {}};
      for (const Coset& c : p.chain) cert.chain.push_back(c.min_rep);
      return cert;
    }
  return std::nullopt;
}

/// Weak-order criterion: the chain must ascend in right weak order from
/// tau_r to tau_0.
inline std::optional<CompatibilityCertificate> compatible_word_weak_order(const RootSystem& rs, const LSPath& p) {
  std::vector<WeylElement> asc;
  for (auto it = p.chain.rbegin(); it != p.chain.rend(); ++it) asc.push_back(it->min_rep);
  for (std::size_t k = 1; k < asc.size(); ++k)
    if (!right_weak_leq(rs, asc[k - 1], asc[k])) return std::nullopt;
  CompatibilityCertificate cert{detail::word_through(rs, asc), {}};
  for (const Coset& c : p.chain) cert.chain.push_back(c.min_rep);
  return cert;
}

/// For each reduced word, lifts are taken greedily among its prefixes,
/// weakly decreasing along the tuple.
inline std::optional<CompatibilityCertificate> compatible_word_scan(const RootSystem& rs, const PathTuple& t) {
  for (const Word& w : reduced_words(rs, rs.longest())) {
    std::vector<WeylElement> ys{rs.identity()};
    for (int i : w) ys.push_back(rs.right_mul(ys.back(), i));
    long top = static_cast<long>(ys.size()) - 1;
    CompatibilityCertificate cert{w, {}};
    bool ok = true;
    for (const LSPath& p : t) {
      for (const Coset& c : p.chain) {
        top = detail::best_prefix_in(rs, ys, top, c);
        if (top < 0) {
          ok = false;
          break;
        }
        cert.chain.push_back(ys[static_cast<std::size_t>(top)]);
      }
      if (!ok) break;
    }
    if (ok) return cert;
  }
  return std::nullopt;
}

/// Searches all defining chains for one that descends in right weak order.
inline std::optional<CompatibilityCertificate> compatible_word_weak_order(const RootSystem& rs, const PathTuple& t) {
  std::optional<CompatibilityCertificate> found;
  for_each_defining_chain(rs, t, [&](const DefiningChain& dc) {
    std::vector<WeylElement> flat = dc.flat();
    for (std::size_t k = 1; k < flat.size(); ++k)
      if (!right_weak_leq(rs, flat[k], flat[k - 1])) return true;
    std::vector<WeylElement> asc(flat.rbegin(), flat.rend());
    found = CompatibilityCertificate{detail::word_through(rs, asc), flat};
    return false;
  });
  return found;
}

/// Both methods run; disagreement is an internal error.
template <class T>
std::optional<CompatibilityCertificate> exists_compatible_word(const RootSystem& rs, const T& x) {
  auto a = compatible_word_scan(rs, x);
  auto b = compatible_word_weak_order(rs, x);
  if (a.has_value() != b.has_value())
    throw Error(Errc::Internal, "word scan and weak-order criterion disagree on compatibility");
  return a;
}

// ---- projection and exponent integrality ----

/// Image of a path in the coset data of one fundamental weight. Consecutive
/// repetitions are merged, so the result need not satisfy the LS condition
/// for that shape.
struct ProjectedPath {
  int index = 0;
  std::vector<Coset> chain;
  std::vector<Rational> c;

  Rational turning_point(std::size_t j) const {
    if (j == 0) return Rational(0);
    if (j > c.size()) return Rational(1);
    return c[j - 1];
  }
};

inline ProjectedPath project_path(const RootSystem& rs, const LSPath& p, int i) {
  const Weight w = rs.fundamental(i);
  ProjectedPath out;
  out.index = i;
  for (std::size_t j = 0; j < p.chain.size(); ++j) {
    Coset c = coset_of(rs, p.chain[j].min_rep, w);
    if (!out.chain.empty() && out.chain.back() == c) continue;
    if (!out.chain.empty()) out.c.push_back(p.turning_point(j));
    out.chain.push_back(std::move(c));
  }
  return out;
}

/// lambda_i (c_{j+1} - c_j) is integral for every fundamental index i and
/// every step of the projected path.
inline bool lemma10_check(const RootSystem& rs, const LSPath& p, const Word& word) {
  if (!is_compatible_path(rs, p, word))
    throw Error(Errc::PreconditionViolated, "path is not compatible with " + word_str(word));
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    ProjectedPath q = project_path(rs, p, static_cast<int>(i));
    for (std::size_t j = 0; j < q.chain.size(); ++j)
      if (!(Rational(p.lambda[i]) * (q.turning_point(j + 1) - q.turning_point(j))).is_integer()) return false;
  }
  return true;
}

// ---- crystal structure on tuples (concatenation) ----

inline PLPath concatenate(const PathTuple& t) {
  PLPath all;
  for (const LSPath& p : t) {
    PLPath s = to_segments(p);
    all.insert(all.end(), s.begin(), s.end());
  }
  return all;
}

inline PathTuple split_concatenation(const RootSystem& rs, const ShapeVector& shapes, const PLPath& segs) {
  PathTuple out;
  std::size_t k = 0;
  PLPath cur;
  Rational room(1);
  for (Segment s : segs) {
    while (s.len > Rational(0)) {
      Rational take = std::min(s.len, room);
      cur.push_back(Segment{s.dir, take});
      s.len -= take;
      room -= take;
      if (room.is_zero()) {
        out.push_back(from_segments(rs, shapes.at(k++), std::move(cur)));
        cur.clear();
        room = Rational(1);
      }
    }
  }
  if (out.size() != shapes.size()) throw Error(Errc::Internal, "concatenation does not split into the given shapes");
  return out;
}

inline std::optional<PathTuple> tuple_root_op_f(const RootSystem& rs, const PathTuple& t, int i) {
  auto s = detail::apply_f(rs, concatenate(t), i);
  if (!s) return std::nullopt;
  ShapeVector shapes;
  for (const LSPath& p : t) shapes.push_back(p.lambda);
  return split_concatenation(rs, shapes, *s);
}

inline std::optional<PathTuple> tuple_root_op_e(const RootSystem& rs, const PathTuple& t, int i) {
  auto s = detail::apply_e(rs, concatenate(t), i);
  if (!s) return std::nullopt;
  ShapeVector shapes;
  for (const LSPath& p : t) shapes.push_back(p.lambda);
  return split_concatenation(rs, shapes, *s);
}

}  // namespace lsp
