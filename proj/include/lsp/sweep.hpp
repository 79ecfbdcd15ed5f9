#pragma once
// Acceptance sweep: ten exact checks, each against an independent computation.

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lsp/lsp.hpp"
#include "lsp/parallel.hpp"

namespace lsp::sweep {

struct Options {
  bool parallel = false;
};

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

inline std::vector<Weight> dominant_up_to(std::size_t rank, Int s) {
  std::vector<Weight> out;
  std::vector<Int> c(rank, 0);
  auto rec = [&](auto&& self, std::size_t i, Int left) -> void {
    if (i == rank) {
      out.emplace_back(c);
      return;
    }
    for (Int k = 0; k <= left; ++k) {
      c[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, s);
  return out;
}

/// Ordered sequences of nonzero dominant weights with total coordinate sum <= s.
inline std::vector<ShapeVector> shape_vectors(std::size_t rank, Int s) {
  std::vector<Weight> parts;
  for (const Weight& w : dominant_up_to(rank, s))
    if (!w.is_zero()) parts.push_back(w);
  std::vector<ShapeVector> out;
  ShapeVector cur;
  auto rec = [&](auto&& self, Int left) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (const Weight& w : parts) {
      const Int k = w.coordinate_sum();
      if (k > left) continue;
      cur.push_back(w);
      self(self, left - k);
      cur.pop_back();
    }
  };
  rec(rec, s);
  return out;
}

inline Weight act_word(const RootSystem& rs, const Word& w, Weight mu) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) mu = rs.reflect(*it, mu);
  return mu;
}

/// u <= v iff some subword of the given reduced word of v has product u,
/// detected through the regular orbit of rho.
inline bool leq_by_subwords(const RootSystem& rs, WeylElement u, const Word& vword) {
  const Weight probe = rs.rho();
  const Weight target = rs.act(u, probe);
  const std::size_t need = rs.length(u);
  if (need > vword.size()) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vword.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != need) continue;
    Word sub;
    for (std::size_t k = 0; k < vword.size(); ++k)
      if ((mask >> k) & 1U) sub.push_back(vword[k]);
    if (act_word(rs, sub, probe) == target) return true;
  }
  return false;
}

inline RootSystemPtr type(const char* name) { return build_root_system(cartan_from_name(name)); }

inline LSPath path(const RootSystem& rs, const Weight& lambda, std::vector<const char*> chain, std::vector<Rational> a = {}) {
  std::vector<WeylElement> ws;
  for (const char* w : chain) ws.push_back(rs.from_word(parse_word(w)));
  return validate_ls(rs, lambda, ws, std::move(a));
}

struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void add(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures++ == 0) first_failure = what;
  }
  void merge(const Tally& t) {
    checked += t.checked;
    if (t.failures && !failures) first_failure = t.first_failure;
    failures += t.failures;
  }
  std::string str(const char* unit) const {
    std::string s = std::to_string(checked) + " " + unit + ", " + std::to_string(failures) + " failures";
    if (failures) s += "; first: " + first_failure;
    return s;
  }
};

template <class F>
Result timed(int id, std::string name, F body) {
  const auto t0 = std::chrono::steady_clock::now();
  Result r{id, std::move(name), false, {}, 0};
  try {
    auto [ok, detail] = body();
    r.pass = ok;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

struct TypeWeight {
  const char* type;
  Weight lambda;
};

inline std::vector<TypeWeight> type_sweep(const std::vector<std::pair<const char*, Int>>& types) {
  std::vector<TypeWeight> out;
  for (const auto& [name, bound] : types) {
    const std::size_t rank = cartan_from_name(name).n;
    for (const Weight& w : dominant_up_to(rank, bound)) out.push_back({name, w});
  }
  return out;
}

inline std::string label(const char* type, const Weight& w) { return std::string(type) + " (" + w.str() + ")"; }

}  // namespace detail

// 1. Path character equals the Freudenthal character.
inline Result character_identity(const Options& o) {
  return detail::timed(1, "character identity", [&] {
    const auto items = detail::type_sweep({{"A1", 4}, {"A2", 4}, {"A3", 4}, {"B2", 4}, {"G2", 4}});
    std::map<std::string, RootSystemPtr> systems;
    for (const auto& it : items) systems.try_emplace(it.type, detail::type(it.type));
    auto res = parallel_map(
        items,
        [&](const detail::TypeWeight& it) {
          const RootSystem& rs = *systems.at(it.type);
          return path_character(enumerate_B(rs, it.lambda)) == freudenthal_character(rs, it.lambda);
        },
        o.parallel);
    detail::Tally t;
    for (std::size_t k = 0; k < items.size(); ++k) t.add(res[k], detail::label(items[k].type, items[k].lambda));
    return std::pair{t.failures == 0, t.str("weights")};
  });
}

// 2. Demazure subsets against the Demazure-operator character, all tau.
inline Result demazure_identity(const Options& o) {
  return detail::timed(2, "Demazure identity", [&] {
    const auto items = detail::type_sweep({{"A1", 4}, {"A2", 4}, {"A3", 4}, {"B2", 4}, {"G2", 4}});
    std::map<std::string, RootSystemPtr> systems;
    for (const auto& it : items) systems.try_emplace(it.type, detail::type(it.type));
    auto res = parallel_map(
        items,
        [&](const detail::TypeWeight& it) {
          const RootSystem& rs = *systems.at(it.type);
          const std::vector<LSPath> crystal = enumerate_B(rs, it.lambda);
          detail::Tally t;
          for (WeylElement tau : rs.elements())
            t.add(path_character(demazure_subset(rs, it.lambda, tau, &crystal)) == demazure_character(rs, it.lambda, tau),
                  detail::label(it.type, it.lambda) + " tau=" + word_str(rs.word(tau)));
          return t;
        },
        o.parallel);
    detail::Tally t;
    for (const auto& r : res) t.merge(r);
    return std::pair{t.failures == 0, t.str("(weight, tau) pairs")};
  });
}

// 3. Standard tuples are counted by the Weyl dimension of the total shape.
inline Result smt_counting(const Options& o) {
  return detail::timed(3, "standard monomial count", [&] {
    struct Item {
      const char* type;
      ShapeVector shapes;
    };
    std::vector<Item> items;
    for (const auto& [name, bound] : std::vector<std::pair<const char*, Int>>{{"A2", 4}, {"B2", 4}, {"A3", 3}})
      for (auto& s : detail::shape_vectors(cartan_from_name(name).n, bound)) items.push_back({name, std::move(s)});
    std::map<std::string, RootSystemPtr> systems;
    for (const auto& it : items) systems.try_emplace(it.type, detail::type(it.type));
    auto res = parallel_map(
        items,
        [&](const Item& it) {
          const RootSystem& rs = *systems.at(it.type);
          return count_standard(rs, it.shapes) == weyl_dimension(rs, shape_total(it.shapes, rs.rank()));
        },
        o.parallel);
    detail::Tally t;
    for (std::size_t k = 0; k < items.size(); ++k) {
      std::string what = items[k].type;
      for (const Weight& w : items[k].shapes) what += " (" + w.str() + ")";
      t.add(res[k], what);
    }
    return std::pair{t.failures == 0, t.str("shape vectors")};
  });
}

// 4. Zero-weight paths of B(2w1+2w2) in A2: path vectors, transitions, compatibility.
inline Result zero_weight_a2(const Options&) {
  return detail::timed(4, "A2 zero-weight paths of shape (2,2)", [] {
    auto rs = detail::type("A2");
    const Weight lam{2, 2};
    const LSPath pi1 = detail::path(*rs, lam, {"21", "1"}, {Rational(1, 2)});
    const LSPath pi2 = detail::path(*rs, lam, {"121", ""}, {Rational(1, 2)});
    const LSPath pi3 = detail::path(*rs, lam, {"12", "2"}, {Rational(1, 2)});
    detail::Tally t;

    std::set<std::pair<std::vector<std::uint32_t>, std::vector<Rational>>> zero, expect;
    auto key = [](const LSPath& p) {
      std::vector<std::uint32_t> ids;
      for (const Coset& c : p.chain) ids.push_back(c.min_rep.id);
      return std::pair{ids, p.a};
    };
    for (const LSPath& p : enumerate_B(*rs, lam))
      if (path_weight(p).is_zero()) zero.insert(key(p));
    for (const LSPath* p : {&pi1, &pi2, &pi3}) expect.insert(key(*p));
    t.add(zero == expect, "zero-weight paths");

    t.add(a2::path_vector(*rs, pi1).str() == "c^2 + c d", "p(pi1)");
    t.add(a2::path_vector(*rs, pi2).str() == "c d", "p(pi2)");
    t.add(a2::path_vector(*rs, pi3).str() == "c d + d^2", "p(pi3)");

    auto row_is = [&](const LSPath& src, std::vector<std::pair<LSPath, Int>> want) {
      std::sort(want.begin(), want.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      const a2::TransitionRow row = a2::transition_row(*rs, src, 2);
      a2::A2Poly sum;
      for (const auto& [q, c] : row.entries) sum = sum + a2::A2Poly::constant(c) * a2::dual_basis_element(*rs, q, 2);
      return row.entries == want && sum == a2::path_vector(*rs, src);
    };
    t.add(row_is(pi1, {{pi1, 1}, {pi2, 1}}), "row pi1");
    t.add(row_is(pi2, {{pi2, 1}}), "row pi2");
    t.add(row_is(pi3, {{pi3, 1}, {pi2, 1}}), "row pi3");

    auto c2 = exists_compatible_word(*rs, pi2);
    t.add(c2 && word_str(c2->word) == "121", "pi2 compatible with 121");
    t.add(!exists_compatible_word(*rs, pi1), "pi1 not compatible");
    t.add(!exists_compatible_word(*rs, pi3), "pi3 not compatible");
    return std::pair{t.failures == 0, t.str("facts")};
  });
}

// 5. Transition rows by brute force against the binomial formula.
inline Result transition_formula(const Options& o) {
  return detail::timed(5, "transition coefficients C(t l, j l)", [&] {
    auto rs = detail::type("A2");
    detail::Tally t;
    for (Int m = 1; m <= 4; ++m) {
      const std::vector<LSPath> paths = enumerate_B(*rs, Weight{m, m});
      auto res = parallel_map(
          paths, [&](const LSPath& p) { return a2::transition_row(*rs, p, m) == a2::transition_row_formula(*rs, p, m); },
          o.parallel);
      for (std::size_t k = 0; k < paths.size(); ++k) t.add(res[k], "m=" + std::to_string(m) + " " + std::to_string(k));
    }
    return std::pair{t.failures == 0, t.str("rows")};
  });
}

// 6. Standard tuples with a compatible word give a single basis monomial.
inline Result compatible_monomials(const Options& o) {
  return detail::timed(6, "compatible standard monomials are dual basis elements", [&] {
    auto rs = detail::type("A2");
    const auto shapes = detail::shape_vectors(2, 5);
    struct Count {
      detail::Tally t;
      std::size_t tuples = 0;
    };
    auto res = parallel_map(
        shapes,
        [&](const ShapeVector& s) {
          Count c;
          for (const PathTuple& tup : standard_tuples(*rs, s)) {
            ++c.tuples;
            if (!exists_compatible_word(*rs, tup)) continue;
            const a2::A2Poly v = a2::standard_monomial_vector(*rs, tup);
            c.t.add(v.is_basis_monomial() && v.is_normal(), v.str());
          }
          return c;
        },
        o.parallel);
    detail::Tally t;
    std::size_t tuples = 0;
    for (const auto& c : res) {
      t.merge(c.t);
      tuples += c.tuples;
    }
    return std::pair{t.failures == 0, std::to_string(tuples) + " standard tuples; " + t.str("compatible")};
  });
}

// 7. Projected exponents are integral for every compatible (path, word).
inline Result projected_integrality(const Options& o) {
  return detail::timed(7, "projected exponent integrality", [&] {
    const auto items = detail::type_sweep({{"A2", 4}, {"B2", 4}, {"A3", 3}});
    std::map<std::string, RootSystemPtr> systems;
    std::map<std::string, std::vector<Word>> words;
    for (const auto& it : items)
      if (systems.try_emplace(it.type, detail::type(it.type)).second)
        words[it.type] = reduced_words(*systems[it.type], systems[it.type]->longest());
    auto res = parallel_map(
        items,
        [&](const detail::TypeWeight& it) {
          const RootSystem& rs = *systems.at(it.type);
          detail::Tally t;
          for (const LSPath& p : enumerate_B(rs, it.lambda))
            for (const Word& w : words.at(it.type)) {
              if (!is_compatible_path(rs, p, w)) continue;
              bool ok = false;
              try {
                ok = lemma10_check(rs, p, w);
              } catch (const Error&) {
                ok = false;
              }
              t.add(ok, detail::label(it.type, it.lambda) + " word " + word_str(w));
            }
          return t;
        },
        o.parallel);
    detail::Tally t;
    for (const auto& r : res) t.merge(r);
    return std::pair{t.failures == 0, t.str("compatible pairs")};
  });
}

// 8. Products of fundamental minors along f1^l f2^m f1^n, and the string swap.
inline Result fundamental_products(const Options&) {
  return detail::timed(8, "string monomials and the 121/212 swap", [] {
    auto rs = detail::type("A2");
    detail::Tally t;
    const Int big = 8;
    const LSPath top = straight_path(*rs, Weight{big, big});
    auto apply = [&](LSPath p, std::initializer_list<std::pair<int, Int>> ops) -> std::optional<LSPath> {
      for (const auto& [i, k] : ops)
        for (Int j = 0; j < k; ++j) {
          auto q = root_op_f(*rs, p, i);
          if (!q) return std::nullopt;
          p = *q;
        }
      return p;
    };
    for (Int m = 0; m <= 3; ++m)
      for (Int n = 0; n <= m; ++n)
        for (Int l = m - n; l <= 4; ++l) {
          const std::string lmn = "(" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
          const a2::A2Poly target = a2::binfty_string_element(l, m, n);
          const a2::Example11 ex = a2::example11_standard_monomial(*rs, l, m, n);
          t.add(ex.product == target && ex.product.is_basis_monomial(), "product " + lmn);
          t.add(ex.tuple.empty() || is_standard(*rs, ex.tuple), "standard " + lmn);

          // the same element read along 212
          const auto [r, s, u] = a2::swap_string(l, m, n);
          t.add(a2::diagram_swap(a2::binfty_string_element(r, s, u)) == target, "swap " + lmn);

          // f1^l f2^m f1^n = f2^r f1^s f2^u deep inside a large crystal
          auto x = apply(top, {{0, n}, {1, m}, {0, l}});
          auto y = apply(top, {{1, u}, {0, s}, {1, r}});
          t.add(x && y && *x == *y, "crystal " + lmn);

          // the tuple is reached from the straight tuple by the same operators
          if (!ex.shapes.empty()) {
            std::optional<PathTuple> tup = PathTuple{};
            for (const Weight& w : ex.shapes) tup->push_back(straight_path(*rs, w));
            for (const auto& [i, k] : {std::pair{0, n}, {1, m}, {0, l}})
              for (Int j = 0; j < k && tup; ++j) tup = tuple_root_op_f(*rs, *tup, i);
            t.add(tup && *tup == ex.tuple, "tuple crystal " + lmn);
          }
        }
    return std::pair{t.failures == 0, t.str("checks")};
  });
}

// 9. The A3 path (s2s3s1, s3s1; 1/2) of shape w1+w3.
inline Result a3_incompatible_path(const Options&) {
  return detail::timed(9, "A3 path (231, 31; 1/2) has no compatible word", [] {
    auto rs = detail::type("A3");
    const Weight lam{1, 0, 1};
    detail::Tally t;
    std::optional<LSPath> p;
    try {
      p = detail::path(*rs, lam, {"231", "31"}, {Rational(1, 2)});
    } catch (const Error&) {
    }
    t.add(p.has_value(), "validates");
    if (!p) return std::pair{false, t.str("checks")};
    // f2 f1 f3 applied to the straight path, f3 first
    auto q = apply_f_string(*rs, straight_path(*rs, lam), parse_word("213"), {1, 1, 1});
    t.add(q && *q == *p, "string f2 f1 f3");
    const std::vector<Int> str = crystal_string(*rs, *p, parse_word("213212"));
    t.add(str == std::vector<Int>{1, 1, 1, 0, 0, 0}, "string along 213212");
    const auto words = reduced_words(*rs, rs->longest());
    t.add(words.size() == 16, "16 reduced words");
    std::size_t hits = 0;
    for (const Word& w : words) hits += is_compatible_path(*rs, *p, w);
    t.add(hits == 0, "no word compatible");
    t.add(!exists_compatible_word(*rs, *p), "exists_compatible_word is none");
    return std::pair{t.failures == 0, t.str("checks")};
  });
}

// 10. Greedy lifts and defining chains against exhaustive search; Bruhat order
// from one reduced word against every reduced word.
inline Result oracle_cross_checks(const Options& o) {
  return detail::timed(10, "lifts, defining chains and Bruhat order against brute force", [&] {
    detail::Tally chains, lifts, bruhat;
    for (const auto& [name, bound] : std::vector<std::pair<const char*, Int>>{{"A2", 4}, {"B2", 4}, {"A3", 3}}) {
      auto rsp = detail::type(name);
      const RootSystem& rs = *rsp;
      const auto elems = rs.elements();

      // Bruhat: every reduced word of v gives the same answer as the library.
      std::vector<std::vector<char>> leq(elems.size(), std::vector<char>(elems.size()));
      for (WeylElement v : elems) {
        const auto vwords = reduced_words(rs, v);
        for (WeylElement u : elems) {
          const bool first = detail::leq_by_subwords(rs, u, vwords.front());
          bool agree = true;
          for (const Word& w : vwords) agree = agree && detail::leq_by_subwords(rs, u, w) == first;
          leq[u.id][v.id] = first;
          bruhat.add(agree && rs.bruhat_leq(u, v) == first,
                     std::string(name) + " " + word_str(rs.word(u)) + " <= " + word_str(rs.word(v)));
        }
      }

      // Lifts: the largest coset member below each bound, by scanning.
      std::set<std::uint64_t> stabilizers;
      for (const Weight& lam : detail::dominant_up_to(rs.rank(), bound)) {
        if (!stabilizers.insert(stabilizer_mask(lam)).second) continue;
        for (const Coset& c : coset_space(rs, lam))
          for (WeylElement b : elems) {
            std::vector<WeylElement> below;
            for (WeylElement x : coset_members(rs, c))
              if (leq[x.id][b.id]) below.push_back(x);
            std::optional<WeylElement> top;
            for (WeylElement x : below) {
              bool dominates = true;
              for (WeylElement y : below) dominates = dominates && leq[y.id][x.id];
              if (dominates) top = x;
            }
            lifts.add((below.empty() || top) && max_lift_below(rs, c, b) == top,
                      std::string(name) + " lift of " + word_str(rs.word(c.min_rep)) + " below " + word_str(rs.word(b)));
          }
      }

      // Defining chains: greedy against exhaustive on every tuple of every shape vector.
      const auto shapes = detail::shape_vectors(rs.rank(), bound);
      auto res = parallel_map(
          shapes,
          [&](const ShapeVector& s) {
            std::vector<std::vector<LSPath>> crystals;
            for (const Weight& w : s) crystals.push_back(enumerate_B(rs, w));
            detail::Tally t;
            PathTuple cur(s.size());
            std::size_t standard = 0;
            auto rec = [&](auto&& self, std::size_t k) -> void {
              if (k == s.size()) {
                const auto dc = find_defining_chain(rs, cur);
                bool ok = dc.has_value() == has_defining_chain_exhaustive(rs, cur);
                if (dc) {
                  ++standard;
                  // the returned chain really is one: lifts in their cosets, weakly decreasing
                  const auto flat = dc->flat();
                  std::size_t pos = 0;
                  for (const LSPath& p : cur)
                    for (const Coset& c : p.chain) ok = ok && rs.act(flat[pos++], c.lambda) == c.orbit;
                  for (std::size_t j = 1; j < flat.size(); ++j) ok = ok && leq[flat[j].id][flat[j - 1].id];
                }
                t.add(ok, "tuple");
                return;
              }
              for (const LSPath& p : crystals[k]) {
                cur[k] = p;
                self(self, k + 1);
              }
            };
            rec(rec, 0);
            t.add(static_cast<Int>(standard) == count_standard(rs, s), "count");
            return t;
          },
          o.parallel);
      for (const auto& r : res) chains.merge(r);
    }
    const bool ok = chains.failures == 0 && lifts.failures == 0 && bruhat.failures == 0;
    return std::pair{ok, chains.str("tuples") + "; " + lifts.str("lifts") + "; " + bruhat.str("Bruhat pairs")};
  });
}

inline std::vector<std::function<Result(const Options&)>> criteria() {
  return {character_identity,      demazure_identity,     smt_counting,         zero_weight_a2,
          transition_formula,      compatible_monomials,  projected_integrality, fundamental_products,
          a3_incompatible_path,    oracle_cross_checks};
}

/// Not an acceptance criterion: do path vectors of shape (a,b) in A2 expand with
/// nonnegative coefficients? Reported, never asserted.
inline std::string nonnegativity_report(Int bound = 4) {
  auto rs = detail::type("A2");
  std::size_t paths = 0, negative = 0;
  std::string first;
  for (const Weight& lam : detail::dominant_up_to(2, bound))
    for (const LSPath& p : enumerate_B(*rs, lam)) {
      ++paths;
      const a2::A2Poly v = a2::path_vector(*rs, p);
      bool neg = false;
      for (const auto& [e, c] : v.terms()) neg = neg || c < 0;
      if (neg && negative++ == 0) first = "(" + lam.str() + ") " + v.str();
    }
  std::string s = "path vectors with a negative coefficient: " + std::to_string(negative) + " of " + std::to_string(paths) +
                  " (A2, coordinate sum <= " + std::to_string(bound) + ")";
  if (negative) s += "; first " + first;
  return s;
}

inline std::string format_line(const Result& r) {
  std::ostringstream os;
  os << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.detail << "]  ";
  os.setf(std::ios::fixed);
  os.precision(2);
  os << r.seconds << "s";
  return os.str();
}

}  // namespace lsp::sweep
