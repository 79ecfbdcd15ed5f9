#pragma once
// Independent brute-force computations used only by the tests.

#include <map>
#include <set>
#include <vector>

#include "lsp/lsp.hpp"

namespace oracle {

using lsp::Int;
using lsp::RootSystem;
using lsp::Weight;
using lsp::WeylElement;
using lsp::Word;

// Group elements as images of the fundamental weights, generated by words.
inline std::set<std::vector<Weight>> weyl_group_by_matrices(const RootSystem& rs) {
  std::vector<Weight> start;
  for (std::size_t i = 0; i < rs.rank(); ++i) start.push_back(rs.fundamental(static_cast<int>(i)));
  std::set<std::vector<Weight>> seen{start};
  std::vector<std::vector<Weight>> frontier{start};
  while (!frontier.empty()) {
    std::vector<std::vector<Weight>> next;
    for (const auto& img : frontier)
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        std::vector<Weight> y;
        for (const Weight& w : img) y.push_back(rs.reflect(static_cast<int>(i), w));
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Weight action of a word, applied right to left.
inline Weight act_word(const RootSystem& rs, const Word& w, Weight mu) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) mu = rs.reflect(*it, mu);
  return mu;
}

// u <= v via subwords of one given reduced word of v.
inline bool bruhat_by_subwords(const RootSystem& rs, WeylElement u, const Word& vword) {
  const std::size_t len = vword.size();
  const Weight probe = lsp::Int{1} * rs.rho();
  const Weight target = rs.act(u, probe);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != rs.length(u)) continue;
    Word sub;
    for (std::size_t k = 0; k < len; ++k)
      if ((mask >> k) & 1U) sub.push_back(vword[k]);
    if (act_word(rs, sub, probe) == target) return true;
  }
  return false;
}

// Brute-force maximum of coset members below bound, with members generated
// from the stabilizer by words.
inline std::vector<WeylElement> lifts_below(const RootSystem& rs, const lsp::Coset& c, WeylElement bound) {
  std::vector<WeylElement> out;
  for (WeylElement w : rs.elements())
    if (rs.act(w, c.lambda) == c.orbit && bruhat_by_subwords(rs, w, rs.word(bound))) out.push_back(w);
  return out;
}

// Weyl dimension in type A2.
inline Int dim_a2(Int a, Int b) { return (a + 1) * (b + 1) * (a + b + 2) / 2; }

// All dominant weights of the given rank with coordinate sum <= s.
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
    c[i] = 0;
  };
  rec(rec, 0, s);
  return out;
}

}  // namespace oracle

namespace oracle {

// Every (chain, turning points) pair with denominators dividing the bound
// that validate_ls accepts.
inline std::set<lsp::LSPath> ls_paths_direct(const RootSystem& rs, const Weight& lambda) {
  const Int den = lsp::turning_point_denominator_bound(rs, lambda);
  auto space = lsp::coset_space(rs, lambda);
  std::set<lsp::LSPath> out;
  std::vector<lsp::Coset> chain;
  std::vector<lsp::Rational> a;
  auto points = [&](auto&& self, std::size_t need, Int from) -> void {
    if (a.size() == need) {
      try {
        out.insert(lsp::validate_ls(rs, lambda, chain, a));
      } catch (const lsp::Error&) {
      }
      return;
    }
    for (Int k = from; k < den; ++k) {
      a.emplace_back(k, den);
      self(self, need, k + 1);
      a.pop_back();
    }
  };
  auto chains = [&](auto&& self) -> void {
    points(points, chain.size() - 1, 1);
    for (const lsp::Coset& c : space)
      if (c.min_rep != chain.back().min_rep && lsp::coset_bruhat_leq(rs, c, chain.back())) {
        chain.push_back(c);
        self(self);
        chain.pop_back();
      }
  };
  for (const lsp::Coset& top : space) {
    chain = {top};
    chains(chains);
  }
  return out;
}

}  // namespace oracle
