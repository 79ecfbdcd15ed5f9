#pragma once

#include <map>
#include <vector>

#include "lsp/root_system.hpp"

namespace lsp {

/// Formal character: weight -> multiplicity. Zero multiplicities are never stored.
using Character = std::map<Weight, Int>;

inline Int character_total(const Character& ch) {
  Int s = 0;
  for (const auto& [mu, m] : ch) s = checked::add(s, m);
  return s;
}

inline void require_dominant(const Weight& lambda) {
  if (!lambda.is_dominant()) throw Error(Errc::NotDominant, "weight " + lambda.str() + " is not dominant");
}

/// Weyl dimension formula: prod over positive roots of (lambda+rho, beta)/(rho, beta).
inline Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  require_dominant(lambda);
  Weight lr = lambda + rs.rho();
  Rational dim(1);
  for (const Root& beta : rs.positive_roots()) dim *= Rational(rs.form(lr, beta), rs.form(rs.rho(), beta));
  if (!dim.is_integer()) throw Error(Errc::Internal, "non-integral Weyl dimension");
  return dim.num();
}

/// Weight multiplicities of V(lambda) by Freudenthal's recursion, walking
/// weights lambda - sum k_j alpha_j level by level in depth sum k_j.
inline Character freudenthal_character(const RootSystem& rs, const Weight& lambda) {
  require_dominant(lambda);
  const std::size_t n = rs.rank();
  const Weight two_rho = Int{2} * rs.rho();
  std::vector<Weight> alpha(n);
  for (std::size_t j = 0; j < n; ++j) alpha[j] = rs.simple_root_weight(static_cast<int>(j));
  std::vector<Weight> beta_w;
  for (const Root& b : rs.positive_roots()) beta_w.push_back(rs.root_weight(b));

  std::map<std::vector<Int>, Int> mult;  // depth vector -> multiplicity
  auto weight_of = [&](const std::vector<Int>& k) {
    Weight mu = lambda;
    for (std::size_t j = 0; j < n; ++j)
      if (k[j]) mu -= k[j] * alpha[j];
    return mu;
  };

  std::vector<std::vector<Int>> level{std::vector<Int>(n, 0)};
  mult[level[0]] = 1;
  while (!level.empty()) {
    std::map<std::vector<Int>, bool> candidates;
    for (const auto& k : level)
      for (std::size_t j = 0; j < n; ++j) {
        auto c = k;
        ++c[j];
        candidates.emplace(std::move(c), true);
      }
    std::vector<std::vector<Int>> next;
    for (const auto& [k, unused] : candidates) {
      (void)unused;
      Weight mu = weight_of(k);
      Weight s = lambda + mu + two_rho;
      Int den = 0;
      for (std::size_t j = 0; j < n; ++j)
        den = checked::add(den, checked::mul(checked::mul(k[j], rs.symmetrizers()[j]), s[j]));
      Int num = 0;
      for (std::size_t b = 0; b < rs.positive_roots().size(); ++b) {
        const Root& beta = rs.positive_roots()[b];
        std::vector<Int> kk = k;
        Weight shifted = mu;
        for (Int t = 1;; ++t) {
          bool inside = true;
          for (std::size_t j = 0; j < n; ++j) {
            kk[j] -= beta.coords[j];
            if (kk[j] < 0) inside = false;
          }
          if (!inside) break;
          shifted += beta_w[b];
          auto it = mult.find(kk);
          if (it == mult.end()) continue;
          num = checked::add(num, checked::mul(it->second, rs.form(shifted, beta)));
        }
      }
      num = checked::mul(2, num);
      if (num == 0) continue;
      if (den <= 0 || num % den != 0) throw Error(Errc::Internal, "Freudenthal recursion is not integral");
      mult[k] = num / den;
      next.push_back(k);
    }
    level = std::move(next);
  }

  Character ch;
  for (const auto& [k, m] : mult)
    if (m != 0) ch[weight_of(k)] = m;
  return ch;
}

/// D_i f = (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}), expanded as
/// geometric strings between mu and s_i mu.
inline Character demazure_operator(const RootSystem& rs, int i, const Character& f) {
  const Weight a = rs.simple_root_weight(i);
  Character out;
  auto bump = [&](const Weight& mu, Int c) {
    Int& slot = out[mu];
    slot = checked::add(slot, c);
    if (slot == 0) out.erase(mu);
  };
  for (const auto& [mu, c] : f) {
    Int k = mu[i];
    if (k >= 0) {
      Weight x = mu;
      for (Int t = 0; t <= k; ++t) {
        bump(x, c);
        x -= a;
      }
    } else if (k <= -2) {
      Weight x = mu;
      for (Int t = 1; t <= -k - 1; ++t) {
        x += a;
        bump(x, checked::neg(c));
      }
    }
  }
  return out;
}

/// Applies D_{w_1} ... D_{w_k} to e^lambda (the last letter acts first).
inline Character demazure_character_word(const RootSystem& rs, const Weight& lambda, const Word& word) {
  require_dominant(lambda);
  Character ch{{lambda, 1}};
  for (auto it = word.rbegin(); it != word.rend(); ++it) ch = demazure_operator(rs, *it, ch);
  return ch;
}

inline Character demazure_character(const RootSystem& rs, const Weight& lambda, WeylElement tau) {
  return demazure_character_word(rs, lambda, rs.word(tau));
}

}  // namespace lsp
