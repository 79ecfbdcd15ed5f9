#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsp/checked.hpp"
#include "lsp/error.hpp"
#include "lsp/rational.hpp"
#include "lsp/weight.hpp"

namespace lsp {

/// Word in the simple reflections; letters are 0-based generator indices.
using Word = std::vector<int>;

/// Renders a word as 1-based digits ("121"); the identity is "".
inline std::string word_str(const Word& w) {
  std::string s;
  for (int i : w) s += std::to_string(i + 1);
  return s;
}

inline Word parse_word(std::string_view s) {
  Word w;
  for (char ch : s) {
    if (ch < '1' || ch > '9') throw Error(Errc::Parse, "bad word '" + std::string(s) + "'");
    w.push_back(ch - '1');
  }
  return w;
}

/// Cartan matrix with entries a_ij = <alpha_i, alpha_j^vee>, so row i holds
/// alpha_i in fundamental-weight coordinates.
struct CartanMatrix {
  std::size_t n = 0;
  std::vector<Int> entries;

  CartanMatrix() = default;
  CartanMatrix(std::size_t rank, std::vector<Int> e) : n(rank), entries(std::move(e)) {}
  CartanMatrix(std::initializer_list<std::initializer_list<Int>> rows) : n(rows.size()) {
    for (auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
  }

  Int operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;
};

/// Named finite types in Bourbaki numbering.
inline CartanMatrix cartan_from_name(std::string_view name) {
  auto type_a = [](std::size_t n) {
    std::vector<Int> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      e[i * n + i] = 2;
      if (i + 1 < n) e[i * n + i + 1] = e[(i + 1) * n + i] = -1;
    }
    return CartanMatrix(n, e);
  };
  if (name == "A1") return type_a(1);
  if (name == "A2") return type_a(2);
  if (name == "A3") return type_a(3);
  if (name == "A4") return type_a(4);
  if (name == "B2") return CartanMatrix{{2, -2}, {-1, 2}};
  if (name == "B3") return CartanMatrix{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
  if (name == "C3") return CartanMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
  if (name == "D4") return CartanMatrix{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  if (name == "G2") return CartanMatrix{{2, -1}, {-3, 2}};
  throw Error(Errc::Parse, "unknown Cartan type '" + std::string(name) + "'");
}

/// Element of the Weyl group. Ids are assigned in lexicographic order of the
/// canonical (shortlex-minimal) reduced words, so comparing ids compares words.
struct WeylElement {
  std::uint32_t id = 0;
  friend bool operator==(WeylElement, WeylElement) = default;
  friend auto operator<=>(WeylElement, WeylElement) = default;
};

inline constexpr std::size_t kDefaultWeylCap = 50000;

class RootSystem {
 public:
  RootSystem(const RootSystem&) = delete;
  RootSystem& operator=(const RootSystem&) = delete;

  /// Validates the matrix and eagerly generates W. Throws MalformedCartan or
  /// NotFiniteType.
  static std::shared_ptr<const RootSystem> build(const CartanMatrix& cartan, std::size_t cap = kDefaultWeylCap) {
    return std::shared_ptr<const RootSystem>(new RootSystem(cartan, cap));
  }

  std::size_t rank() const noexcept { return n_; }
  const CartanMatrix& cartan() const noexcept { return cartan_; }
  const std::vector<Int>& symmetrizers() const noexcept { return d_; }
  Int symmetrizer_lcm() const noexcept { return d_lcm_; }
  const std::vector<Root>& positive_roots() const noexcept { return pos_roots_; }
  std::size_t weyl_order() const noexcept { return words_.size(); }

  WeylElement identity() const noexcept { return identity_; }
  WeylElement longest() const noexcept { return longest_; }
  WeylElement simple(int i) const { return left_mul(i, identity_); }

  std::vector<WeylElement> elements() const {
    std::vector<WeylElement> v(words_.size());
    for (std::uint32_t k = 0; k < v.size(); ++k) v[k] = WeylElement{k};
    return v;
  }

  const Word& word(WeylElement w) const { return words_.at(w.id); }
  std::size_t length(WeylElement w) const { return words_.at(w.id).size(); }

  WeylElement left_mul(int i, WeylElement w) const { return WeylElement{left_[i][w.id]}; }
  WeylElement right_mul(WeylElement w, int i) const { return WeylElement{right_[w.id][i]}; }
  bool is_left_descent(int i, WeylElement w) const { return length(left_mul(i, w)) < length(w); }
  bool is_right_descent(WeylElement w, int i) const { return length(right_mul(w, i)) < length(w); }

  /// Product s_{w_1} ... s_{w_k}; the word need not be reduced.
  WeylElement from_word(const Word& word) const {
    std::uint32_t x = identity_.id;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (*it < 0 || static_cast<std::size_t>(*it) >= n_)
        throw Error(Errc::Parse, "generator index out of range");
      x = left_[*it][x];
    }
    return WeylElement{x};
  }
  bool is_reduced(const Word& word) const { return length(from_word(word)) == word.size(); }

  WeylElement mul(WeylElement u, WeylElement v) const {
    const Word& wu = word(u);
    std::uint32_t x = v.id;
    for (auto it = wu.rbegin(); it != wu.rend(); ++it) x = left_[*it][x];
    return WeylElement{x};
  }
  WeylElement inverse(WeylElement w) const { return WeylElement{inverse_[w.id]}; }

  /// alpha_i in fundamental-weight coordinates.
  Weight simple_root_weight(int i) const {
    Weight a(n_);
    for (std::size_t j = 0; j < n_; ++j) a[j] = cartan_(i, j);
    return a;
  }
  Weight fundamental(int i) const {
    Weight w(n_);
    w[i] = 1;
    return w;
  }
  Weight rho() const { return Weight(std::vector<Int>(n_, 1)); }

  /// s_i(mu) = mu - <mu, alpha_i^vee> alpha_i.
  Weight reflect(int i, Weight mu) const {
    Int k = mu[i];
    if (k != 0)
      for (std::size_t j = 0; j < n_; ++j) mu[j] = checked::sub(mu[j], checked::mul(k, cartan_(i, j)));
    return mu;
  }

  Weight act(WeylElement w, Weight mu) const {
    const Word& wd = word(w);
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) mu = reflect(*it, std::move(mu));
    return mu;
  }

  /// A root written in fundamental-weight coordinates.
  Weight root_weight(const Root& beta) const {
    Weight r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (beta.coords[i] != 0)
        for (std::size_t j = 0; j < n_; ++j)
          r[j] = checked::add(r[j], checked::mul(beta.coords[i], cartan_(i, j)));
    return r;
  }

  /// Invariant form (mu, beta) for mu in fundamental and beta in simple-root
  /// coordinates, normalized so that (alpha_i, alpha_i) = 2 d_i.
  Int form(const Weight& mu, const Root& beta) const {
    Int s = 0;
    for (std::size_t j = 0; j < n_; ++j)
      s = checked::add(s, checked::mul(checked::mul(beta.coords[j], d_[j]), mu[j]));
    return s;
  }
  Int root_norm(const Root& beta) const {  // (beta, beta)
    return form(root_weight(beta), beta);
  }

  /// <mu, beta^vee>, exact.
  Int pairing(const Weight& mu, const Root& beta) const {
    Int num = checked::mul(2, form(mu, beta));
    Int den = root_norm(beta);
    if (den <= 0 || num % den != 0) throw Error(Errc::Internal, "non-integral coroot pairing");
    return num / den;
  }

  /// s_beta(mu) = mu - <mu, beta^vee> beta.
  Weight reflect_root(const Root& beta, const Weight& mu) const {
    Int k = pairing(mu, beta);
    if (k == 0) return mu;
    return mu - k * root_weight(beta);
  }

  /// Simple-root coordinates of mu, if mu lies in the root lattice.
  std::optional<std::vector<Int>> root_coordinates(const Weight& mu) const {
    // mu = A^T c; solve by exact elimination.
    std::vector<std::vector<Rational>> m(n_, std::vector<Rational>(n_ + 1));
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t i = 0; i < n_; ++i) m[j][i] = Rational(cartan_(i, j));
      m[j][n_] = Rational(mu[j]);
    }
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t piv = col;
      while (m[piv][col].is_zero()) ++piv;
      std::swap(m[piv], m[col]);
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == col || m[r][col].is_zero()) continue;
        Rational f = m[r][col] / m[col][col];
        for (std::size_t k = col; k <= n_; ++k) m[r][k] -= f * m[col][k];
      }
    }
    std::vector<Int> c(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Rational v = m[i][n_] / m[i][i];
      if (!v.is_integer()) return std::nullopt;
      c[i] = v.num();
    }
    return c;
  }

  /// Bruhat order via the subword property applied to the canonical word of v.
  bool bruhat_leq(WeylElement u, WeylElement v) const {
    if (!lower_.empty()) return (lower_[v.id][u.id / 64] >> (u.id % 64)) & 1U;
    if (length(u) > length(v)) return false;
    return lower_interval(v)[u.id] != 0;
  }

  /// Elements of the standard parabolic subgroup generated by {s_i : mask bit i}.
  std::shared_ptr<const std::vector<WeylElement>> parabolic_subgroup(std::uint64_t mask) const {
    std::lock_guard lock(cache_mutex_);
    auto it = parabolic_cache_.find(mask);
    if (it != parabolic_cache_.end()) return it->second;
    std::vector<char> seen(words_.size(), 0);
    std::vector<WeylElement> out{identity_};
    seen[identity_.id] = 1;
    for (std::size_t k = 0; k < out.size(); ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if ((mask >> i) & 1U) {
          WeylElement y = right_mul(out[k], static_cast<int>(i));
          if (!seen[y.id]) {
            seen[y.id] = 1;
            out.push_back(y);
          }
        }
    std::sort(out.begin(), out.end());
    auto ptr = std::make_shared<const std::vector<WeylElement>>(std::move(out));
    parabolic_cache_.emplace(mask, ptr);
    return ptr;
  }

 private:
  RootSystem(const CartanMatrix& cartan, std::size_t cap) : n_(cartan.n), cartan_(cartan) {
    validate();
    compute_symmetrizers();
    generate_group(cap);
    generate_roots();
    if (words_.size() <= kBruhatTableLimit) build_bruhat_table();
  }

  static constexpr std::size_t kBruhatTableLimit = 4096;

  void validate() const {
    if (n_ == 0 || cartan_.entries.size() != n_ * n_)
      throw Error(Errc::MalformedCartan, "matrix must be square and nonempty");
    if (n_ > 64) throw Error(Errc::MalformedCartan, "rank above 64 unsupported");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        Int a = cartan_(i, j);
        if (i == j && a != 2) throw Error(Errc::MalformedCartan, "diagonal entries must be 2");
        if (i != j && a > 0) throw Error(Errc::MalformedCartan, "off-diagonal entries must be <= 0");
        if (i != j && (a == 0) != (cartan_(j, i) == 0))
          throw Error(Errc::MalformedCartan, "a_ij = 0 must imply a_ji = 0");
      }
  }

  // Minimal positive integers with a_ij d_j = a_ji d_i.
  void compute_symmetrizers() {
    std::vector<Rational> q(n_, Rational(0));
    std::vector<int> comp(n_, -1);
    int ncomp = 0;
    for (std::size_t root = 0; root < n_; ++root) {
      if (comp[root] >= 0) continue;
      q[root] = Rational(1);
      comp[root] = ncomp;
      std::vector<std::size_t> stack{root};
      while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n_; ++j) {
          if (i == j || cartan_(i, j) == 0) continue;
          Rational dj = q[i] * Rational(cartan_(j, i), cartan_(i, j));
          if (comp[j] < 0) {
            comp[j] = ncomp;
            q[j] = dj;
            stack.push_back(j);
          } else if (q[j] != dj) {
            throw Error(Errc::MalformedCartan, "matrix is not symmetrizable");
          }
        }
      }
      ++ncomp;
    }
    d_.assign(n_, 0);
    for (int c = 0; c < ncomp; ++c) {
      Int l = 1;
      for (std::size_t i = 0; i < n_; ++i)
        if (comp[i] == c) l = checked::lcm(l, q[i].den());
      Int g = 0;
      for (std::size_t i = 0; i < n_; ++i)
        if (comp[i] == c) {
          d_[i] = (q[i] * Rational(l)).num();
          g = std::gcd(g, d_[i]);
        }
      for (std::size_t i = 0; i < n_; ++i)
        if (comp[i] == c) d_[i] /= g;
    }
    d_lcm_ = 1;
    for (Int x : d_) d_lcm_ = checked::lcm(d_lcm_, x);
  }

  // Breadth-first orbit of rho under left multiplication; rho is regular so
  // its orbit is in bijection with W.
  void generate_group(std::size_t cap) {
    std::map<std::vector<Int>, std::uint32_t> index;
    std::vector<Weight> images{rho()};
    std::vector<std::uint32_t> len{0};
    index.emplace(rho().coords(), 0);
    std::vector<std::vector<std::uint32_t>> left(n_);
    for (std::size_t k = 0; k < images.size(); ++k) {
      for (std::size_t i = 0; i < n_; ++i) {
        Weight y = reflect(static_cast<int>(i), images[k]);
        auto [it, inserted] = index.emplace(y.coords(), static_cast<std::uint32_t>(images.size()));
        if (inserted) {
          if (images.size() >= cap)
            throw Error(Errc::NotFiniteType, "Weyl group exceeds cap of " + std::to_string(cap) + " elements");
          images.push_back(y);
          len.push_back(len[k] + 1);
        }
        left[i].resize(images.size());
        left[i][k] = it->second;
      }
    }
    const std::size_t order = images.size();
    for (auto& row : left) row.resize(order);

    // Canonical word: smallest left descent followed by the canonical word of
    // s_i w. BFS order is length order, so s_i w is done before w.
    std::vector<Word> words(order);
    for (std::size_t k = 1; k < order; ++k) {
      int first = -1;
      for (std::size_t i = 0; i < n_; ++i)
        if (images[k][i] < 0) {
          first = static_cast<int>(i);
          break;
        }
      const Word& rest = words[left[first][k]];
      words[k].reserve(rest.size() + 1);
      words[k].push_back(first);
      words[k].insert(words[k].end(), rest.begin(), rest.end());
      if (words[k].size() != len[k]) throw Error(Errc::Internal, "canonical word length mismatch");
    }

    std::vector<std::uint32_t> perm(order);  // perm[new] = old
    std::iota(perm.begin(), perm.end(), 0U);
    std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return words[a] < words[b]; });
    std::vector<std::uint32_t> inv(order);
    for (std::uint32_t k = 0; k < order; ++k) inv[perm[k]] = k;

    words_.resize(order);
    left_.assign(n_, std::vector<std::uint32_t>(order));
    for (std::uint32_t k = 0; k < order; ++k) {
      words_[k] = std::move(words[perm[k]]);
      for (std::size_t i = 0; i < n_; ++i) left_[i][k] = inv[left[i][perm[k]]];
    }
    identity_ = WeylElement{inv[0]};
    right_.assign(order, std::vector<std::uint32_t>(n_));
    inverse_.assign(order, 0);
    std::size_t best = 0;
    for (std::uint32_t k = 0; k < order; ++k) {
      Word w = words_[k];
      for (std::size_t i = 0; i < n_; ++i) {
        w.push_back(static_cast<int>(i));
        right_[k][i] = from_word(w).id;
        w.pop_back();
      }
      Word r(words_[k].rbegin(), words_[k].rend());
      inverse_[k] = from_word(r).id;
      if (words_[k].size() >= best) {
        best = words_[k].size();
        longest_ = WeylElement{k};
      }
    }
  }

  void generate_roots() {
    std::vector<Root> all;
    std::map<std::vector<Int>, bool> seen;
    for (std::size_t i = 0; i < n_; ++i) {
      Root a{std::vector<Int>(n_, 0)};
      a.coords[i] = 1;
      if (seen.emplace(a.coords, true).second) all.push_back(a);
    }
    for (std::size_t k = 0; k < all.size(); ++k) {
      for (std::size_t j = 0; j < n_; ++j) {
        Int p = 0;  // <beta, alpha_j^vee>
        for (std::size_t i = 0; i < n_; ++i) p = checked::add(p, checked::mul(all[k].coords[i], cartan_(i, j)));
        if (p == 0) continue;
        Root r = all[k];
        r.coords[j] = checked::sub(r.coords[j], p);
        if (seen.emplace(r.coords, true).second) all.push_back(r);
      }
      if (all.size() > 2 * words_.size()) throw Error(Errc::NotFiniteType, "root system is infinite");
    }
    for (auto& r : all) {
      bool pos = r.is_positive();
      bool neg = std::all_of(r.coords.begin(), r.coords.end(), [](Int x) { return x <= 0; });
      if (!pos && !neg) throw Error(Errc::Internal, "root with mixed signs");
      if (pos) pos_roots_.push_back(r);
    }
    std::sort(pos_roots_.begin(), pos_roots_.end(), [](const Root& a, const Root& b) {
      Int ha = std::accumulate(a.coords.begin(), a.coords.end(), Int{0});
      Int hb = std::accumulate(b.coords.begin(), b.coords.end(), Int{0});
      return ha != hb ? ha < hb : a.coords > b.coords;
    });
    // |Phi^+| = number of reflections = length of w0.
    if (pos_roots_.size() != length(longest_))
      throw Error(Errc::Internal, "positive root count disagrees with l(w0)");
  }

  // Lower Bruhat intervals: [e, w] = [e, ws] u [e, ws]s for a right descent s.
  void build_bruhat_table() {
    const std::size_t order = words_.size();
    const std::size_t blocks = (order + 63) / 64;
    lower_.assign(order, std::vector<std::uint64_t>(blocks, 0));
    std::vector<std::uint32_t> by_len(order);
    std::iota(by_len.begin(), by_len.end(), 0U);
    std::stable_sort(by_len.begin(), by_len.end(),
                     [&](auto a, auto b) { return words_[a].size() < words_[b].size(); });
    for (std::uint32_t w : by_len) {
      auto& bits = lower_[w];
      bits[w / 64] |= std::uint64_t{1} << (w % 64);
      if (words_[w].empty()) continue;
      int s = words_[w].back();
      std::uint32_t ws = right_[w][s];
      const auto& prev = lower_[ws];
      for (std::size_t b = 0; b < blocks; ++b) {
        std::uint64_t word = prev[b];
        bits[b] |= word;
        while (word) {
          int bit = __builtin_ctzll(word);
          word &= word - 1;
          std::uint32_t x = static_cast<std::uint32_t>(b * 64 + bit);
          std::uint32_t xs = right_[x][s];
          bits[xs / 64] |= std::uint64_t{1} << (xs % 64);
        }
      }
    }
  }

  std::vector<char> lower_interval(WeylElement v) const {
    std::vector<char> in(words_.size(), 0);
    in[identity_.id] = 1;
    for (int s : words_[v.id]) {
      std::vector<char> next = in;
      for (std::size_t x = 0; x < in.size(); ++x)
        if (in[x]) next[right_[x][s]] = 1;
      in.swap(next);
    }
    return in;
  }

  std::size_t n_;
  CartanMatrix cartan_;
  std::vector<Int> d_;
  Int d_lcm_ = 1;
  std::vector<Word> words_;
  std::vector<std::vector<std::uint32_t>> left_;   // left_[i][w] = s_i w
  std::vector<std::vector<std::uint32_t>> right_;  // right_[w][i] = w s_i
  std::vector<std::uint32_t> inverse_;
  WeylElement identity_{};
  WeylElement longest_{};
  std::vector<Root> pos_roots_;
  std::vector<std::vector<std::uint64_t>> lower_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::uint64_t, std::shared_ptr<const std::vector<WeylElement>>> parabolic_cache_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystemPtr build_root_system(const CartanMatrix& cartan, std::size_t cap = kDefaultWeylCap) {
  return RootSystem::build(cartan, cap);
}

inline Weight weyl_act(const RootSystem& rs, WeylElement w, const Weight& mu) { return rs.act(w, mu); }

inline Int pairing(const RootSystem& rs, const Weight& mu, const Root& beta) { return rs.pairing(mu, beta); }

/// All reduced words of w, sorted lexicographically.
inline std::vector<Word> reduced_words(const RootSystem& rs, WeylElement w) {
  std::map<std::uint32_t, std::vector<Word>> memo;
  auto rec = [&](auto&& self, WeylElement x) -> const std::vector<Word>& {
    auto it = memo.find(x.id);
    if (it != memo.end()) return it->second;
    std::vector<Word> out;
    if (rs.length(x) == 0) {
      out.push_back({});
    } else {
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        int s = static_cast<int>(i);
        if (!rs.is_left_descent(s, x)) continue;
        for (const Word& tail : self(self, rs.left_mul(s, x))) {
          Word w{s};
          w.insert(w.end(), tail.begin(), tail.end());
          out.push_back(std::move(w));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return memo.emplace(x.id, std::move(out)).first->second;
  };
  return rec(rec, w);
}

}  // namespace lsp
