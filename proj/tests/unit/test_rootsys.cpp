#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace lsp;

namespace {

RootSystemPtr type(const char* name) { return build_root_system(cartan_from_name(name)); }

}  // namespace

TEST(RootSystem, OrdersMatchMatrixGeneration) {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"}) {
    auto rs = type(name);
    EXPECT_EQ(rs->weyl_order(), oracle::weyl_group_by_matrices(*rs).size()) << name;
    EXPECT_EQ(rs->positive_roots().size(), rs->length(rs->longest())) << name;
  }
  EXPECT_EQ(type("A2")->weyl_order(), 6u);
  EXPECT_EQ(type("A2")->positive_roots().size(), 3u);
  EXPECT_EQ(type("A1")->weyl_order(), 2u);
  EXPECT_EQ(type("B2")->weyl_order(), 8u);
  EXPECT_EQ(type("G2")->weyl_order(), 12u);
  EXPECT_EQ(type("D4")->weyl_order(), 192u);
}

TEST(RootSystem, Symmetrizers) {
  auto g2 = type("G2");
  EXPECT_EQ(g2->symmetrizers(), (std::vector<Int>{1, 3}));
  EXPECT_EQ(g2->symmetrizer_lcm(), 3);
  for (const char* name : {"B2", "B3", "C3", "G2", "D4"}) {
    auto rs = type(name);
    const auto& d = rs->symmetrizers();
    for (std::size_t i = 0; i < rs->rank(); ++i)
      for (std::size_t j = 0; j < rs->rank(); ++j)
        EXPECT_EQ(rs->cartan()(i, j) * d[j], rs->cartan()(j, i) * d[i]) << name;
  }
}

TEST(RootSystem, MalformedAndInfinite) {
  auto code = [](const CartanMatrix& m) {
    try {
      build_root_system(m, 2000);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Internal;
  };
  EXPECT_EQ(code(CartanMatrix{{2, -1}, {0, 2}}), Errc::MalformedCartan);
  EXPECT_EQ(code(CartanMatrix{{3, -1}, {-1, 2}}), Errc::MalformedCartan);
  EXPECT_EQ(code(CartanMatrix{{2, 1}, {1, 2}}), Errc::MalformedCartan);
  EXPECT_EQ(code(CartanMatrix{{2, -2}, {-2, 2}}), Errc::NotFiniteType);
  EXPECT_EQ(code(CartanMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), Errc::NotFiniteType);
}

TEST(RootSystem, WeylAction) {
  auto rs = type("A2");
  EXPECT_EQ(weyl_act(*rs, rs->simple(0), Weight{2, 2}), (Weight{-2, 4}));
  EXPECT_EQ(weyl_act(*rs, rs->identity(), Weight{3, -1}), (Weight{3, -1}));
  EXPECT_EQ(weyl_act(*rs, rs->longest(), Weight{1, 0}), (Weight{0, -1}));
}

TEST(RootSystem, Pairing) {
  auto rs = type("A2");
  Root a1{{1, 0}}, a12{{1, 1}};
  EXPECT_EQ(pairing(*rs, Weight{1, 0}, a1), 1);
  EXPECT_EQ(pairing(*rs, Weight{1, 1}, a12), 2);
  EXPECT_EQ(pairing(*rs, Weight{0, 0}, a12), 0);
  // <w mu, (w beta)^vee> = <mu, beta^vee>
  for (const char* name : {"A3", "B2", "G2", "C3"}) {
    auto r = type(name);
    Weight mu(r->rank());
    for (std::size_t i = 0; i < r->rank(); ++i) mu[i] = static_cast<Int>(2 * i + 1) - 2;
    for (WeylElement w : r->elements())
      for (const Root& beta : r->positive_roots()) {
        auto wb = r->root_coordinates(r->act(w, r->root_weight(beta)));
        ASSERT_TRUE(wb.has_value());
        EXPECT_EQ(r->pairing(r->act(w, mu), Root{*wb}), r->pairing(mu, beta)) << name;
      }
  }
}

TEST(RootSystem, ReducedWords) {
  auto a2 = type("A2");
  auto w = reduced_words(*a2, a2->longest());
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(word_str(w[0]), "121");
  EXPECT_EQ(word_str(w[1]), "212");
  EXPECT_EQ(reduced_words(*a2, a2->identity()), std::vector<Word>{Word{}});
  auto a3 = type("A3");
  // 16 = standard Young tableaux of the staircase (3,2,1): 6!/(5*3*3)
  EXPECT_EQ(reduced_words(*a3, a3->longest()).size(), 16u);
  EXPECT_EQ(reduced_words(*type("B2"), type("B2")->longest()).size(), 2u);
}

TEST(RootSystem, WordIndependenceAndLengthSymmetry) {
  for (const char* name : {"A2", "A3", "B2", "G2", "B3"}) {
    auto rs = type(name);
    std::map<std::size_t, std::size_t> by_len;
    for (WeylElement w : rs->elements()) {
      ++by_len[rs->length(w)];
      for (const Word& rw : reduced_words(*rs, w)) {
        EXPECT_EQ(rs->from_word(rw), w);
        EXPECT_EQ(oracle::act_word(*rs, rw, rs->rho()), rs->act(w, rs->rho()));
      }
      for (std::size_t i = 0; i < rs->rank(); ++i) {
        auto l1 = rs->length(rs->right_mul(w, static_cast<int>(i)));
        EXPECT_TRUE(l1 + 1 == rs->length(w) || l1 == rs->length(w) + 1);
      }
      // canonical word is the lexicographically least reduced word
      EXPECT_EQ(rs->word(w), reduced_words(*rs, w).front());
    }
    const std::size_t n = rs->length(rs->longest());
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(by_len[k], by_len[n - k]) << name;
  }
}

TEST(Characters, FreudenthalMatchesWeylDimension) {
  for (const char* name : {"A1", "A2", "A3", "B2", "G2"}) {
    auto rs = type(name);
    for (const Weight& lam : oracle::dominant_up_to(rs->rank(), 4)) {
      auto ch = freudenthal_character(*rs, lam);
      EXPECT_EQ(character_total(ch), weyl_dimension(*rs, lam)) << name << " " << lam;
      // Weyl-group invariance of multiplicities
      for (const auto& [mu, m] : ch)
        for (std::size_t i = 0; i < rs->rank(); ++i) {
          auto it = ch.find(rs->reflect(static_cast<int>(i), mu));
          ASSERT_NE(it, ch.end());
          EXPECT_EQ(it->second, m);
        }
    }
  }
  auto a2 = type("A2");
  for (Int a = 0; a <= 4; ++a)
    for (Int b = 0; a + b <= 4; ++b) EXPECT_EQ(weyl_dimension(*a2, Weight{a, b}), oracle::dim_a2(a, b));
  auto ch = freudenthal_character(*a2, Weight{1, 0});
  EXPECT_EQ(ch.size(), 3u);
  for (const auto& [mu, m] : ch) EXPECT_EQ(m, 1);
  EXPECT_EQ(freudenthal_character(*a2, Weight{0, 0}), (Character{{Weight{0, 0}, 1}}));
  auto big = freudenthal_character(*a2, Weight{2, 2});
  EXPECT_EQ(character_total(big), 27);
  EXPECT_EQ(big.at(Weight{0, 0}), 3);
  EXPECT_THROW(freudenthal_character(*a2, Weight{-1, 0}), Error);
}

TEST(Characters, Demazure) {
  auto a2 = type("A2");
  EXPECT_EQ(demazure_character(*a2, Weight{1, 0}, a2->simple(0)),
            (Character{{Weight{1, 0}, 1}, {Weight{-1, 1}, 1}}));
  EXPECT_EQ(demazure_character(*a2, Weight{2, 1}, a2->identity()), (Character{{Weight{2, 1}, 1}}));
  for (const char* name : {"A2", "A3", "B2", "G2"}) {
    auto rs = type(name);
    for (const Weight& lam : oracle::dominant_up_to(rs->rank(), 3)) {
      EXPECT_EQ(demazure_character(*rs, lam, rs->longest()), freudenthal_character(*rs, lam));
      for (WeylElement w : rs->elements()) {
        auto base = demazure_character(*rs, lam, w);
        for (const Word& rw : reduced_words(*rs, w)) EXPECT_EQ(demazure_character_word(*rs, lam, rw), base);
      }
    }
  }
}

TEST(Rational, Basics) {
  Rational a(2, 4), b(-1, 3);
  EXPECT_EQ(a.str(), "1/2");
  EXPECT_EQ((a + b).str(), "1/6");
  EXPECT_EQ((a * b).str(), "-1/6");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
  EXPECT_THROW(checked::mul(Int{1} << 62, 4), Error);
  EXPECT_EQ(checked::binomial(4, 2), 6);
}
