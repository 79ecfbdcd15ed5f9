#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace lsp;

namespace {

RootSystemPtr type(const char* name) { return build_root_system(cartan_from_name(name)); }

WeylElement el(const RootSystem& rs, const char* w) { return rs.from_word(parse_word(w)); }

LSPath path(const RootSystem& rs, const Weight& lam, std::vector<const char*> chain, std::vector<Rational> a) {
  std::vector<WeylElement> ws;
  for (const char* c : chain) ws.push_back(el(rs, c));
  return validate_ls(rs, lam, ws, std::move(a));
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

}  // namespace

TEST(LSPath, Validate) {
  auto rs = type("A2");
  Weight lam{2, 2};
  LSPath pi1 = path(*rs, lam, {"21", "1"}, {Rational(1, 2)});
  EXPECT_EQ(pi1.chain.size(), 2u);
  EXPECT_TRUE(path(*rs, lam, {""}, {}).is_straight());
  try {
    path(*rs, Weight{1, 1}, {"121", ""}, {Rational(1, 3)});
    FAIL();
  } catch (const NotLSPathError& e) {
    EXPECT_EQ(e.segment(), 1u);
  }
  EXPECT_EQ(code_of([&] { path(*rs, lam, {"1", "21"}, {Rational(1, 2)}); }), Errc::ChainNotDecreasing);
  EXPECT_EQ(code_of([&] { path(*rs, lam, {"1", "2"}, {Rational(1, 2)}); }), Errc::ChainNotDecreasing);
  EXPECT_EQ(code_of([&] { path(*rs, lam, {"21", "1"}, {Rational(3, 2)}); }), Errc::BadTurningPoints);
  EXPECT_EQ(code_of([&] { path(*rs, lam, {"21", "1"}, {}); }), Errc::BadTurningPoints);
  EXPECT_EQ(code_of([&] { path(*rs, lam, {"121", "1", ""}, {Rational(1, 2), Rational(1, 2)}); }),
            Errc::BadTurningPoints);
  // cosets are reduced, so non-minimal representatives name the same path
  EXPECT_EQ(path(*rs, Weight{1, 0}, {"121"}, {}), path(*rs, Weight{1, 0}, {"21"}, {}));
}

TEST(LSPath, Weight) {
  auto rs = type("A2");
  EXPECT_EQ(path_weight(path(*rs, Weight{2, 2}, {"21", "1"}, {Rational(1, 2)})), (Weight{0, 0}));
  EXPECT_EQ(path_weight(straight_path(*rs, Weight{3, 1})), (Weight{3, 1}));
  EXPECT_EQ(path_weight(path(*rs, Weight{1, 0}, {"21"}, {})), (Weight{0, -1}));
}

TEST(LSPath, RootOperators) {
  auto rs = type("A2");
  auto s = straight_path(*rs, Weight{1, 0});
  auto f1 = root_op_f(*rs, s, 0);
  ASSERT_TRUE(f1);
  EXPECT_EQ(*f1, path(*rs, Weight{1, 0}, {"1"}, {}));
  EXPECT_FALSE(root_op_f(*rs, s, 1));
  for (int i = 0; i < 2; ++i) EXPECT_FALSE(root_op_e(*rs, straight_path(*rs, Weight{2, 2}), i));

  Weight lam{2, 2};
  LSPath pi1 = path(*rs, lam, {"21", "1"}, {Rational(1, 2)});
  LSPath pi3 = path(*rs, lam, {"12", "2"}, {Rational(1, 2)});
  // f_2 f_2 f_1 f_1 (rightmost first) reaches pi1; f_1 f_1 f_2 f_2 reaches pi3
  EXPECT_EQ(apply_f_string(*rs, straight_path(*rs, lam), {1, 0}, {2, 2}), pi1);
  EXPECT_EQ(apply_f_string(*rs, straight_path(*rs, lam), {0, 1}, {2, 2}), pi3);
}

TEST(LSPath, CrystalAxioms) {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    auto rs = type(name);
    for (const Weight& lam : oracle::dominant_up_to(rs->rank(), name[0] == 'A' && name[1] == '3' ? 2 : 3)) {
      for (const LSPath& p : enumerate_B(*rs, lam)) {
        for (std::size_t i = 0; i < rs->rank(); ++i) {
          int k = static_cast<int>(i);
          const Weight a = rs->simple_root_weight(k);
          if (auto q = root_op_f(*rs, p, k)) {
            EXPECT_EQ(root_op_e(*rs, *q, k), p);
            EXPECT_EQ(path_weight(*q), path_weight(p) - a);
          }
          if (auto q = root_op_e(*rs, p, k)) {
            EXPECT_EQ(root_op_f(*rs, *q, k), p);
            EXPECT_EQ(path_weight(*q), path_weight(p) + a);
          }
        }
      }
    }
  }
}

TEST(LSPath, Enumerate) {
  auto rs = type("A2");
  EXPECT_EQ(enumerate_B(*rs, Weight{1, 0}).size(), 3u);
  EXPECT_EQ(enumerate_B(*rs, Weight{0, 0}).size(), 1u);
  Weight lam{2, 2};
  auto b = enumerate_B(*rs, lam);
  EXPECT_EQ(b.size(), 27u);
  std::vector<LSPath> zero;
  for (const LSPath& p : b)
    if (path_weight(p).is_zero()) zero.push_back(p);
  ASSERT_EQ(zero.size(), 3u);
  // sorted by chain words: "12" < "121" < "21"
  EXPECT_EQ(zero[0], path(*rs, lam, {"12", "2"}, {Rational(1, 2)}));
  EXPECT_EQ(zero[1], path(*rs, lam, {"121", ""}, {Rational(1, 2)}));
  EXPECT_EQ(zero[2], path(*rs, lam, {"21", "1"}, {Rational(1, 2)}));
  EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
  EXPECT_THROW(enumerate_B(*rs, Weight{-1, 2}), Error);
}

TEST(LSPath, ClosureEqualsDirectEnumeration) {
  for (const char* name : {"A2", "B2"}) {
    auto rs = type(name);
    for (const Weight& lam : oracle::dominant_up_to(2, 2)) {
      auto b = enumerate_B(*rs, lam);
      auto direct = oracle::ls_paths_direct(*rs, lam);
      EXPECT_EQ(std::vector<LSPath>(direct.begin(), direct.end()), b) << name << " " << lam;
    }
  }
}

TEST(LSPath, CharacterIdentity) {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3"}) {
    auto rs = type(name);
    for (const Weight& lam : oracle::dominant_up_to(rs->rank(), 3)) {
      auto b = enumerate_B(*rs, lam);
      EXPECT_EQ(path_character(b), freudenthal_character(*rs, lam)) << name << " " << lam;
      for (WeylElement w : rs->elements())
        EXPECT_EQ(path_character(demazure_subset(*rs, lam, w, &b)), demazure_character(*rs, lam, w));
    }
  }
}

TEST(LSPath, DemazureSubset) {
  auto rs = type("A2");
  EXPECT_EQ(demazure_subset(*rs, Weight{1, 0}, el(*rs, "1")).size(), 2u);
  EXPECT_EQ(demazure_subset(*rs, Weight{2, 1}, rs->identity()).size(), 1u);
  EXPECT_EQ(demazure_subset(*rs, Weight{2, 1}, rs->longest()), enumerate_B(*rs, Weight{2, 1}));
}

TEST(LSPath, Strings) {
  auto rs = type("A2");
  Weight lam{2, 2};
  LSPath pi1 = path(*rs, lam, {"21", "1"}, {Rational(1, 2)});
  LSPath pi3 = path(*rs, lam, {"12", "2"}, {Rational(1, 2)});
  EXPECT_EQ(crystal_string(*rs, straight_path(*rs, lam), {0, 1, 0}), (std::vector<Int>{0, 0, 0}));
  EXPECT_EQ(crystal_string(*rs, pi1, {1, 0, 1}), (std::vector<Int>{2, 2, 0}));
  EXPECT_EQ(crystal_string(*rs, pi3, {0, 1, 0}), (std::vector<Int>{2, 2, 0}));
  EXPECT_EQ(crystal_string(*rs, pi1, {0, 1, 0}), (std::vector<Int>{0, 2, 2}));
  EXPECT_EQ(code_of([&] { crystal_string(*rs, path(*rs, Weight{1, 0}, {"21"}, {}), {0}); }), Errc::StringIncomplete);
  // strings along a reduced word of w0 reconstruct the path
  for (const LSPath& p : enumerate_B(*rs, Weight{2, 3}))
    for (const Word& w : {Word{0, 1, 0}, Word{1, 0, 1}})
      EXPECT_EQ(apply_f_string(*rs, straight_path(*rs, p.lambda), w, crystal_string(*rs, p, w)), p);
}

TEST(LSPath, SlFourExample) {
  auto rs = type("A3");
  Weight lam{1, 0, 1};
  LSPath p = path(*rs, lam, {"231", "31"}, {Rational(1, 2)});
  EXPECT_EQ(apply_f_string(*rs, straight_path(*rs, lam), {1, 0, 2}, {1, 1, 1}), p);
  EXPECT_EQ(crystal_string(*rs, p, {1, 0, 2, 1, 0, 1}), (std::vector<Int>{1, 1, 1, 0, 0, 0}));
}
