#include <gtest/gtest.h>

#include <random>

#include "lsp/io.hpp"
#include "oracles.hpp"

using namespace lsp;
using io::json;

namespace {

RootSystemPtr type(const char* n) { return build_root_system(cartan_from_name(n)); }

}  // namespace

TEST(Io, CartanForms) {
  EXPECT_EQ(io::parse_cartan("G2"), cartan_from_name("G2"));
  EXPECT_EQ(io::parse_cartan("2,-1; -3,2"), cartan_from_name("G2"));
  EXPECT_EQ(io::parse_cartan("[[2,-1],[-3,2]]"), cartan_from_name("G2"));
  EXPECT_EQ(io::parse_cartan(io::cartan_to_json(cartan_from_name("B3")).dump()), cartan_from_name("B3"));
  try {
    io::parse_cartan("2,-1;-1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MalformedCartan);
  }
  EXPECT_THROW(io::parse_cartan("E9"), Error);
  EXPECT_THROW(io::parse_cartan("2,x;-1,2"), Error);
}

TEST(Io, WeightsAndShapes) {
  EXPECT_EQ(io::parse_weight(" 2, -1", 2), (Weight{2, -1}));
  EXPECT_THROW(io::parse_weight("1,0,0", 2), Error);
  EXPECT_THROW(io::parse_weight("1,", 2), Error);
  EXPECT_EQ(io::parse_shapes("1,0:0,1", 2), (ShapeVector{Weight{1, 0}, Weight{0, 1}}));
  EXPECT_THROW(io::parse_shapes("1,0::0,1", 2), Error);
}

TEST(Io, PathRoundTrip) {
  for (const char* t : {"A2", "B2", "G2", "A3"}) {
    auto rs = type(t);
    for (const Weight& lam : oracle::dominant_up_to(rs->rank(), 2))
      for (const LSPath& p : enumerate_B(*rs, lam)) {
        const json j = io::path_to_json(*rs, p);
        EXPECT_EQ(io::path_from_json(*rs, json::parse(j.dump())), p);
        json bare = j;
        bare.erase("lambda");
        EXPECT_EQ(io::path_from_json(*rs, bare, lam), p);
      }
  }
}

TEST(Io, PathInput) {
  auto rs = type("A2");
  const LSPath pi2 = io::path_from_json(*rs, json::parse(R"({"lambda":[2,2],"chain":["121",""],"a":["1/2"]})"));
  // any word for the element is accepted; output uses the canonical one
  const LSPath same = io::path_from_json(*rs, json::parse(R"({"lambda":[2,2],"chain":["212",""],"a":["2/4"]})"));
  EXPECT_EQ(same, pi2);
  EXPECT_EQ(io::path_to_json(*rs, same).dump(), R"({"a":["1/2"],"chain":["121",""],"lambda":[2,2]})");
  EXPECT_EQ(io::path_str(*rs, pi2), "(121, id; 1/2)");

  auto code = [&](const char* text, std::optional<Weight> lam = {}) {
    try {
      io::path_from_json(*rs, json::parse(text), lam);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Internal;
  };
  EXPECT_EQ(code(R"({"chain":["121",""],"a":["1/2"]})"), Errc::Parse);
  EXPECT_EQ(code(R"({"lambda":[1,1],"chain":["121"],"x":1})"), Errc::Parse);
  EXPECT_EQ(code(R"({"lambda":[1,1],"chain":["13"]})"), Errc::Parse);
  EXPECT_EQ(code(R"({"lambda":[1,1],"chain":["121",""],"a":[0.5]})"), Errc::Parse);
  EXPECT_EQ(code(R"({"lambda":[1,1],"chain":["121",""],"a":["1/3"]})"), Errc::NotLSPath);
  EXPECT_EQ(code(R"({"lambda":[1,1],"chain":[""]})", Weight{2, 2}), Errc::LambdaMismatch);
  EXPECT_EQ(code(R"({"lambda":[1,-1],"chain":[""]})"), Errc::NotDominant);
}

TEST(Io, TuplesChainsCertificates) {
  auto rs = type("A2");
  const ShapeVector shapes{Weight{1, 0}, Weight{0, 1}, Weight{1, 0}};
  for (const PathTuple& t : standard_tuples(*rs, shapes)) {
    const json j = io::tuple_to_json(*rs, t);
    EXPECT_EQ(io::tuple_from_json(*rs, json::parse(j.dump())), t);
    EXPECT_EQ(io::tuple_from_json(*rs, j, &shapes), t);
    const auto dc = find_defining_chain(*rs, t);
    ASSERT_TRUE(dc);
    EXPECT_EQ(io::chain_to_json(*rs, *dc).size(), t.size());
    if (auto cert = exists_compatible_word(*rs, t)) {
      const auto back = io::certificate_from_json(*rs, json::parse(io::certificate_to_json(*rs, *cert).dump()));
      EXPECT_EQ(back.word, cert->word);
      EXPECT_EQ(back.chain, cert->chain);
    }
  }
  EXPECT_THROW(io::certificate_from_json(*rs, json::parse(R"({"word":"12"})")), Error);
}

TEST(Io, Polynomials) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<Int> ex(0, 3), co(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    a2::A2Poly p;
    for (int k = 0; k < 4; ++k) p.add_raw({ex(rng), ex(rng), ex(rng), ex(rng)}, co(rng));
    p = p.normalized();
    EXPECT_EQ(io::poly_from_json(json::parse(io::poly_to_json(p).dump())), p);
  }
  EXPECT_EQ(io::poly_to_json(a2::A2Poly()).dump(), R"({"terms":[]})");
  // non-normal input is normalized on the way in
  EXPECT_EQ(io::poly_from_json(json::parse(R"({"terms":[{"e":[1,1,0,0],"c":1}]})")).str(), "c + d");
  EXPECT_THROW(io::poly_from_json(json::parse(R"({"terms":[{"e":[1,1,0],"c":1}]})")), Error);
  EXPECT_THROW(io::poly_from_json(json::parse(R"({"terms":[{"e":[-1,0,0,0],"c":1}]})")), Error);
}

TEST(Io, TransitionRows) {
  auto rs = type("A2");
  for (Int m = 1; m <= 3; ++m)
    for (const auto& row : a2::transition_matrix(*rs, m))
      EXPECT_EQ(io::transition_row_from_json(*rs, json::parse(io::transition_row_to_json(*rs, row).dump())), row);
}
