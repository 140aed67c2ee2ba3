#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sawstrip/error.hpp"
#include "sawstrip/serialize.hpp"

namespace sawstrip {
namespace {

using json::Json;

TEST(Serialize, Counts) {
  const auto j = json::counts_json(StripSpec(0, 1), testing::ints({1, 3, 6, 12, 20, 36}));
  EXPECT_EQ(j.dump(), R"({"strip":[0,1],"counts":["1","3","6","12","20","36"]})");
}

TEST(Serialize, RatFunAndPoly) {
  EXPECT_EQ(json::to_json(Poly{}).dump(), "[]");
  EXPECT_EQ(json::to_json(RatFun(Poly{1, 1}, Poly{1, -1})).dump(), R"({"num":["1","1"],"den":["1","-1"]})");
}

TEST(Serialize, WalkAndStrip) {
  EXPECT_EQ(json::to_json(realize(StepWord("urd"))).dump(), "[[0,0],[0,1],[1,1],[1,0]]");
  EXPECT_EQ(json::to_json(StripSpec(-2, 3)).dump(), "[-2,3]");
}

TEST(Serialize, Decomposition) {
  width2::GrammarDecomposition d{std::nullopt, {1, 2}, 3, 1};
  EXPECT_EQ(json::to_json(d).dump(), R"({"u":null,"l":[1,2],"i":3,"uprime":1})");
  width2::GrammarDecomposition e{0, {}, 0, std::nullopt};
  EXPECT_EQ(json::to_json(e).dump(), R"({"u":0,"l":[],"i":0,"uprime":null})");
}

TEST(Serialize, BoundReportExactEndpoints) {
  BoundReport r{StripSpec(0, 0), RatFun(Poly{1, 1}, Poly{1, -1}), {BigRat(1), BigRat(1)}, {BigRat(1), BigRat(1)}};
  EXPECT_EQ(json::to_json(r).dump(),
            R"({"strip":[0,0],"gf":{"num":["1","1"],"den":["1","-1"]},"rho":["1","1"],"mu":["1","1"]})");
}

TEST(Serialize, NonTerminatingEndpointsRoundOutward) {
  BoundReport r{StripSpec(0, 0), RatFun(1), {make_rat(1, 3), make_rat(2, 3)}, {make_rat(3, 2), make_rat(3, 1)}};
  const Json j = json::to_json(r);
  const std::string lo = j["rho"][0], hi = j["rho"][1];
  EXPECT_LT(parse_rational(lo), make_rat(1, 3));
  EXPECT_GT(parse_rational(hi), make_rat(2, 3));
  EXPECT_EQ(j["mu"][0], "1.5");
  EXPECT_EQ(j["mu"][1], "3");
}

TEST(Serialize, MuTableHasAnchorAndStatus) {
  MuTable t;
  t.entries.push_back(MuEntry{StripSpec(0, 2), std::nullopt, "unconjectured", "no fit"});
  EXPECT_EQ(json::to_json(t).dump(),
            R"({"anchor":[0,0],"reports":[{"strip":[0,2],"status":"unconjectured","reason":"no fit"}],"monotone":true})");
}

TEST(Serialize, Deterministic) {
  const auto a = json::to_json(width2::full_gf()).dump();
  const auto b = json::to_json(width2::full_gf()).dump();
  EXPECT_EQ(a, b);
}

TEST(Deserialize, RoundTrip) {
  const RatFun f = width2::full_gf();
  EXPECT_EQ(json::ratfun_from_json(json::to_json(f)), f);
  EXPECT_EQ(json::poly_from_json(Json::parse(R"(["1/2","-3"])")), Poly({make_rat(1, 2), BigRat(-3)}));
}

TEST(Deserialize, Rejects) {
  EXPECT_THROW(json::poly_from_json(Json::parse("[1,2]")), Error);
  EXPECT_THROW(json::ratfun_from_json(Json::parse(R"({"num":["1"]})")), Error);
  EXPECT_THROW(json::ratfun_from_json(Json::parse(R"({"num":["1"],"den":[]})")), Error);
}

}  // namespace
}  // namespace sawstrip
