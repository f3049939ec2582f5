#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shintani/json_io.hpp"

using namespace shintani;

TEST(Json, RationalsAsStrings) {
  EXPECT_EQ(to_json(Rational(-3, 4)), json("-3/4"));
  EXPECT_EQ(to_json(Rational(5)), json("5"));
  EXPECT_EQ(rational_from_json(json("6/8")), Rational(3, 4));
  EXPECT_EQ(rational_from_json(json(7)), Rational(7));
  EXPECT_THROW(rational_from_json(json::array()), std::exception);
}

TEST(Json, MatricesAreRowArrays) {
  QMatrix m = QMatrix::from_rows({{1, Rational(1, 2)}, {-3, 0}});
  json j = to_json(m);
  EXPECT_EQ(j, json::parse(R"([["1","1/2"],["-3","0"]])"));
  EXPECT_EQ(qmatrix_from_json(j), m);
  EXPECT_EQ(qmatrices_from_json(j).size(), 1u);
  EXPECT_EQ(qmatrices_from_json(json::array({j, j})).size(), 2u);
  EXPECT_THROW(qmatrix_from_json(json::parse(R"([["1","2"],["3"]])")), std::exception);
}

TEST(Json, CycNumRoundTrip) {
  CycNum x = CycNum::root_of_unity(Rational(1, 5)) * Rational(2, 3) + CycNum(Rational(-1, 7));
  json j = to_json(x);
  EXPECT_TRUE(j.contains("conductor"));
  EXPECT_TRUE(j.contains("coefficients"));
  EXPECT_EQ(cycnum_from_json(j), x);
  EXPECT_EQ(cycnum_from_json(json("1/2")), CycNum(Rational(1, 2)));
}

TEST(Json, TestFunctionRoundTrip) {
  TestFunction f = TestFunction::indicator({Rational(1, 3), 0}, 2) +
                   CycNum::root_of_unity(Rational(1, 4)) * TestFunction::indicator({0, Rational(1, 2)}, 1);
  json j = to_json(f);
  for (const char* k : {"n", "h", "g", "values"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_TRUE(j["values"][0].contains("point"));
  EXPECT_TRUE(j["values"][0].contains("cycnum"));
  EXPECT_EQ(testfunction_from_json(j), f);
}

TEST(Json, CosetSumsNormalize) {
  json j = json::parse(R"({"terms":[{"coeff":"1","base":["1/2"],"moduli":["3"]},
                                     {"coeff":"1","base":["3/2"],"moduli":["3"]},
                                     {"coeff":"1","base":["5/2"],"moduli":["3"]}]})");
  EXPECT_EQ(testfunction_from_json(j), TestFunction::indicator({Rational(1, 2)}, 1));
}

TEST(Json, Shorthand) {
  EXPECT_EQ(parse_testfunction("chi Z"), TestFunction::indicator({0}, 1));
  EXPECT_EQ(parse_testfunction("chi 1/3+2Z"), TestFunction::indicator({Rational(1, 3)}, 2));
  EXPECT_EQ(parse_testfunction("chi (1/2,0)+Z^2"), TestFunction::indicator({Rational(1, 2), 0}, 1));
  EXPECT_THROW(parse_testfunction("{not json"), std::exception);
  EXPECT_THROW(parse_testfunction("chi 1/0+Z"), std::exception);
}

TEST(Json, SeriesTermsInGradedOrder) {
  MultiSeries s = exp_affine(0, {1, 2}, 3);
  json j = to_json(s);
  EXPECT_EQ(j["n"], 2);
  std::vector<Exponent> seen;
  for (const auto& t : j["terms"]) seen.push_back(t["exponent"].get<Exponent>());
  const auto& b = MonomialBasis::get(2, 3);
  ASSERT_EQ(seen.size(), static_cast<size_t>(b.size()));
  for (int i = 0; i < b.size(); ++i) EXPECT_EQ(seen[i], b.exponent(i));
  auto [form, t] = canonical_linform({1, 1});
  json fj = to_json(FormalFraction(s, {form}));
  EXPECT_EQ(fj["denominators"].size(), 1u);
}

TEST(Json, ChainShape) {
  KChain c = {{2, {one_minus_unit(TrigParam::make(Rational(1, 3), {1})) * eps_unit(TrigParam::make(0, {2}), -1)}}};
  json j = to_json(c);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["coeff"], json("2"));
  const json& u = j[0]["symbol"][0];
  EXPECT_EQ(u["sign"], 1);
  EXPECT_EQ(u["one_minus"][0]["r"], json("1/3"));
  EXPECT_EQ(u["eps"][0]["exp"], -1);
  EXPECT_EQ(u["eps"][0]["lambda"], json::parse(R"(["2"])"));
}

TEST(Json, EpsPolyShape) {
  EpsPoly p = EpsPoly::monomial(2, 1, 3, Rational(-2, 5)) + EpsPoly::constant(2, 1);
  json j = to_json(p);
  ASSERT_EQ(j["terms"].size(), 2u);
  for (const auto& t : j["terms"]) {
    EXPECT_TRUE(t.contains("exponents"));
    EXPECT_TRUE(t.contains("coeff"));
  }
}
