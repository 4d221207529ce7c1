#include <gtest/gtest.h>

#include "plumbing/determinant.hpp"
#include "plumbing/hj_fraction.hpp"
#include "plumbing/rational.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace plumbing;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

std::vector<BigInt> ints(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).str(), "0");
  EXPECT_EQ(Rational(BigInt(-8), BigInt(4)).str(), "-2");
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::exception);
  EXPECT_THROW(q("1/0"), std::invalid_argument);
  EXPECT_THROW(q("1/-2"), std::invalid_argument);
  EXPECT_THROW(q("abc"), std::invalid_argument);
  EXPECT_THROW(q(""), std::invalid_argument);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(q("1/2") + q("1/3"), q("5/6"));
  EXPECT_EQ(q("1/2") - q("1/3"), q("1/6"));
  EXPECT_EQ(q("-2/3") * q("9/4"), q("-3/2"));
  EXPECT_EQ(q("-2/3") / q("4/9"), q("-3/2"));
  EXPECT_EQ(-q("5/7"), q("-5/7"));
  EXPECT_EQ(q("-3/2").reciprocal(), q("-2/3"));
  EXPECT_THROW(Rational(0).reciprocal(), std::exception);
}

TEST(Rational, OrderingFloorCeil) {
  EXPECT_LT(q("-5/4"), q("-6/5"));
  EXPECT_GT(q("-10/7"), q("-3/2"));
  EXPECT_EQ(q("-3/2").floor(), -2);
  EXPECT_EQ(q("-3/2").ceil(), -1);
  EXPECT_EQ(q("7/3").floor(), 2);
  EXPECT_EQ(q("7/3").ceil(), 3);
  EXPECT_EQ(q("-4").floor(), -4);
  EXPECT_EQ(q("-4").ceil(), -4);
}

TEST(Rational, ParsePrintRoundTrip) {
  for (const char* s : {"0", "-1", "17", "-1481/273", "273/1481", "123456789012345678901234567890/11"})
    EXPECT_EQ(q(s).str(), s);
  EXPECT_EQ(q("+4/6").str(), "2/3");
}

TEST(Rational, BigValuesStayExact) {
  Rational r(1);
  for (int i = 0; i < 40; ++i) r = r * q("1000003/999983");
  Rational back = r;
  for (int i = 0; i < 40; ++i) back = back / q("1000003/999983");
  EXPECT_EQ(back, Rational(1));
}

TEST(HJFraction, ValueExamples) {
  EXPECT_EQ(hj_value(HJExpansion(ints({-2}))), q("-2"));
  EXPECT_EQ(hj_value(HJExpansion(ints({-2, -2}))), q("-3/2"));
  EXPECT_EQ(hj_value(HJExpansion(ints({-3, -2, -2}))), q("-7/3"));
}

TEST(HJFraction, ExpandExamples) {
  EXPECT_EQ(hj_expand(q("-3/2")).entries(), ints({-2, -2}));
  EXPECT_EQ(hj_expand(q("-7/3")).entries(), ints({-3, -2, -2}));
  EXPECT_EQ(hj_expand(q("-2")).entries(), ints({-2}));
  EXPECT_EQ(hj_expand(q("-3/2")).str(), "[-2, -2]");
}

TEST(HJFraction, ZeroHasNoExpansion) { EXPECT_THROW(hj_expand(Rational(0)), std::exception); }

TEST(HJFraction, DegenerateTailRejected) {
  // a - 1/0 is undefined
  EXPECT_THROW(HJExpansion(ints({-2, 0})), std::exception);
  EXPECT_THROW(HJExpansion(ints({})), std::exception);
}

TEST(HJFraction, UnitIntervalStartsWithMinusOne) {
  const auto x = hj_expand(q("-273/1481"));
  EXPECT_EQ(x.entries().front(), -1);
  EXPECT_EQ(hj_value(x), q("-273/1481"));
}

TEST(HJFraction, RandomRoundTripAgainstConvergents) {
  gen::Rng rng(81);
  for (int i = 0; i < 1000; ++i) {
    BigInt p = gen::uniform(rng, -100000, 100000);
    if (p == 0) p = -1;
    const Rational r(p, BigInt(gen::uniform(rng, 1, 100000)));
    const auto x = hj_expand(r);
    ASSERT_EQ(hj_value(x), r) << r.str();
    ASSERT_EQ(oracle::hj_convergent(x.entries()), r) << r.str();
    if (r < Rational(-1)) {
      for (const auto& a : x.entries()) ASSERT_LE(a, -2) << r.str();
    }
  }
}

TEST(Determinant, BareissMatchesKnownValues) {
  EXPECT_EQ(bareiss_determinant({{BigInt(2), BigInt(1)}, {BigInt(1), BigInt(2)}}), 3);
  EXPECT_EQ(bareiss_determinant({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}), -1);
  EXPECT_EQ(bareiss_determinant({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}), 0);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(tree_determinant(PlumbingGraph::build({{"a", -2}}, {})), -2);
  EXPECT_EQ(tree_determinant(gen::e8()), 1);
  EXPECT_EQ(oracle::det(gen::e8()), 1);
  const auto g = PlumbingGraph::build({{"a", -3}, {"b", -6}, {"c", -2}, {"d", -5}, {"e", -3}, {"f", -4}},
                                      {{"a", "b"}, {"b", "d"}, {"c", "d"}, {"d", "e"}, {"e", "f"}});
  // product of the rooted diagonal (-3)(-1481/273)(-2)(-91/22)(-11/4)(-4)
  const Rational product = q("-3") * q("-1481/273") * q("-2") * q("-91/22") * q("-11/4") * q("-4");
  EXPECT_EQ(product, Rational(tree_determinant(g)));
  EXPECT_EQ(tree_determinant(g), 1481);
  EXPECT_EQ(oracle::det(g), 1481);
}

TEST(Determinant, ZeroLeafEntryFallsBack) {
  // leaf of weight 0 forces the Bareiss path
  const auto g = PlumbingGraph::build({{"a", 0}, {"b", 3}, {"c", 0}}, {{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(tree_determinant(g), oracle::det(g));
}

TEST(Determinant, RandomTreesMatchCofactorExpansion) {
  gen::Rng rng(82);
  for (int i = 0; i < 400; ++i) {
    const auto g = gen::random_tree(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 11)), -5, 5);
    ASSERT_EQ(tree_determinant(g), oracle::det(g)) << i;
    ASSERT_EQ(bareiss_determinant(intersection_matrix(g)), oracle::det(g)) << i;
  }
}

TEST(Determinant, InvariantUnderVertexReordering) {
  gen::Rng rng(83);
  for (int i = 0; i < 100; ++i) {
    const auto g = gen::random_tree(rng, 9, -4, 3);
    auto vs = g.vertices();
    std::reverse(vs.begin(), vs.end());
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [a, b] : g.edges()) es.emplace_back(g.id(a), g.id(b));
    ASSERT_EQ(tree_determinant(PlumbingGraph::build(vs, es)), tree_determinant(g));
  }
}
