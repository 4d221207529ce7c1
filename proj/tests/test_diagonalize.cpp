#include <gtest/gtest.h>

#include "plumbing/determinant.hpp"
#include "plumbing/diagonalize.hpp"
#include "plumbing/graph_io.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace plumbing;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

PlumbingGraph example31() {
  return PlumbingGraph::build({{"a", -3}, {"b", -6}, {"c", -2}, {"d", -5}, {"e", -3}, {"f", -4}},
                              {{"a", "b"}, {"b", "d"}, {"c", "d"}, {"d", "e"}, {"e", "f"}});
}

PlumbingGraph pair(Weight a, Weight b) { return PlumbingGraph::build({{"a", a}, {"b", b}}, {{"a", "b"}}); }

}  // namespace

TEST(Diagonalize, Example31AtB) {
  const auto form = rooted_diagonalize(example31(), "b");
  EXPECT_EQ(form.root, "b");
  EXPECT_EQ(form.entry("a"), q("-3"));
  EXPECT_EQ(form.entry("b"), q("-1481/273"));
  EXPECT_EQ(form.entry("c"), q("-2"));
  EXPECT_EQ(form.entry("d"), q("-91/22"));
  EXPECT_EQ(form.entry("e"), q("-11/4"));
  EXPECT_EQ(form.entry("f"), q("-4"));
  // deepest first, ties in declaration order, root last
  EXPECT_EQ(form.elimination_order, (std::vector<std::string>{"f", "c", "e", "a", "d", "b"}));
  EXPECT_EQ(form.product(), Rational(tree_determinant(example31())));
}

TEST(Diagonalize, SmallCases) {
  EXPECT_EQ(rooted_diagonalize(parse_graph("vertex a -2\n"), "a").root_entry(), q("-2"));
  const auto ab = pair(-2, -2);
  EXPECT_EQ(rooted_diagonalize(ab, "a").entry("b"), q("-2"));
  EXPECT_EQ(rooted_diagonalize(ab, "a").root_entry(), q("-3/2"));
  EXPECT_EQ(rooted_diagonalize(ab, "b").root_entry(), q("-3/2"));
}

TEST(Diagonalize, ZeroPivotIsReported) {
  // leaf of weight 0 below the root
  const auto g = pair(-2, 0);
  try {
    rooted_diagonalize(g, "a");
    FAIL();
  } catch (const degenerate_form& e) {
    EXPECT_EQ(e.vertex(), "b");
  }
}

TEST(Diagonalize, ProductIsDeterminantForEveryRoot) {
  gen::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto g = gen::random_nd_tree(rng, 9);
    const Rational det(tree_determinant(g));
    for (std::size_t r = 0; r < g.size(); ++r) ASSERT_EQ(rooted_diagonalize(g, r).product(), det);
  }
}

TEST(NegativeDefinite, Examples) {
  EXPECT_TRUE(is_negative_definite(gen::e8()));
  EXPECT_FALSE(is_negative_definite(parse_graph("vertex a 1\n")));
  EXPECT_FALSE(is_negative_definite(parse_graph("vertex a 0\n")));
  auto vs = gen::e8().vertices();
  vs[0].weight = -1;  // center X
  std::vector<std::pair<std::string, std::string>> es;
  const auto e8 = gen::e8();
  for (const auto& [a, b] : e8.edges()) es.emplace_back(e8.id(a), e8.id(b));
  EXPECT_FALSE(is_negative_definite(PlumbingGraph::build(vs, es)));
  EXPECT_TRUE(is_negative_definite(example31()));
  EXPECT_FALSE(is_negative_definite(pair(-1, -1)));  // det 0
  EXPECT_TRUE(is_negative_definite(pair(-1, -2)));
}

TEST(NegativeDefinite, AgreesWithSylvesterOracleAndRoot) {
  gen::Rng rng(32);
  std::size_t nd = 0;
  for (int i = 0; i < 500; ++i) {
    const auto g = gen::random_tree(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 10)), -4, 0);
    const bool expected = oracle::negative_definite(g);
    nd += expected;
    for (std::size_t r = 0; r < g.size(); ++r) ASSERT_EQ(is_negative_definite(g, r), expected) << serialize(g);
  }
  EXPECT_GT(nd, 50u);
}

TEST(Split, Examples) {
  const auto [a, b] = split(pair(-2, -3), "a", "b");
  EXPECT_EQ(a.mark, "a");
  EXPECT_EQ(serialize(a.graph), "vertex a -2\n");
  EXPECT_EQ(b.mark, "b");
  EXPECT_EQ(serialize(b.graph), "vertex b -3\n");

  const auto [xside, zside] = split(gen::e8(), "X", "z1");
  EXPECT_EQ(xside.graph.size(), 7u);
  EXPECT_EQ(xside.mark, "X");
  EXPECT_EQ(serialize(zside.graph), "vertex z1 -2\n");

  const auto [bside, dside] = split(example31(), "b", "d");
  EXPECT_EQ(serialize(bside.graph), "vertex a -3\nvertex b -6\nedge a b\n");
  EXPECT_EQ(serialize(dside.graph), "vertex c -2\nvertex d -5\nvertex e -3\nvertex f -4\nedge c d\nedge d e\nedge e f\n");
  EXPECT_THROW(split(example31(), "a", "f"), precondition_error);
}

TEST(Derationalizer, Examples) {
  EXPECT_EQ(derationalizer(MarkedGraph(example31(), "b")), q("-273/1481"));
  EXPECT_EQ(derationalizer(MarkedGraph(parse_graph("vertex a -2\n"), "a")), q("-1/2"));
  EXPECT_EQ(derationalizer(MarkedGraph(pair(-2, -2), "a")), q("-2/3"));
  EXPECT_THROW(derationalizer(MarkedGraph(parse_graph("vertex a 1\n"), "a")), not_negative_definite);
  EXPECT_THROW(MarkedGraph(parse_graph("vertex a -2\n"), "zz"), precondition_error);
}

TEST(Surger, Examples) {
  const MarkedGraph single(parse_graph("vertex a -2\n"), "a");
  EXPECT_EQ(serialize(surger(single, q("-3/2"))),
            "vertex a -2\nvertex a_s1 -2\nvertex a_s2 -2\nedge a a_s1\nedge a_s1 a_s2\n");
  EXPECT_EQ(serialize(surger(single, q("-2"))), "vertex a -2\nvertex a_s1 -2\nedge a a_s1\n");
  EXPECT_THROW(surger(single, Rational(0)), precondition_error);
}

TEST(Surger, FreshIdsAvoidCollisions) {
  const MarkedGraph g(PlumbingGraph::build({{"a", -2}, {"a_s1", -3}}, {{"a", "a_s1"}}), "a");
  const auto s = surger(g, q("-2"));
  EXPECT_TRUE(s.contains("a_s2_1"));
  EXPECT_EQ(s.size(), 3u);
}

TEST(Surger, DerationalizerKillsDeterminant) {
  gen::Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    const auto g = gen::random_nd_tree(rng, 10);
    const MarkedGraph mg(g, g.id(static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<std::int64_t>(g.size()) - 1))));
    const auto dr = derationalizer(mg);
    ASSERT_LT(dr, Rational(0));
    const auto s = surger(mg, dr);
    ASSERT_EQ(tree_determinant(s), 0) << serialize(g) << mg.mark;
  }
}

TEST(Surger, DerationalizerInUnitIntervalForChainEnds) {
  // chain with weights <= -2 rooted at an end: every entry stays below -1
  gen::Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    std::vector<Vertex> vs;
    std::vector<PlumbingGraph::Edge> es;
    const auto n = gen::uniform(rng, 1, 10);
    for (std::int64_t k = 0; k < n; ++k) {
      vs.push_back({"v" + std::to_string(k), static_cast<Weight>(gen::uniform(rng, -6, -2))});
      if (k) es.emplace_back(k - 1, k);
    }
    const auto g = PlumbingGraph::build_indexed(vs, es);
    const auto dr = derationalizer(MarkedGraph(g, "v0"));
    ASSERT_GT(dr, Rational(-1));
    ASSERT_LT(dr, Rational(0));
    ASSERT_EQ(hj_expand(dr).entries().front(), -1);
  }
}
