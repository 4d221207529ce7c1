#include <gtest/gtest.h>

#include "plumbing/determinant.hpp"
#include "plumbing/graph_io.hpp"
#include "plumbing/pi1.hpp"
#include "support/random_graphs.hpp"

using namespace plumbing;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

PlumbingGraph star() {
  return PlumbingGraph::build({{"c", -2}, {"l1", -3}, {"l2", -3}, {"l3", -3}},
                              {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}});
}

}  // namespace

TEST(Presentation, SingleVertex) {
  const auto p = mumford_presentation(parse_graph("vertex a -2\n"));
  EXPECT_EQ(p.generators, std::vector<std::string>{"a"});
  EXPECT_EQ(format_presentation(p), "gens: a\na^2\n");
}

TEST(Presentation, Star) {
  const auto p = mumford_presentation(star());
  EXPECT_EQ(format_presentation(p),
            "gens: c, l1, l2, l3\n"
            "c^2 l3^-1 l2^-1 l1^-1\n"
            "l1^3 c^-1\nl2^3 c^-1\nl3^3 c^-1\n"
            "c l1 c^-1 l1^-1\nc l2 c^-1 l2^-1\nc l3 c^-1 l3^-1\n");
}

TEST(Presentation, ExplicitCyclicOrder) {
  const auto p = mumford_presentation(star(), {{"c", {"l2", "l3", "l1"}}});
  EXPECT_EQ(format_word(p.relations[0]), "c^2 l1^-1 l3^-1 l2^-1");
  EXPECT_EQ(p.neighbor_ordering[0].second, (std::vector<std::string>{"l2", "l3", "l1"}));
  EXPECT_THROW(mumford_presentation(star(), {{"c", {"l1", "l2"}}}), precondition_error);
  EXPECT_THROW(mumford_presentation(star(), {{"zz", {}}}), precondition_error);
}

TEST(Presentation, E8Counts) {
  const auto p = mumford_presentation(gen::e8());
  EXPECT_EQ(p.generators.size(), 8u);
  EXPECT_EQ(p.relations.size(), 15u);
}

TEST(Presentation, ZeroWeightOmitsPower) {
  const auto p = mumford_presentation(PlumbingGraph::build({{"a", 0}, {"b", -1}}, {{"a", "b"}}));
  EXPECT_EQ(format_word(p.relations[0]), "b^-1");
  EXPECT_EQ(format_word(p.relations[1]), "b a^-1");
  EXPECT_EQ(format_word({}), "1");
}

TEST(Smith, KnownMatrices) {
  EXPECT_EQ(smith_diagonal({{BigInt(2), BigInt(4)}, {BigInt(6), BigInt(8)}}), ints({2, 4}));
  EXPECT_EQ(smith_diagonal({{BigInt(2), BigInt(0)}, {BigInt(0), BigInt(3)}}), ints({1, 6}));
  EXPECT_EQ(smith_diagonal({{BigInt(0), BigInt(0)}, {BigInt(0), BigInt(0)}}), ints({0, 0}));
  EXPECT_EQ(smith_diagonal({{BigInt(4), BigInt(6), BigInt(10)}}), ints({2}));
}

TEST(Abelianization, Examples) {
  const auto e8 = abelianization_invariants(mumford_presentation(gen::e8()));
  EXPECT_EQ(e8, std::vector<BigInt>(8, 1));
  const auto s = abelianization_invariants(mumford_presentation(star()));
  BigInt product = 1;
  for (const auto& d : s) product *= d;
  EXPECT_EQ(product, 27);
  EXPECT_EQ(s, ints({1, 1, 3, 9}));
  EXPECT_EQ(abelianization_invariants(mumford_presentation(parse_graph("vertex a -2\n"))), ints({2}));
  EXPECT_EQ(abelianization_invariants(mumford_presentation(parse_graph("vertex a 0\n"))), ints({0}));
}

TEST(Abelianization, DivisorChainAndDeterminant) {
  gen::Rng rng(61);
  for (int i = 0; i < 500; ++i) {
    const auto g = gen::random_tree(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 12)), -6, 6);
    const auto d = abelianization_invariants(mumford_presentation(g));
    ASSERT_EQ(d.size(), g.size());
    BigInt product = 1;
    std::size_t zeros = 0;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] == 0) {
        ++zeros;
        continue;
      }
      ASSERT_EQ(zeros, 0u) << "zero divisors must come last";
      if (k) {
        ASSERT_EQ(d[k] % d[k - 1], 0);
      }
      product *= d[k];
    }
    const BigInt det = abs(tree_determinant(g));
    if (det == 0) {
      ASSERT_GT(zeros, 0u);
    } else {
      ASSERT_EQ(product, det);
    }
  }
}
