#include <vector>

#include <gtest/gtest.h>

#include "naive.hpp"
#include "pcount/errors.hpp"
#include "pcount/ramsey.hpp"
#include "pcount/random.hpp"

namespace pcount {
namespace {

bool homogeneous(const Graph& g, VertexSubset s) { return isClique(g, s) || isIndependent(g, s); }

TEST(RamseyTest, HomogeneousSetExamples) {
  Rng rng(1);
  for (int n = 2; n <= 8; ++n) {
    const Graph g = randomGraph(n, 1, 2, rng);
    const HomogeneousSearch pair = findHomogeneousSet(g, 2);
    ASSERT_TRUE(pair.found);
    EXPECT_EQ(pair.set.size(), 2);
    const HomogeneousSearch single = findHomogeneousSet(g, 1);
    ASSERT_TRUE(single.found);
    EXPECT_EQ(single.set.size(), 1);
  }
  const HomogeneousSearch c5 = findHomogeneousSet(Graph::cycle(5), 3);
  EXPECT_FALSE(c5.found);
  EXPECT_FALSE(c5.invariantViolated);

  const HomogeneousSearch k4 = findHomogeneousSet(Graph::complete(4), 3);
  ASSERT_TRUE(k4.found);
  EXPECT_TRUE(k4.isClique);
  const HomogeneousSearch e4 = findHomogeneousSet(Graph::edgeless(4), 3);
  ASSERT_TRUE(e4.found);
  EXPECT_FALSE(e4.isClique);
}

TEST(RamseyTest, CountInterestingExamples) {
  Rng rng(2);
  for (int n = 2; n <= 9; ++n) {
    EXPECT_EQ(countInteresting(randomGraph(n, 1, 2, rng), 2), binomial(n, 2));
  }
  EXPECT_EQ(countInteresting(Graph::complete(4), 3), 4);
  EXPECT_EQ(countInteresting(Graph::cycle(5), 3), 0);
  EXPECT_EQ(countInteresting(Graph::cycle(5), 0), 1);
  EXPECT_EQ(countInteresting(Graph::cycle(5), 1), 5);
  EXPECT_EQ(countInteresting(Graph::cycle(5), 6), 0);
}

TEST(RamseyTest, CorollaryBoundExamples) {
  EXPECT_EQ(corollaryBound(16, 2), Rational(1));
  EXPECT_EQ(corollaryBound(20, 2), Rational(19, 12));
  for (int n = 1; n <= 30; ++n) EXPECT_EQ(corollaryBound(n, 1), Rational(n, 4));
  for (int n = 2; n <= 30; ++n) EXPECT_EQ(corollaryBound(n, 2), Rational(n * (n - 1), 240));
  EXPECT_THROW(corollaryBound(2, 3), DomainError);
}

TEST(RamseyTest, VerifyCorollaryExamples) {
  Rng rng(3);
  const RamseyReport at16 = verifyCorollary(randomGraph(16, 1, 2, rng), 2);
  EXPECT_TRUE(at16.applicable);
  EXPECT_TRUE(at16.holds);
  EXPECT_EQ(at16.interestingCount, 120);
  EXPECT_EQ(at16.lowerBound, Rational(1));
  for (int n = 4; n <= 8; ++n) {
    const RamseyReport r = verifyCorollary(randomGraph(n, 1, 2, rng), 1);
    EXPECT_TRUE(r.applicable);
    EXPECT_TRUE(r.holds);
  }
  EXPECT_FALSE(verifyCorollary(randomGraph(15, 1, 2, rng), 2).applicable);

  const auto json = verifyCorollary(Graph::complete(20), 2).toJson();
  EXPECT_EQ(json["bound"], "19/12");
  EXPECT_EQ(json["interesting"], "190");
  EXPECT_EQ(json["holds"], true);
}

TEST(RamseyTest, CountInterestingMatchesDefinition) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const int n = rng.between(0, 9);
    const int k = rng.between(0, 5);
    const Graph g = randomGraph(n, rng.between(1, 3), 4, rng);
    ASSERT_EQ(countInteresting(g, k), naive::interesting(g, k));
    ASSERT_EQ(countInteresting(g, k), countInteresting(complement(g), k));
    const HomogeneousSearch s = findHomogeneousSet(g, k);
    ASSERT_EQ(s.found, naive::interesting(g, k) > 0);
    if (s.found) {
      ASSERT_EQ(s.set.size(), k);
      ASSERT_TRUE(homogeneous(g, s.set));
      ASSERT_EQ(s.isClique, isClique(g, s.set));
    }
  }
}

TEST(RamseyTest, NeverFailsAtKOneExhaustively) {
  for (int n = 4; n <= 8; ++n) {
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
    // 2^28 graphs at n = 8; stride through that one
    const std::uint64_t stride = n <= 7 ? 1 : 4099;
    for (std::uint64_t x = 0; x < graphs; x += stride) {
      Graph g(n);
      int p = 0;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++p) {
          if ((x >> p) & 1U) g.addEdge(u, v);
        }
      }
      const HomogeneousSearch s = findHomogeneousSet(g, 1);
      ASSERT_TRUE(s.found);
      ASSERT_FALSE(s.invariantViolated);
      ASSERT_TRUE(verifyCorollary(g, 1).holds);
    }
  }
}

TEST(RamseyTest, NeverFailsAtKTwoOnRandomGraphs) {
  Rng rng(5);
  for (int n = 16; n <= 20; ++n) {
    for (int i = 0; i < 100; ++i) {
      const Graph g = randomGraph(n, rng.between(0, 4), 4, rng);
      const HomogeneousSearch s = findHomogeneousSet(g, 2);
      ASSERT_TRUE(s.found);
      ASSERT_TRUE(homogeneous(g, s.set));
      ASSERT_TRUE(verifyCorollary(g, 2).holds);
    }
  }
}

TEST(RamseyTest, CapacityAndDomain) {
  EXPECT_THROW(findHomogeneousSet(Graph(4), -1), DomainError);
  EXPECT_THROW(Graph(65), CapacityError);
}

}  // namespace
}  // namespace pcount
