#include <algorithm>
#include <optional>
#include <vector>

#include <gtest/gtest.h>

#include "naive.hpp"
#include "pcount/constructions.hpp"
#include "pcount/errors.hpp"
#include "pcount/properties.hpp"
#include "pcount/random.hpp"
#include "pcount/verify.hpp"

namespace pcount {
namespace {

using Edges = std::vector<std::pair<Vertex, Vertex>>;

PropertyFamily interval(int lo, int hi) {
  return edgeIntervalProperty(std::vector<IntervalTemplate>{{{lo, false}, {hi, false}}});
}

PropertyFamily completeOnly() {
  return edgeIntervalProperty(std::vector<IntervalTemplate>{{{0, true}, {0, true}}});
}

TEST(ConstructionsTest, CliqueGadgetOnTriangle) {
  const GadgetOutput out = buildCliqueGadget(Graph::complete(2), Colouring(2, {1, 2}),
                                             Graph::complete(3), VertexSubset(0b011));
  EXPECT_EQ(out.graph, Graph::complete(3));
  EXPECT_EQ(out.colouring.colours(), std::vector<int>({1, 2, 3}));
  EXPECT_EQ(out.hostOrder(), 2);
  EXPECT_EQ(out.origins[2].role, VertexRole::kPattern);
  EXPECT_EQ(out.origins[2].original, 2);
  const ShapeReport shape = verifyColourfulShape(out, Graph::complete(3), GadgetMode::kClique);
  EXPECT_TRUE(shape.ok());
  EXPECT_EQ(shape.colourfulSubsets, 1U);
}

TEST(ConstructionsTest, WholePatternAsCoreReturnsHost) {
  Rng rng(1);
  const Graph g = randomGraph(6, 1, 2, rng);
  const Colouring f = randomColouring(6, 3, rng);
  const GadgetOutput clique = buildCliqueGadget(g, f, Graph::complete(3), VertexSubset(0b111));
  EXPECT_EQ(clique.graph, g);
  EXPECT_EQ(clique.colouring, f);
  const GadgetOutput indep = buildIndepGadget(g, f, Graph::edgeless(3), VertexSubset(0b111));
  EXPECT_EQ(indep.graph, complement(g));
  EXPECT_EQ(indep.colouring, f);
}

TEST(ConstructionsTest, GadgetPreconditions) {
  const Colouring f(2, {1, 2});
  EXPECT_THROW(buildCliqueGadget(Graph::complete(2), f, Graph::path(3), VertexSubset(0b101)),
               PreconditionError);
  EXPECT_THROW(buildIndepGadget(Graph::complete(2), f, Graph::path(3), VertexSubset(0b011)),
               PreconditionError);
  EXPECT_THROW(buildCliqueGadget(Graph::complete(2), f, Graph::complete(3), VertexSubset(0b111)),
               DomainError);
  EXPECT_THROW(buildIndepGadget(Graph::complete(2), f, Graph::edgeless(3), VertexSubset(0b001)),
               DomainError);
}

TEST(ConstructionsTest, IndepGadgetOnEdgelessPattern) {
  // the complement of the triangle gadget built from an edge
  const GadgetOutput out = buildIndepGadget(Graph::complete(2), Colouring(2, {1, 2}),
                                            Graph::edgeless(3), VertexSubset(0b011));
  EXPECT_EQ(out.colouring.paletteSize(), 3);
  EXPECT_EQ(out.graph, Graph::edgeless(3));
  EXPECT_TRUE(verifyColourfulShape(out, Graph::edgeless(3), GadgetMode::kIndependent).ok());
  const GadgetOutput twin = buildCliqueGadget(Graph::complete(2), Colouring(2, {1, 2}),
                                              Graph::complete(3), VertexSubset(0b011));
  EXPECT_EQ(out.colouring, twin.colouring);
  EXPECT_EQ(out.graph, complement(twin.graph));

  // a host non-edge becomes a W-internal edge
  const GadgetOutput added = buildIndepGadget(Graph::edgeless(2), Colouring(2, {1, 2}),
                                              Graph::edgeless(3), VertexSubset(0b011));
  EXPECT_EQ(added.graph.edgeCount(), 1);
  const ShapeReport shape = verifyColourfulShape(added, Graph::edgeless(3), GadgetMode::kIndependent);
  EXPECT_TRUE(shape.ok());
  EXPECT_EQ(shape.colourfulSubsets, 1U);
}

TEST(ConstructionsTest, ShapeReportCountsDeletions) {
  const GadgetOutput out = buildCliqueGadget(Graph::edgeless(2), Colouring(2, {1, 2}),
                                             Graph::complete(3), VertexSubset(0b011));
  const ShapeReport shape = verifyColourfulShape(out, Graph::complete(3), GadgetMode::kClique);
  EXPECT_TRUE(shape.ok());
  EXPECT_EQ(shape.colourfulSubsets, 1U);
  EXPECT_EQ(out.graph.edgeCount(), 2);
}

TEST(ConstructionsTest, ShapeReportFlagsModeMismatch) {
  const Graph h(3, Edges{{0, 2}});
  const GadgetOutput out = buildIndepGadget(Graph::complete(2), Colouring(2, {1, 2}), h, VertexSubset(0b011));
  EXPECT_TRUE(verifyColourfulShape(out, h, GadgetMode::kIndependent).ok());
  EXPECT_FALSE(verifyColourfulShape(out, h, GadgetMode::kClique).ok());
}

TEST(ConstructionsTest, GoodForCliquesExamples) {
  const LabelledGraph k3(Graph::complete(3), {0, 1, 2});
  EXPECT_EQ(isGoodForCliques(k3, cliqueProperty(), 3), VertexSubset(0b111));
  const LabelledGraph k4(Graph::complete(4), {0, 1, 2, 3});
  EXPECT_EQ(isGoodForCliques(k4, completeOnly(), 2), VertexSubset(0b0011));
  EXPECT_FALSE(isGoodForCliques(k3, constantProperty(true), 2).has_value());
  EXPECT_THROW(isGoodForCliques(LabelledGraph(Graph::path(3), {0, 1, 2}), cliqueProperty(), 2),
               DomainError);
}

TEST(ConstructionsTest, GoodForIndepSetsExamples) {
  const LabelledGraph empty3(Graph::edgeless(3), {0, 1, 2});
  EXPECT_EQ(isGoodForIndepSets(empty3, interval(0, 0), 3), VertexSubset(0b111));
  const LabelledGraph oneEdge(Graph(4, Edges{{0, 1}}), {0, 1, 2, 3});
  const auto w = isGoodForIndepSets(oneEdge, interval(1, 1), 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, VertexSubset(0b0101));
  EXPECT_TRUE(isIndependent(oneEdge.graph(), *w));
  EXPECT_FALSE(isGoodForIndepSets(empty3, constantProperty(true), 2).has_value());
}

TEST(ConstructionsTest, GadgetShapeSweep) {
  SweepOptions options;
  options.samples = 120;
  options.seed = 41;
  const SweepReport report = verifyConstructionShape(options);
  EXPECT_EQ(report.cases, 240);
  EXPECT_TRUE(report.ok()) << report.toText();
}

TEST(ConstructionsTest, ColourfulCliquesSurviveBothGadgets) {
  Rng rng(99);
  for (int i = 0; i < 120; ++i) {
    for (bool clique : {true, false}) {
      const int kPrime = rng.between(1, 3);
      const int n = rng.between(kPrime, 8);
      const Graph g = randomGraph(n, 1, 2, rng);
      const Colouring f = randomColouring(n, kPrime, rng);
      const int m = rng.between(kPrime, 6);
      const VertexSubset core = randomSubset(m, kPrime, rng);
      const Graph h = randomGraphWithCore(m, core, clique, rng);
      const GadgetOutput a = clique ? buildCliqueGadget(g, f, h, core) : buildIndepGadget(g, f, h, core);
      const auto fH = randomPatternColouring(m, core, rng);
      const GadgetOutput b = clique ? buildCliqueGadget(g, f, h, core, fH) : buildIndepGadget(g, f, h, core, fH);
      ASSERT_EQ(a.graph.order(), n + m - kPrime);
      ASSERT_EQ(a.colouring.paletteSize(), m);
      const std::uint64_t expected = naive::colClique(g, f, kPrime);
      ASSERT_EQ(colClique(g, f, kPrime), expected);
      ASSERT_EQ(colSubInd(h, a.graph, a.colouring), expected) << i;
      ASSERT_EQ(colSubInd(h, b.graph, b.colouring), expected) << i;
      ASSERT_EQ(naive::colSubInd(h, a.graph, a.colouring), expected) << i;
    }
  }
}

TEST(ConstructionsTest, GoodMembersSeeOnlyTheirOwnIsomorphismClass) {
  Rng rng(55);
  const auto zoo = builtInZoo();
  int checked = 0;
  for (int i = 0; i < 400 && checked < 120; ++i) {
    const PropertyFamily& phi = zoo[rng.below(zoo.size())];
    const int k = rng.between(2, 4);
    const LabelledClass cls = enumerateClass(phi, k);
    if (cls.empty()) continue;
    const LabelledGraph& member = cls.members()[rng.below(cls.size())];
    const int kPrime = rng.between(1, std::min(3, k));
    GadgetMode mode = GadgetMode::kClique;
    auto core = isGoodForCliques(member, phi, kPrime);
    if (!core) {
      core = isGoodForIndepSets(member, phi, kPrime);
      mode = GadgetMode::kIndependent;
    }
    if (!core) continue;
    const int n = rng.between(kPrime, 7);
    const Graph g = randomGraph(n, 1, 2, rng);
    const Colouring f = randomColouring(n, kPrime, rng);
    const GadgetOutput out = mode == GadgetMode::kClique ? buildCliqueGadget(g, f, member.graph(), *core)
                                                         : buildIndepGadget(g, f, member.graph(), *core);
    const LabelledClass clsH = restrictToIsomorphic(cls, member.graph());
    ASSERT_EQ(colStrEmbClass(cls, out.graph, out.colouring), colStrEmbClass(clsH, out.graph, out.colouring))
        << phi.name() << " k=" << k << " k'=" << kPrime;
    ++checked;
  }
  EXPECT_GE(checked, 100);
}

TEST(ConstructionsTest, GoodnessIsPreservedByComplementation) {
  auto zoo = builtInZoo();
  zoo.push_back(interval(1, 1));
  zoo.push_back(completeOnly());
  for (const PropertyFamily& phi : zoo) {
    const PropertyFamily mirrored = edgeComplementFamily(phi);
    for (int k = 1; k <= 4; ++k) {
      const LabelledClass cls = enumerateClass(phi, k);
      for (const LabelledGraph& member : cls.members()) {
        const LabelledGraph flipped(complement(member.graph()), member.labelling());
        for (int kPrime = 1; kPrime <= k; ++kPrime) {
          ASSERT_EQ(isGoodForCliques(member, phi, kPrime), isGoodForIndepSets(flipped, mirrored, kPrime))
              << phi.name() << " k=" << k;
          ASSERT_EQ(isGoodForIndepSets(member, phi, kPrime), isGoodForCliques(flipped, mirrored, kPrime))
              << phi.name() << " k=" << k;
        }
      }
    }
  }
}

TEST(ConstructionsTest, GoodCoreMatchesDirectDefinition) {
  // good for cliques: no non-empty deletion inside U is isomorphic to a member
  const PropertyFamily phi = interval(2, 3);
  const int k = 4;
  const auto members = naive::classMembers(phi, k);
  for (const LabelledGraph& member : members) {
    for (int kPrime = 2; kPrime <= 3; ++kPrime) {
      std::vector<naive::Tuple> good;
      naive::forEachSubset(k, kPrime, [&](const naive::Tuple& u) {
        for (std::size_t a = 0; a < u.size(); ++a) {
          for (std::size_t b = a + 1; b < u.size(); ++b) {
            if (!member.graph().adjacent(u[a], u[b])) return;
          }
        }
        const int pairs = kPrime * (kPrime - 1) / 2;
        for (int del = 1; del < (1 << pairs); ++del) {
          Graph modified = member.graph();
          int p = 0;
          for (std::size_t a = 0; a < u.size(); ++a) {
            for (std::size_t b = a + 1; b < u.size(); ++b, ++p) {
              if ((del >> p) & 1) modified.removeEdge(u[a], u[b]);
            }
          }
          for (const LabelledGraph& other : members) {
            if (naive::isomorphic(other.graph(), modified)) return;
          }
        }
        good.push_back(u);
      });
      // ties go to the lexicographically smallest vertex list
      std::optional<VertexSubset> expected;
      if (!good.empty()) expected = VertexSubset::of(*std::min_element(good.begin(), good.end()));
      ASSERT_EQ(isGoodForCliques(member, phi, kPrime), expected);
    }
  }
}

}  // namespace
}  // namespace pcount
