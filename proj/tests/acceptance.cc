// Acceptance run: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock limits listed per line.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "naive.hpp"
#include "pcount/constructions.hpp"
#include "pcount/counting.hpp"
#include "pcount/errors.hpp"
#include "pcount/properties.hpp"
#include "pcount/ramsey.hpp"
#include "pcount/random.hpp"
#include "pcount/reductions.hpp"
#include "pcount/verify.hpp"

namespace pcount {
namespace {

struct Tally {
  long cases = 0;
  long failures = 0;
  std::string firstFailure;
  std::string extra;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      if (failures == 0) firstFailure = what;
      ++failures;
    }
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (failures == 0) firstFailure = what;
      ++failures;
    }
  }
};

struct Criterion {
  std::string id;
  std::string name;
  double limitSeconds;
  std::function<void(Tally&)> body;
};

std::string where(int i) { return "case " + std::to_string(i); }

// Answers from the definition and records each query parameter.
class RecordingOracle : public Oracle {
 public:
  explicit RecordingOracle(PropertyFamily phi) : phi_(std::move(phi)) {}
  std::string name() const override { return "recording"; }
  Count query(const Graph& g, int k) override {
    params.push_back(k);
    return naive::strEmbClass(naive::classMembers(phi_, k), k, g);
  }
  std::vector<int> params;

 private:
  PropertyFamily phi_;
};

LabelledClass randomClass(int k, Rng& rng) {
  LabelledClass cls(k);
  const int members = rng.between(1, 6);
  for (int i = 0; i < members; ++i) cls.insert(LabelledGraph(randomGraph(k, 1, 2, rng), randomPermutation(k, rng)));
  return cls;
}

std::uint64_t naiveSubIndClass(const LabelledClass& cls, const Graph& g) {
  std::uint64_t count = 0;
  naive::forEachSubset(g.order(), cls.k(), [&](const naive::Tuple& s) {
    const Graph induced = naive::inducedOn(g, s);
    for (const LabelledGraph& m : cls.members()) {
      if (naive::isomorphic(m.graph(), induced)) {
        ++count;
        return;
      }
    }
  });
  return count;
}

void countingOracles(Tally& t) {
  Rng rng(101);
  const auto zoo = builtInZoo();
  for (int i = 0; i < 250; ++i) {
    const int n = rng.between(1, 7);
    const int k = rng.between(1, std::min(4, n));
    const Graph g = randomGraph(n, rng.between(1, 3), 4, rng);
    const Graph h = randomGraph(k, 1, 2, rng);
    const Colouring f = randomColouring(n, k, rng);
    LabelledClass cls = randomClass(k, rng);
    if (i % 2 == 1) {
      cls = enumerateClass(zoo[rng.below(zoo.size())], k);
      if (cls.empty()) cls = randomClass(k, rng);
    }
    const auto& members = cls.members();
    const LabelledGraph& member = members[rng.below(members.size())];
    const std::string at = where(i);
    t.check(strEmb(h, g) == naive::strEmb(h, g), at + " strEmb");
    t.check(subInd(h, g) == naive::subInd(h, g), at + " subInd");
    t.check(colSubInd(h, g, f) == naive::colSubInd(h, g, f), at + " colSubInd");
    t.check(colClique(g, f, k) == naive::colClique(g, f, k), at + " colClique");
    t.check(countAutomorphisms(h) == naive::automorphisms(h), at + " aut");
    t.check(strEmbClass(cls, g) == naive::strEmbClass(members, k, g), at + " strEmbClass");
    t.check(strEmbClass(cls, g, EnumerationOptions{3}) == naive::strEmbClass(members, k, g),
            at + " strEmbClass workers=3");
    t.check(colStrEmbClass(cls, g, f) == naive::colStrEmbClass(members, k, g, f), at + " colStrEmbClass");
    t.check(subIndClass(cls, g) == naiveSubIndClass(cls, g), at + " subIndClass");
    t.check(alphaH(cls, member) == naive::alpha(members, member), at + " alpha");
  }
}

void autIdentity(Tally& t) {
  Rng rng(101);
  for (int i = 0; i < 250; ++i) {
    const int n = rng.between(1, 7);
    const int k = rng.between(1, std::min(4, n));
    const Graph g = randomGraph(n, rng.between(1, 3), 4, rng);
    const Graph h = randomGraph(k, 1, 2, rng);
    t.check(strEmb(h, g) == Count(naive::automorphisms(h)) * subInd(h, g), where(i));
    t.check(naive::strEmb(h, g) == naive::automorphisms(h) * naive::subInd(h, g), where(i) + " naive");
  }
  const Graph matching(4, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}});
  const Count expected = factorial(2) * 4;
  t.check(Count(countAutomorphisms(matching)) == expected, "matching aut at k=4");
  t.check(naive::automorphisms(matching) == 8, "matching aut at k=4 naive");
  const LabelledClass cls = enumerateClass(matchingProperty(), 4);
  t.check(alphaH(cls, LabelledGraph(matching, {0, 1, 2, 3})) == expected, "matching alpha at k=4");
}

void embSubg(Tally& t) {
  Rng rng(303);
  long graphs = 0;
  for (const PropertyFamily& phi : builtInZoo()) {
    for (int k = 1; k <= 4; ++k) {
      const LabelledClass cls = enumerateClass(phi, k);
      std::vector<Graph> reps;
      for (const Graph& h : isomorphismClasses(k)) {
        if (!restrictToIsomorphic(cls, h).empty()) reps.push_back(h);
      }
      for (int i = 0; i < 100; ++i) {
        const int n = rng.between(k, 7);
        const Graph g = randomGraph(n, rng.between(1, 3), 4, rng);
        const Colouring f = randomColouring(n, k, rng);
        ++graphs;
        for (const Graph& h : reps) {
          const LabelledClass clsH = restrictToIsomorphic(cls, h);
          const LabelledGraph& member = clsH.members().front();
          const std::uint64_t alpha = naive::alpha(clsH.members(), member);
          const std::string at = phi.name() + " k=" + std::to_string(k) + " " + where(i);
          t.check(alphaH(cls, member) == alpha, at + " alpha");
          t.check(strEmbClass(clsH, g) == Count(alpha * naive::subInd(h, g)), at + " uncoloured");
          t.check(colStrEmbClass(clsH, g, f) == Count(alpha * naive::colSubInd(h, g, f)), at + " colourful");
        }
      }
    }
  }
  t.extra = "graphs=" + std::to_string(graphs);
}

void complementAndDecolour(Tally& t) {
  Rng rng(404);
  const auto zoo = builtInZoo();
  long complementCases = 0;
  long decolourCases = 0;
  for (int i = 0; i < 140; ++i) {
    const PropertyFamily& phi = zoo[i % zoo.size()];
    const int k = rng.between(1, 4);
    const Graph g = randomGraph(rng.between(k, 7), 1, 2, rng);
    RecordingOracle oracle(complementFamily(phi));
    const ReductionResult r = complementReduce(phi, g, k, oracle);
    t.check(r.count == Count(naive::strEmbClass(naive::classMembers(phi, k), k, g)), where(i) + " complement");
    t.require(oracle.params == std::vector<int>{k}, where(i) + " complement calls");
    ++complementCases;
  }
  for (int i = 0; i < 140; ++i) {
    const PropertyFamily& phi = zoo[i % zoo.size()];
    const int k = rng.between(1, 3);
    const int n = rng.between(k, 7);
    const Graph g = randomGraph(n, 1, 2, rng);
    const Colouring f = randomColouring(n, k, rng);
    RecordingOracle oracle(phi);
    const ReductionResult r = decolour(phi, g, f, oracle);
    t.check(r.count == Count(naive::colStrEmbClass(naive::classMembers(phi, k), k, g, f)), where(i) + " decolour");
    t.require(oracle.params.size() == (std::size_t{1} << k), where(i) + " decolour call count");
    t.require(r.transcript.oracleCalls() == (std::size_t{1} << k), where(i) + " decolour transcript");
    for (int p : oracle.params) t.require(p == k, where(i) + " decolour parameter");
    ++decolourCases;
  }
  t.extra = "complement=" + std::to_string(complementCases) + " decolour=" + std::to_string(decolourCases);
}

void constructionLemmas(Tally& t) {
  Rng rng(505);
  long perMode[2] = {0, 0};
  for (int i = 0; i < 240; ++i) {
    const bool cliqueMode = i % 2 == 0;
    const int kPrime = rng.between(1, 3);
    const int n = rng.between(kPrime, 8);
    const int m = rng.between(kPrime, 6);
    const Graph g = randomGraph(n, 1, 2, rng);
    const Colouring f = randomColouring(n, kPrime, rng);
    const VertexSubset core = randomSubset(m, kPrime, rng);
    const Graph h = randomGraphWithCore(m, core, cliqueMode, rng);
    const auto fH = randomPatternColouring(m, core, rng);
    const GadgetMode mode = cliqueMode ? GadgetMode::kClique : GadgetMode::kIndependent;
    const GadgetOutput a = cliqueMode ? buildCliqueGadget(g, f, h, core) : buildIndepGadget(g, f, h, core);
    const GadgetOutput b = cliqueMode ? buildCliqueGadget(g, f, h, core, fH) : buildIndepGadget(g, f, h, core, fH);
    const std::string at = where(i) + (cliqueMode ? " clique" : " indep");
    t.require(a.graph.order() == n + m - kPrime && a.colouring.paletteSize() == m, at + " size");
    t.check(verifyColourfulShape(a, h, mode).ok(), at + " shape canonical fH");
    t.check(verifyColourfulShape(b, h, mode).ok(), at + " shape random fH");
    const std::uint64_t expected = naive::colClique(g, f, kPrime);
    const Count viaA = colSubInd(h, a.graph, a.colouring);
    const Count viaB = colSubInd(h, b.graph, b.colouring);
    t.check(viaA == Count(expected), at + " recovered count");
    t.check(viaA == viaB, at + " fH independence");
    t.check(naive::colSubInd(h, a.graph, a.colouring) == expected, at + " recovered count naive");
    ++perMode[cliqueMode ? 0 : 1];
  }
  t.require(perMode[0] >= 100 && perMode[1] >= 100, "fewer than 100 instances per mode");
  t.extra = "clique=" + std::to_string(perMode[0]) + " indep=" + std::to_string(perMode[1]);
}

PropertyFamily randomIntervalProperty(Rng& rng) {
  std::vector<IntervalTemplate> out;
  const int count = rng.between(1, 2);
  for (int i = 0; i < count; ++i) {
    const bool fromTop = rng.chance(1, 2);
    const int a = rng.between(0, 3);
    const int b = rng.between(0, 3);
    if (fromTop) {
      out.push_back({{std::max(a, b), true}, {std::min(a, b), true}});
    } else {
      out.push_back({{std::min(a, b), false}, {std::max(a, b), false}});
    }
  }
  return edgeIntervalProperty(out);
}

void pipeline(Tally& t) {
  Rng rng(606);
  const int kMax = 5;
  long solved[3] = {0, 0, 0};
  long skipped = 0;
  long divisibility = 0;
  for (int i = 0; solved[0] + solved[1] + solved[2] < 150 || std::min({solved[0], solved[1], solved[2]}) < 40; ++i) {
    const int kind = i % 3;
    const int kPrime = rng.between(1, 3);
    const int n = rng.between(kPrime, 7);
    const Graph g = randomGraph(n, 1, 2, rng);
    const Colouring f = randomColouring(n, kPrime, rng);
    PropertyFamily phi = cliqueProperty();
    if (kind == 1) phi = randomIntervalProperty(rng);
    if (kind == 2) {
      const int m = rng.between(kPrime, kMax);
      phi = classIsoProperty({randomGraphWithCore(m, randomSubset(m, kPrime, rng), rng.chance(1, 2), rng)});
    }
    if (!findGoodWitness(phi, kPrime, kMax).has_value()) {
      // no hardness witness within kMax; nothing to reduce
      t.require(kind == 1, where(i) + " " + phi.name() + " has no witness");
      ++skipped;
      continue;
    }
    const std::string at = where(i) + " " + phi.name() + " k'=" + std::to_string(kPrime);
    try {
      const ReductionResult r = solveMulticolourClique(g, f, phi, kMax);
      t.check(r.count == Count(naive::colClique(g, f, kPrime)), at);
      t.require(r.transcript.withinBound(), at + " parameter bound");
    } catch (const InternalConsistencyError& e) {
      ++divisibility;
      t.check(false, at + " " + e.what());
    }
    ++solved[kind];
  }
  t.require(divisibility == 0, "alpha divisibility failed");
  t.extra = "clique=" + std::to_string(solved[0]) + " interval=" + std::to_string(solved[1]) +
            " classIso=" + std::to_string(solved[2]) + " interval-without-witness=" + std::to_string(skipped);
}

// Maximal runs of set bits in a density mask.
int runsOf(std::uint64_t mask) {
  int runs = 0;
  bool inside = false;
  for (int d = 0; d < 64; ++d) {
    const bool on = (mask >> d) & 1U;
    if (on && !inside) ++runs;
    inside = on;
  }
  return runs;
}

void intervalWitnesses(Tally& t) {
  const int kPrime = 2;
  long feasible = 0;
  long rejected = 0;
  for (int k = 2; k <= 5; ++k) {
    const int top = pairCount(k);
    std::vector<Interval> all;
    for (int lo = 0; lo <= top; ++lo) {
      for (int hi = lo; hi <= top; ++hi) all.push_back({lo, hi});
    }
    const std::size_t m = all.size();
    std::set<std::uint64_t> seen;
    auto run = [&](const std::vector<Interval>& raw) {
      std::uint64_t mask = 0;
      for (const Interval& iv : raw) {
        for (int d = iv.lo; d <= iv.hi; ++d) mask |= std::uint64_t{1} << d;
      }
      // lists with the same union give the same spec
      if (!seen.insert(mask).second) return;
      const std::uint64_t full = (std::uint64_t{1} << (top + 1)) - 1;
      const int size = std::popcount(mask);
      const bool proper = mask != 0 && mask != full;
      const bool flip = 2 * size > top + 1;
      const std::uint64_t effective = flip ? (full & ~mask) : mask;
      const bool meets = proper && 2 * ((runsOf(effective) + 1) * pairCount(kPrime) + 1) < top + 1;
      const IntervalSpec spec = IntervalSpec::make(k, raw);
      std::ostringstream name;
      name << "k=" << k << " mask=" << mask;
      if (!meets) {
        bool threw = false;
        try {
          intervalWitness(spec, kPrime);
        } catch (const InfeasibleInstanceError&) {
          threw = true;
        }
        t.require(threw, name.str() + " should be rejected");
        ++rejected;
        return;
      }
      ++feasible;
      const IntervalWitness w = intervalWitness(spec, kPrime);
      const int d = w.member.graph().edgeCount();
      t.check(w.complemented == flip, name.str() + " complement choice");
      t.check(((effective >> d) & 1U) != 0 && d == w.edges, name.str() + " edge count outside the union");
      t.check(w.core.size() == kPrime, name.str() + " core size");
      const PropertyFamily phi = edgeIntervalProperty(w.effective);
      if (w.mode == GadgetMode::kClique) {
        t.check(isClique(w.member.graph(), w.core) && ((effective >> (d - 1)) & 1U) == 0,
                name.str() + " not good for cliques");
        t.check(isGoodForCliques(w.member, phi, kPrime).has_value(), name.str() + " checker rejects");
      } else {
        t.check(isIndependent(w.member.graph(), w.core) && ((effective >> (d + 1)) & 1U) == 0,
                name.str() + " not good for independent sets");
        t.check(isGoodForIndepSets(w.member, phi, kPrime).has_value(), name.str() + " checker rejects");
      }
    };
    for (std::size_t a = 0; a < m; ++a) {
      run({all[a]});
      for (std::size_t b = a; b < m; ++b) {
        run({all[a], all[b]});
        for (std::size_t c = b; c < m; ++c) run({all[a], all[b], all[c]});
      }
    }
  }
  t.require(feasible > 0, "no feasible spec");
  t.extra = "feasible=" + std::to_string(feasible) + " rejected=" + std::to_string(rejected);
}

void ramseyCorollary(Tally& t) {
  Rng rng(808);
  for (int n : {16, 18, 20, 24}) {
    const Rational bound(n * (n - 1), 240);
    for (int i = 0; i < 500; ++i) {
      const Graph g = randomGraph(n, rng.between(0, 8), 8, rng);
      const RamseyReport r = verifyCorollary(g, 2);
      const std::string at = "n=" + std::to_string(n) + " " + where(i);
      t.check(r.applicable && r.holds && r.lowerBound == bound, at + " corollary");
      t.require(Rational(r.interestingCount) >= bound, at + " independent comparison");
      const HomogeneousSearch s = findHomogeneousSet(g, 2);
      t.require(s.found && !s.invariantViolated && s.set.size() == 2, at + " homogeneous set");
    }
  }
}

void ramseySlow(Tally& t) {
  Rng rng(909);
  for (int i = 0; i < 10; ++i) {
    const Graph g = randomGraph(64, rng.between(1, 7), 8, rng);
    const RamseyReport r = verifyCorollary(g, 3);
    t.check(r.applicable && r.holds && r.lowerBound == Rational(1), where(i) + " corollary k=3 n=64");
    const HomogeneousSearch s = findHomogeneousSet(g, 3);
    t.require(s.found && (isClique(g, s.set) || isIndependent(g, s.set)), where(i) + " homogeneous set");
  }
}

void boundedLayers(Tally& t) {
  long applicable = 0;
  long witnessed = 0;
  for (int k = 1; k <= 5; ++k) {
    const int top = pairCount(k);
    for (int kPrime = 1; kPrime <= std::min(2, k); ++kPrime) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (top + 1)); ++mask) {
        std::vector<Interval> raw;
        for (int d = 0; d <= top; ++d) {
          if (((mask >> d) & 1U) && (d == 0 || !((mask >> (d - 1)) & 1U))) raw.push_back({d, d});
          if (((mask >> d) & 1U)) raw.back().hi = d;
        }
        const PropertyFamily phi = edgeIntervalProperty(IntervalSpec::make(k, raw));
        const BoundedLayersReport r = checkBoundedLayersCondition(phi, k, kPrime);
        std::ostringstream at;
        at << "k=" << k << " k'=" << kPrime << " mask=" << mask;
        // every density 0..C(k,2) is realised, so r is the number of densities kept
        t.require(r.r == static_cast<std::size_t>(std::popcount(mask)), at.str() + " layer count");
        t.require(r.applicable == (k >= (1 << (2 * kPrime))), at.str() + " applicability");
        if (!r.applicable || !r.holds || r.emptyClass) continue;
        ++applicable;
        const bool found = findGoodWitness(phi, kPrime, k, k).has_value();
        t.check(found, at.str() + " no good witness");
        witnessed += found ? 1 : 0;
      }
    }
  }
  t.require(applicable > 0, "no applicable case");
  t.extra = "applicable=" + std::to_string(applicable) + " witnessed=" + std::to_string(witnessed);
}

int runAll(const std::vector<Criterion>& criteria) {
  int failed = 0;
  for (const Criterion& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(t);
    } catch (const std::exception& e) {
      t.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool inTime = seconds < c.limitSeconds;
    const bool pass = t.failures == 0 && t.cases > 0 && inTime;
    failed += pass ? 0 : 1;
    std::printf("%s %s %s checks=%ld failures=%ld time=%.2fs limit=%.0fs%s%s%s\n", c.id.c_str(),
                pass ? "PASS" : "FAIL", c.name.c_str(), t.cases, t.failures, seconds, c.limitSeconds,
                t.extra.empty() ? "" : " ", t.extra.c_str(),
                t.firstFailure.empty() ? "" : (" first-failure=\"" + t.firstFailure + "\"").c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace pcount

int main(int argc, char** argv) {
  using namespace pcount;
  const bool slow = argc > 1 && std::strcmp(argv[1], "--slow") == 0;
  if (slow) return runAll({{"AC8-slow", "ramsey-k3-n64", 600, ramseySlow}});
  return runAll({
      {"AC1", "counting-oracle-equivalence", 60, countingOracles},
      {"AC2", "strEmb-aut-subInd-identity", 60, autIdentity},
      {"AC3", "emb-to-subg", 120, embSubg},
      {"AC4", "complement-and-decolour", 300, complementAndDecolour},
      {"AC5", "construction-lemmas", 300, constructionLemmas},
      {"AC6", "hardness-pipeline", 600, pipeline},
      {"AC7", "interval-witness-exhaustive", 300, intervalWitnesses},
      {"AC8", "ramsey-corollary", 120, ramseyCorollary},
      {"AC9", "bounded-layers-consistency", 300, boundedLayers},
  });
}
