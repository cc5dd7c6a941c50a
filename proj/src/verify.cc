#include "pcount/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pcount/constructions.hpp"
#include "pcount/errors.hpp"
#include "pcount/ramsey.hpp"
#include "pcount/reductions.hpp"

namespace pcount {
namespace {

std::string describeCase(int index, const std::string& details) {
  return "case " + std::to_string(index) + ": " + details;
}

std::string verdict(bool passed) { return passed ? " ok" : " FAILED"; }

// enumerateClass is the expensive part of the class sweeps; cache by zoo
// index and k.
class ClassCache {
 public:
  explicit ClassCache(const std::vector<PropertyFamily>& zoo) : zoo_(zoo) {}
  const LabelledClass& get(std::size_t index, int k) {
    auto key = std::make_pair(index, k);
    auto it = classes_.find(key);
    if (it == classes_.end()) it = classes_.emplace(key, enumerateClass(zoo_[index], k)).first;
    return it->second;
  }

 private:
  const std::vector<PropertyFamily>& zoo_;
  std::map<std::pair<std::size_t, int>, LabelledClass> classes_;
};

struct GadgetInstance {
  Graph g;
  Colouring f;
  Graph h;
  VertexSubset core;
  int kPrime = 0;
};

GadgetInstance randomGadgetInstance(const SweepOptions& options, bool clique, Rng& rng) {
  GadgetInstance in;
  in.kPrime = rng.between(1, 3);
  const int n = rng.between(in.kPrime, std::max(in.kPrime, options.maxN));
  in.g = randomGraph(n, 1, 2, rng);
  in.f = randomColouring(n, in.kPrime, rng);
  const int m = rng.between(in.kPrime, 6);
  in.core = randomSubset(m, in.kPrime, rng);
  in.h = randomGraphWithCore(m, in.core, clique, rng);
  return in;
}

GadgetOutput build(const GadgetInstance& in, bool clique) {
  return clique ? buildCliqueGadget(in.g, in.f, in.h, in.core)
                : buildIndepGadget(in.g, in.f, in.h, in.core);
}

GadgetOutput build(const GadgetInstance& in, bool clique, const std::vector<int>& fH) {
  return clique ? buildCliqueGadget(in.g, in.f, in.h, in.core, fH)
                : buildIndepGadget(in.g, in.f, in.h, in.core, fH);
}

std::string instanceName(const GadgetInstance& in, bool clique) {
  return std::string(clique ? "clique" : "indep") + " n=" + std::to_string(in.g.order()) +
         " k'=" + std::to_string(in.kPrime) + " |V_H|=" + std::to_string(in.h.order());
}

}  // namespace

void SweepReport::record(bool passed, std::string line) {
  ++cases;
  if (!passed) ++failures;
  lines.push_back(std::move(line));
}

std::string SweepReport::toText() const {
  std::ostringstream out;
  for (const auto& line : lines) out << line << '\n';
  out << suite << " seed=" << seed << " cases=" << cases << " failures=" << failures << ' '
      << (ok() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

nlohmann::ordered_json SweepReport::toJson() const {
  return {{"suite", suite}, {"seed", seed},   {"cases", cases},
          {"failures", failures}, {"ok", ok()}, {"lines", lines}};
}

std::vector<PropertyFamily> builtInZoo() {
  return {
      cliqueProperty(),
      matchingProperty(),
      regularProperty(),
      maxDegreeProperty(1),
      edgeIntervalProperty(std::vector<IntervalTemplate>{{{1, false}, {2, false}}}),
      edgeIntervalProperty(std::vector<IntervalTemplate>{{{0, false}, {0, false}},
                                                         {{1, true}, {0, true}}}),
      classIsoProperty({Graph::path(3), Graph::cycle(4)}),
  };
}

Graph randomGraphWithCore(int m, VertexSubset core, bool clique, Rng& rng) {
  Graph h = randomGraph(m, 1, 2, rng);
  for (Vertex u : core.members()) {
    for (Vertex v : core.members()) {
      if (u < v) h.setEdge(u, v, clique);
    }
  }
  return h;
}

VertexSubset randomSubset(int n, int size, Rng& rng) {
  auto perm = randomPermutation(n, rng);
  perm.resize(static_cast<std::size_t>(size));
  return VertexSubset::of(perm);
}

std::vector<int> randomPatternColouring(int m, VertexSubset core, Rng& rng) {
  const int kPrime = core.size();
  std::vector<Vertex> inside = core.members();
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < m; ++v) {
    if (!core.contains(v)) outside.push_back(v);
  }
  rng.shuffle(inside);
  rng.shuffle(outside);
  std::vector<int> fH(static_cast<std::size_t>(m));
  for (int i = 0; i < kPrime; ++i) fH[inside[i]] = i + 1;
  for (std::size_t i = 0; i < outside.size(); ++i) fH[outside[i]] = kPrime + 1 + static_cast<int>(i);
  return fH;
}

SweepReport verifyConstructionShape(const SweepOptions& options) {
  SweepReport report{"construction-shape", options.seed, 0, 0, {}};
  Rng rng(options.seed);
  for (int i = 0; i < options.samples; ++i) {
    for (bool clique : {true, false}) {
      const GadgetInstance in = randomGadgetInstance(options, clique, rng);
      const GadgetOutput out = build(in, clique);
      const ShapeReport shape =
          verifyColourfulShape(out, in.h, clique ? GadgetMode::kClique : GadgetMode::kIndependent);
      const bool sized = out.graph.order() == in.g.order() + in.h.order() - in.kPrime &&
                         out.colouring.paletteSize() == in.h.order();
      const bool passed = shape.ok() && sized;
      std::string line = instanceName(in, clique) + " colourful=" +
                         std::to_string(shape.colourfulSubsets) + verdict(passed);
      if (!shape.ok()) line += ": " + shape.violations.front();
      report.record(passed, describeCase(i, line));
    }
  }
  return report;
}

SweepReport verifyCountCliquesStables(const SweepOptions& options) {
  SweepReport report{"count-cliques-stables", options.seed, 0, 0, {}};
  Rng rng(options.seed);
  for (int i = 0; i < options.samples; ++i) {
    for (bool clique : {true, false}) {
      const GadgetInstance in = randomGadgetInstance(options, clique, rng);
      const Count expected = colClique(in.g, in.f, in.kPrime);
      const GadgetOutput canonical = build(in, clique);
      const Count viaCanonical = colSubInd(in.h, canonical.graph, canonical.colouring);
      const GadgetOutput other = build(in, clique, randomPatternColouring(in.h.order(), in.core, rng));
      const Count viaOther = colSubInd(in.h, other.graph, other.colouring);
      const bool passed = expected == viaCanonical && expected == viaOther;
      report.record(passed, describeCase(i, instanceName(in, clique) + " colClique=" +
                                                toDecimal(expected) + " colSubInd=" +
                                                toDecimal(viaCanonical) + "/" +
                                                toDecimal(viaOther) + verdict(passed)));
    }
  }
  return report;
}

SweepReport verifyEmbSubg(const SweepOptions& options) {
  SweepReport report{"emb-subg", options.seed, 0, 0, {}};
  Rng rng(options.seed);
  const auto zoo = builtInZoo();
  ClassCache cache(zoo);
  for (int i = 0; i < options.samples; ++i) {
    const std::size_t index = static_cast<std::size_t>(i) % zoo.size();
    const int n = rng.between(2, std::max(2, std::min(options.maxN, 7)));
    const Graph g = randomGraph(n, 1, 2, rng);
    int k = rng.between(2, 4);
    while (k > 1 && cache.get(index, k).empty()) --k;
    const LabelledClass& cls = cache.get(index, k);
    if (cls.empty()) {
      report.record(true, describeCase(i, zoo[index].name() + " empty class ok"));
      continue;
    }
    const LabelledGraph& member = cls.members()[rng.below(cls.size())];
    const LabelledClass clsH = restrictToIsomorphic(cls, member.graph());
    const Count alpha = alphaH(cls, member);
    const Colouring f = randomColouring(n, k, rng);
    const Count plain = strEmbClass(clsH, g, options.enumeration);
    const Count coloured = colStrEmbClass(clsH, g, f, options.enumeration);
    const bool passed = plain == alpha * subInd(member.graph(), g) &&
                        coloured == alpha * colSubInd(member.graph(), g, f);
    report.record(passed, describeCase(i, zoo[index].name() + " k=" + std::to_string(k) +
                                              " n=" + std::to_string(n) + " alpha=" +
                                              toDecimal(alpha) + " StrEmb=" + toDecimal(plain) +
                                              " ColStrEmb=" + toDecimal(coloured) + verdict(passed)));
  }
  return report;
}

SweepReport verifyUncolCol(const SweepOptions& options) {
  SweepReport report{"uncol-col", options.seed, 0, 0, {}};
  Rng rng(options.seed);
  const auto zoo = builtInZoo();
  ClassCache cache(zoo);
  for (int i = 0; i < options.samples; ++i) {
    const std::size_t index = static_cast<std::size_t>(i) % zoo.size();
    const int k = rng.between(1, 3);
    const int n = rng.between(k, std::max(k, options.maxN));
    const Graph g = randomGraph(n, 1, 2, rng);
    const Colouring f = randomColouring(n, k, rng);
    BruteForceOracle oracle(zoo[index], options.enumeration);
    const ReductionResult r = decolour(zoo[index], g, f, oracle);
    const Count direct = colStrEmbClass(cache.get(index, k), g, f, options.enumeration);
    const bool passed = r.count == direct && r.transcript.oracleCalls() == (std::size_t{1} << k);
    report.record(passed, describeCase(i, zoo[index].name() + " k=" + std::to_string(k) +
                                              " n=" + std::to_string(n) + " decolour=" +
                                              toDecimal(r.count) + " direct=" + toDecimal(direct) +
                                              " calls=" +
                                              std::to_string(r.transcript.oracleCalls()) +
                                              verdict(passed)));
  }
  return report;
}

SweepReport verifyComplement(const SweepOptions& options) {
  SweepReport report{"complement", options.seed, 0, 0, {}};
  Rng rng(options.seed);
  const auto zoo = builtInZoo();
  ClassCache cache(zoo);
  for (int i = 0; i < options.samples; ++i) {
    const std::size_t index = static_cast<std::size_t>(i) % zoo.size();
    const int k = rng.between(1, 4);
    const int n = rng.between(k, std::max(k, options.maxN));
    const Graph g = randomGraph(n, 1, 2, rng);
    BruteForceOracle oracle(complementFamily(zoo[index]), options.enumeration);
    const ReductionResult r = complementReduce(zoo[index], g, k, oracle);
    const Count direct = strEmbClass(cache.get(index, k), g, options.enumeration);
    const bool passed = r.count == direct && r.transcript.oracleCalls() == 1;
    report.record(passed, describeCase(i, zoo[index].name() + " k=" + std::to_string(k) +
                                              " n=" + std::to_string(n) + " reduced=" +
                                              toDecimal(r.count) + " direct=" + toDecimal(direct) +
                                              verdict(passed)));
  }
  return report;
}

SweepReport verifyRamsey(const SweepOptions& options) {
  SweepReport report{"ramsey", options.seed, 0, 0, {}};
  Rng rng(options.seed);
  for (int i = 0; i < options.samples; ++i) {
    const int n = rng.between(16, 24);
    const Graph g = randomGraph(n, 1, 2, rng);
    const RamseyReport r = verifyCorollary(g, 2);
    const HomogeneousSearch s = findHomogeneousSet(g, 2);
    const bool symmetric = countInteresting(g, 3) == countInteresting(complement(g), 3);
    const bool passed = r.applicable && r.holds && s.found && !s.invariantViolated && symmetric;
    report.record(passed, describeCase(i, "k=2 n=" + std::to_string(n) + " interesting=" +
                                              toDecimal(r.interestingCount) + " bound=" +
                                              toFraction(r.lowerBound) + verdict(passed)));
  }
  return report;
}

SweepReport verifySolveMcc(const SweepOptions& options) {
  SweepReport report{"solve-mcc", options.seed, 0, 0, {}};
  Rng rng(options.seed);
  constexpr int kMax = 5;
  for (int i = 0; i < options.samples; ++i) {
    const int kPrime = rng.between(1, 3);
    const int n = rng.between(kPrime, std::max(kPrime, options.maxN));
    const Graph g = randomGraph(n, 1, 2, rng);
    const Colouring f = randomColouring(n, kPrime, rng);
    PropertyFamily phi = cliqueProperty();
    switch (i % 3) {
      case 1:
        phi = edgeIntervalProperty(std::vector<IntervalTemplate>{{{0, true}, {0, true}}});
        break;
      case 2: {
        const int m = rng.between(kPrime, 4);
        const bool clique = rng.chance(1, 2);
        phi = classIsoProperty({randomGraphWithCore(m, randomSubset(m, kPrime, rng), clique, rng)});
        break;
      }
      default:
        break;
    }
    std::string line = phi.name() + " k'=" + std::to_string(kPrime) + " n=" + std::to_string(n);
    const Count expected = colClique(g, f, kPrime);
    try {
      const ReductionResult r = solveMulticolourClique(g, f, phi, kMax, options.enumeration);
      const bool passed = r.count == expected && r.transcript.withinBound();
      report.record(passed, describeCase(i, line + " pipeline=" + toDecimal(r.count) +
                                                " colClique=" + toDecimal(expected) +
                                                verdict(passed)));
    } catch (const Error& e) {
      report.record(false, describeCase(i, line + " FAILED: " + e.code() + ": " + e.what()));
    }
  }
  return report;
}

const std::vector<std::string>& sweepNames() {
  static const std::vector<std::string> names = {
      "construction-shape", "count-cliques-stables", "emb-subg", "uncol-col",
      "complement",         "ramsey",                "solve-mcc"};
  return names;
}

SweepReport runSweep(const std::string& name, const SweepOptions& options) {
  if (name == "construction-shape") return verifyConstructionShape(options);
  if (name == "count-cliques-stables") return verifyCountCliquesStables(options);
  if (name == "emb-subg") return verifyEmbSubg(options);
  if (name == "uncol-col") return verifyUncolCol(options);
  if (name == "complement") return verifyComplement(options);
  if (name == "ramsey") return verifyRamsey(options);
  if (name == "solve-mcc") return verifySolveMcc(options);
  throw DomainError("unknown verification suite '" + name + "'");
}

}  // namespace pcount
