#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "pcount/constructions.hpp"
#include "pcount/counting.hpp"
#include "pcount/numeric.hpp"
#include "pcount/properties.hpp"

namespace pcount {

// Bookkeeping for an fpt Turing reduction: every oracle query with its
// parameter, plus the local steps around them.
struct ReductionTranscript {
  struct Step {
    std::string op;
    int param = 0;
    std::string query;
    Count count;
    bool oracle = false;
  };

  std::vector<Step> steps;
  Count finalCount;
  // Declared bound g(k) on oracle parameters.
  int paramBound = 0;
  std::chrono::nanoseconds wallClock{0};

  void addLocal(std::string op, int param, std::string query, Count count);
  void addOracle(std::string op, int param, std::string query, Count count);
  std::size_t oracleCalls() const;
  bool withinBound() const;

  // One line per step, then the final count. Wall clock is not included.
  std::string toText() const;
  // {"steps":[{"op":..,"param":k,"count":"<decimal>"}],"final":"<decimal>"}
  nlohmann::ordered_json toJson() const;
};

struct ReductionResult {
  Count count;
  ReductionTranscript transcript;
};

// Answers Induced Subgraph With Property(Phi) queries: StrEmb(H_{phi_k}, G).
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual std::string name() const = 0;
  virtual Count query(const Graph& g, int k) = 0;
};

// Enumerates injective tuples and evaluates phi_k on each distinct label mask
// once. Not safe for concurrent use of one instance.
class BruteForceOracle : public Oracle {
 public:
  explicit BruteForceOracle(PropertyFamily phi, EnumerationOptions options = {});
  std::string name() const override { return "brute-force[" + phi_.name() + "]"; }
  Count query(const Graph& g, int k) override;

 private:
  PropertyFamily phi_;
  EnumerationOptions options_;
  std::unordered_map<int, std::vector<signed char>> denseMemo_;
  std::unordered_map<int, std::unordered_map<std::uint64_t, bool>> sparseMemo_;
};

// StrEmb(H_{phi_k}, G) = C(n,k) k! - StrEmb(H_{not phi_k}, G); one oracle
// call to the complement family at parameter k.
ReductionResult complementReduce(const PropertyFamily& phi, const Graph& g, int k,
                                 Oracle& complementOracle);

// ColStrEmb(H_{phi_k}, G, f) by inclusion-exclusion over colour subsets I,
// querying the uncoloured oracle on G[f^{-1}(I)] at parameter k each time.
ReductionResult decolour(const PropertyFamily& phi, const Graph& g, const Colouring& f,
                         Oracle& oracle);

struct GoodWitness {
  int k = 0;
  LabelledGraph member;
  VertexSubset core;
  GadgetMode mode = GadgetMode::kClique;
};

// Ascending k in [max(kMin, kPrime), kMax], isomorphism classes by ascending
// canonical code, clique mode before independent mode.
std::optional<GoodWitness> findGoodWitness(const PropertyFamily& phi, int kPrime, int kMax);
std::optional<GoodWitness> findGoodWitness(const PropertyFamily& phi, int kPrime, int kMax,
                                           int kMin);

struct BoundedLayersReport {
  int k = 0;
  int kPrime = 0;
  std::size_t r = 0;
  Rational bound;
  // false when k < 2^(2k'): the inequality is then not claimed to imply anything.
  bool applicable = false;
  bool holds = false;
  // r == 0: the inequality holds vacuously but no witness can come from an empty class.
  bool emptyClass = false;
  std::string note;
};

// Evaluates r <= (1 / (C(k-2,k'-2) C(k',2))) * ((2^{2k'}-k')! / (2^{2k'})!) * k!/(k-k')!
// exactly, with the two binomial factors taken as 1 when k' < 2.
BoundedLayersReport checkBoundedLayersCondition(const PropertyFamily& phi, int k, int kPrime);
Rational boundedLayersBound(int k, int kPrime);

struct IntervalWitness {
  LabelledGraph member;
  VertexSubset core;
  GadgetMode mode = GadgetMode::kClique;
  bool complemented = false;
  // The spec the witness belongs to (the complement when complemented).
  IntervalSpec effective;
  int edges = 0;
};

// Constructive witness for an edge-interval property at k with |U| = k'.
IntervalWitness intervalWitness(const IntervalSpec& spec, int kPrime);

// Counts colourful k'-cliques of (g, f) through the Phi oracle: find a good
// witness, build the gadget, decolour through the oracle and divide by alpha_H.
ReductionResult solveMulticolourClique(const Graph& g, const Colouring& f,
                                       const PropertyFamily& phi, int kMax, Oracle& oracle);
ReductionResult solveMulticolourClique(const Graph& g, const Colouring& f,
                                       const PropertyFamily& phi, int kMax,
                                       EnumerationOptions options = {});

}  // namespace pcount
