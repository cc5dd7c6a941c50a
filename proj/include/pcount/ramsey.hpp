#pragma once

#include <cstdint>

#include "json.hpp"

#include "pcount/graph.hpp"
#include "pcount/numeric.hpp"

namespace pcount {

struct HomogeneousSearch {
  VertexSubset set;
  bool found = false;
  bool isClique = false;
  // Nothing was found although n >= 2^(2k), which the Ramsey bound forbids.
  bool invariantViolated = false;
};

// A k-subset inducing a clique or an independent set, if one exists. Cliques
// are searched first; the smaller-degree side first within each search.
HomogeneousSearch findHomogeneousSet(const Graph& g, int k);

// k-subsets of g inducing a complete or an edgeless graph.
Count countInteresting(const Graph& g, int k);

// (2^{2k} - k)! / (2^{2k})! * n! / (n - k)!, exactly.
Rational corollaryBound(std::int64_t n, int k);

struct RamseyReport {
  int k = 0;
  int n = 0;
  Count interestingCount;
  Rational lowerBound;
  bool holds = false;
  // false when n < 2^(2k); holds is still computed but claims nothing.
  bool applicable = false;

  nlohmann::ordered_json toJson() const;
};

RamseyReport verifyCorollary(const Graph& g, int k);

}  // namespace pcount
