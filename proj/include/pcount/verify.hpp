#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "pcount/counting.hpp"
#include "pcount/graph.hpp"
#include "pcount/properties.hpp"
#include "pcount/random.hpp"

namespace pcount {

struct SweepOptions {
  int samples = 100;
  std::uint64_t seed = 1;
  int maxN = 8;
  EnumerationOptions enumeration;
};

struct SweepReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases = 0;
  int failures = 0;
  // One line per case, in generation order.
  std::vector<std::string> lines;

  bool ok() const { return failures == 0; }
  void record(bool passed, std::string line);
  std::string toText() const;
  nlohmann::ordered_json toJson() const;
};

// Named built-in properties used by the sweeps: clique, matching, regular,
// max-degree-1, two edge-interval families and a classIso list.
std::vector<PropertyFamily> builtInZoo();

// Random graph on m vertices whose vertices `core` form a clique (or an
// independent set when `clique` is false).
Graph randomGraphWithCore(int m, VertexSubset core, bool clique, Rng& rng);
VertexSubset randomSubset(int n, int size, Rng& rng);
// An admissible f_H: the core gets a permutation of 1..k', the rest of
// k'+1..m.
std::vector<int> randomPatternColouring(int m, VertexSubset core, Rng& rng);

SweepReport verifyConstructionShape(const SweepOptions& options);
SweepReport verifyCountCliquesStables(const SweepOptions& options);
SweepReport verifyEmbSubg(const SweepOptions& options);
SweepReport verifyUncolCol(const SweepOptions& options);
SweepReport verifyComplement(const SweepOptions& options);
SweepReport verifyRamsey(const SweepOptions& options);
SweepReport verifySolveMcc(const SweepOptions& options);

const std::vector<std::string>& sweepNames();
// Throws DomainError for unknown names.
SweepReport runSweep(const std::string& name, const SweepOptions& options);

}  // namespace pcount
