#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcount/graph.hpp"
#include "pcount/properties.hpp"

namespace pcount {

enum class GadgetMode { kClique, kIndependent };

const char* toString(GadgetMode mode);

enum class VertexRole { kHost, kPattern };

struct VertexOrigin {
  VertexRole role = VertexRole::kHost;
  // Vertex id in the host graph G or in the pattern H.
  Vertex original = 0;
};

// Result of gluing a k'-coloured host graph G into a pattern H in place of the
// vertex set `core` (a clique U in clique mode, an independent set W
// otherwise). Output vertices 0..|V_G|-1 are the host vertices in order; the
// remaining vertices are V_H minus the core, ascending by pattern id.
struct GadgetOutput {
  Graph graph;
  Colouring colouring;
  // fH[u] is the colour of pattern vertex u; injective onto 1..|V_H| and
  // mapping the core onto 1..k'.
  std::vector<int> fH;
  VertexSubset core;
  GadgetMode mode = GadgetMode::kClique;
  std::vector<VertexOrigin> origins;

  int hostOrder() const;
};

// Sorts the core ascending onto colours 1..k', then the rest ascending.
std::vector<int> canonicalPatternColouring(const Graph& h, VertexSubset core);

// constr(G, f_G, H, U) with the canonical f_H, or the supplied one.
GadgetOutput buildCliqueGadget(const Graph& g, const Colouring& f, const Graph& h, VertexSubset u);
GadgetOutput buildCliqueGadget(const Graph& g, const Colouring& f, const Graph& h, VertexSubset u,
                               const std::vector<int>& fH);
// complement(constr(G, f_G, complement(H), W)), same colouring.
GadgetOutput buildIndepGadget(const Graph& g, const Colouring& f, const Graph& h, VertexSubset w);
GadgetOutput buildIndepGadget(const Graph& g, const Colouring& f, const Graph& h, VertexSubset w,
                              const std::vector<int>& fH);

struct ShapeReport {
  std::uint64_t colourfulSubsets = 0;
  std::uint64_t inducingPattern = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every colourful subset X of the gadget: mapping each vertex to the
// pattern vertex of the same f_H colour must reproduce H except on pairs
// inside the core, where only deletions (clique mode) or additions
// (independent mode) are allowed, and their number must equal the non-edges
// (resp. edges) of the gadget on X intersected with the host vertices.
ShapeReport verifyColourfulShape(const GadgetOutput& out, const Graph& h, GadgetMode mode);

// Smallest U (lexicographically) of size k' inducing a clique in the member
// such that no non-empty deletion of U-internal edges yields a graph
// isomorphic to a member of H_{phi_k}.
std::optional<VertexSubset> isGoodForCliques(const LabelledGraph& member,
                                             const PropertyFamily& phi, int kPrime);
std::optional<VertexSubset> isGoodForCliques(const LabelledGraph& member,
                                             const IsoMembership& cls, int kPrime);
std::optional<VertexSubset> isGoodForIndepSets(const LabelledGraph& member,
                                               const PropertyFamily& phi, int kPrime);
std::optional<VertexSubset> isGoodForIndepSets(const LabelledGraph& member,
                                               const IsoMembership& cls, int kPrime);

}  // namespace pcount
