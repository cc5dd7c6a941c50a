#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pcount {

using Vertex = int;
using Bits = std::uint64_t;

inline constexpr Bits bit(int i) { return Bits{1} << i; }
inline constexpr Bits lowMask(int n) { return n >= 64 ? ~Bits{0} : bit(n) - 1; }

// Finite simple undirected graph on vertices 0..n-1 with one adjacency word
// per vertex. Symmetric and irreflexive by construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  static Graph complete(int n);
  static Graph edgeless(int n) { return Graph(n); }
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int n);

  int order() const { return n_; }
  Bits vertices() const { return lowMask(n_); }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  Bits neighbours(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const;
  int edgeCount() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  void addEdge(Vertex u, Vertex v);
  void removeEdge(Vertex u, Vertex v);
  void setEdge(Vertex u, Vertex v, bool present);

  // Subgraph induced by `order`, renumbered so order[i] becomes vertex i.
  Graph induced(std::span<const Vertex> order) const;
  Graph induced(Bits members) const;
  // result.adjacent(i, j) == adjacent(perm[i], perm[j]).
  Graph permuted(std::span<const Vertex> perm) const { return induced(perm); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void checkVertex(Vertex v) const;

  int n_ = 0;
  std::vector<Bits> rows_;
};

Graph complement(const Graph& g);

// Set of vertex ids of some host graph, at most 64 of them.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(Bits mask) : mask_(mask) {}
  static VertexSubset of(std::span<const Vertex> members);

  Bits mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(Vertex v) const { return (mask_ >> v) & 1U; }
  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  Bits mask_ = 0;
};

bool isClique(const Graph& g, VertexSubset s);
bool isIndependent(const Graph& g, VertexSubset s);

// Vertex colouring with colours 1..paletteSize.
class Colouring {
 public:
  Colouring() = default;
  Colouring(int paletteSize, std::vector<int> colours);

  int paletteSize() const { return palette_; }
  int vertexCount() const { return static_cast<int>(colours_.size()); }
  int colour(Vertex v) const { return colours_[v]; }
  const std::vector<int>& colours() const { return colours_; }
  // Vertices coloured with any colour in `colourSet` (bit c-1 for colour c).
  Bits preimage(Bits colourSet) const;

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  int palette_ = 0;
  std::vector<int> colours_;
};

bool isColourful(VertexSubset s, const Colouring& f);

// Index of the unordered label pair {i, j} (0-based, i != j) in a packed
// label-graph mask. Pairs are ordered by larger endpoint, then smaller, so the
// first m(m-1)/2 bits describe the labels 0..m-1.
inline constexpr int pairIndex(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}
inline constexpr int pairCount(int k) { return k * (k - 1) / 2; }

// Labelled graph (H, pi): labelling()[i] is the vertex carrying label i+1.
class LabelledGraph {
 public:
  LabelledGraph() = default;
  LabelledGraph(Graph graph, std::vector<Vertex> labelling);
  // Graph on [k] with the identity labelling whose edges are given by `mask`.
  static LabelledGraph fromLabelMask(int k, std::uint64_t mask);

  int size() const { return graph_.order(); }
  const Graph& graph() const { return graph_; }
  const std::vector<Vertex>& labelling() const { return labelling_; }

  // Bit pairIndex(i, j) set iff labels i+1 and j+1 sit on adjacent vertices.
  // Two labelled graphs share a mask iff they are isomorphic as labelled graphs.
  std::uint64_t labelMask() const;
  // The graph on labels 0..k-1 described by labelMask().
  Graph labelGraph() const;

  friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;

 private:
  Graph graph_;
  std::vector<Vertex> labelling_;
};

// G[v_1, ..., v_k]: H is G induced on the tuple's vertices (kept in ascending
// id order) and pi(i) is the position of v_i there.
LabelledGraph inducedLabelled(const Graph& g, std::span<const Vertex> tuple);

bool isIsomorphic(const Graph& a, const Graph& b);
std::uint64_t countAutomorphisms(const Graph& g);

// Lexicographically least upper-triangle adjacency string over all vertex
// orderings. Bit p of the string sits at bit (63 - p) of `code`, with pairs
// listed in pairIndex order, so integer order is string order.
struct CanonicalForm {
  int n = 0;
  std::uint64_t code = 0;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonicalForm(const Graph& g);
// Ordering achieving the canonical form: canonicalGraph(g) = g.permuted(order).
std::vector<Vertex> canonicalOrdering(const Graph& g);
Graph canonicalGraph(const Graph& g);
Graph graphFromCanonical(const CanonicalForm& form);

// One representative per isomorphism class on k vertices, each in canonical
// form, sorted by ascending canonical code. Cached per k.
const std::vector<Graph>& isomorphismClasses(int k);

}  // namespace pcount
