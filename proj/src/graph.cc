#include "pcount/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "pcount/caps.hpp"
#include "pcount/errors.hpp"

namespace pcount {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw DomainError("negative vertex count");
  requireWithinCap(n, kMaxVertices, "vertex count");
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
  for (auto [u, v] : edges) addEdge(u, v);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.rows_[v] = lowMask(n) & ~bit(v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.addEdge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.addEdge(n - 1, 0);
  return g;
}

Graph Graph::star(int n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.addEdge(0, v);
  return g;
}

int Graph::degree(Vertex v) const { return std::popcount(rows_[v]); }

int Graph::edgeCount() const {
  int twice = 0;
  for (Bits row : rows_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Bits rest = rows_[u] & ~lowMask(u + 1); rest != 0; rest &= rest - 1) {
      out.emplace_back(u, std::countr_zero(rest));
    }
  }
  return out;
}

void Graph::checkVertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for " +
                      std::to_string(n_) + "-vertex graph");
  }
}

void Graph::addEdge(Vertex u, Vertex v) { setEdge(u, v, true); }
void Graph::removeEdge(Vertex u, Vertex v) { setEdge(u, v, false); }

void Graph::setEdge(Vertex u, Vertex v, bool present) {
  checkVertex(u);
  checkVertex(v);
  if (u == v) throw DomainError("self-loop on vertex " + std::to_string(u));
  if (present) {
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  } else {
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
  }
}

Graph Graph::induced(std::span<const Vertex> order) const {
  Graph out(static_cast<int>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i) checkVertex(order[i]);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (order[i] != order[j] && adjacent(order[i], order[j])) {
        out.rows_[i] |= bit(static_cast<int>(j));
        out.rows_[j] |= bit(static_cast<int>(i));
      }
    }
  }
  return out;
}

Graph Graph::induced(Bits members) const { return induced(VertexSubset(members).members()); }

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.addEdge(u, v);
    }
  }
  return out;
}

VertexSubset VertexSubset::of(std::span<const Vertex> members) {
  Bits mask = 0;
  for (Vertex v : members) {
    if (v < 0 || v >= kMaxVertices) throw DomainError("vertex id out of range");
    if (mask & bit(v)) throw DomainError("duplicate vertex " + std::to_string(v) + " in subset");
    mask |= bit(v);
  }
  return VertexSubset(mask);
}

int VertexSubset::size() const { return std::popcount(mask_); }

std::vector<Vertex> VertexSubset::members() const {
  std::vector<Vertex> out;
  for (Bits rest = mask_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

bool isClique(const Graph& g, VertexSubset s) {
  for (Vertex v : s.members()) {
    if ((g.neighbours(v) & s.mask()) != (s.mask() & ~bit(v))) return false;
  }
  return true;
}

bool isIndependent(const Graph& g, VertexSubset s) {
  for (Vertex v : s.members()) {
    if (g.neighbours(v) & s.mask()) return false;
  }
  return true;
}

Colouring::Colouring(int paletteSize, std::vector<int> colours)
    : palette_(paletteSize), colours_(std::move(colours)) {
  if (palette_ < 0) throw DomainError("negative palette size");
  for (std::size_t v = 0; v < colours_.size(); ++v) {
    if (colours_[v] < 1 || colours_[v] > palette_) {
      throw DomainError("vertex " + std::to_string(v) + " has colour " +
                        std::to_string(colours_[v]) + " outside 1.." + std::to_string(palette_));
    }
  }
}

Bits Colouring::preimage(Bits colourSet) const {
  Bits out = 0;
  for (std::size_t v = 0; v < colours_.size(); ++v) {
    if ((colourSet >> (colours_[v] - 1)) & 1U) out |= bit(static_cast<int>(v));
  }
  return out;
}

bool isColourful(VertexSubset s, const Colouring& f) {
  if (s.size() != f.paletteSize()) return false;
  Bits seen = 0;
  for (Vertex v : s.members()) {
    if (v >= f.vertexCount()) return false;
    const Bits c = bit(f.colour(v) - 1);
    if (seen & c) return false;
    seen |= c;
  }
  return true;
}

LabelledGraph::LabelledGraph(Graph graph, std::vector<Vertex> labelling)
    : graph_(std::move(graph)), labelling_(std::move(labelling)) {
  if (static_cast<int>(labelling_.size()) != graph_.order()) {
    throw DomainError("labelling has " + std::to_string(labelling_.size()) + " labels for a " +
                      std::to_string(graph_.order()) + "-vertex graph");
  }
  Bits seen = 0;
  for (Vertex v : labelling_) {
    if (v < 0 || v >= graph_.order() || (seen & bit(v))) {
      throw DomainError("labelling is not a bijection onto the vertex set");
    }
    seen |= bit(v);
  }
}

LabelledGraph LabelledGraph::fromLabelMask(int k, std::uint64_t mask) {
  Graph g(k);
  for (int j = 1; j < k; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((mask >> pairIndex(i, j)) & 1U) g.addEdge(i, j);
    }
  }
  std::vector<Vertex> identity(static_cast<std::size_t>(k));
  std::iota(identity.begin(), identity.end(), 0);
  return LabelledGraph(std::move(g), std::move(identity));
}

std::uint64_t LabelledGraph::labelMask() const {
  std::uint64_t mask = 0;
  const int k = size();
  for (int j = 1; j < k; ++j) {
    for (int i = 0; i < j; ++i) {
      if (graph_.adjacent(labelling_[i], labelling_[j])) mask |= std::uint64_t{1} << pairIndex(i, j);
    }
  }
  return mask;
}

Graph LabelledGraph::labelGraph() const { return graph_.permuted(labelling_); }

LabelledGraph inducedLabelled(const Graph& g, std::span<const Vertex> tuple) {
  Bits seen = 0;
  for (Vertex v : tuple) {
    if (v < 0 || v >= g.order()) {
      throw InvalidTupleError("vertex " + std::to_string(v) + " out of range");
    }
    if (seen & bit(v)) throw InvalidTupleError("vertex " + std::to_string(v) + " repeated");
    seen |= bit(v);
  }
  std::vector<Vertex> sorted(tuple.begin(), tuple.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> labelling;
  labelling.reserve(tuple.size());
  for (Vertex v : tuple) {
    labelling.push_back(static_cast<Vertex>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                            sorted.begin()));
  }
  return LabelledGraph(g.induced(sorted), std::move(labelling));
}

namespace {

// Backtracking over bijections a -> b. Vertices of `a` are placed in an order
// that keeps each new vertex attached to already placed ones where possible;
// candidates are filtered by degree and by adjacency to every placed vertex.
class BijectionSearch {
 public:
  BijectionSearch(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.order()) {
    image_.assign(n_, -1);
    for (Vertex v = 0; v < n_; ++v) {
      const int d = b.degree(v);
      if (static_cast<int>(degreeClass_.size()) <= d) degreeClass_.resize(d + 1, 0);
      degreeClass_[d] |= bit(v);
    }
    Bits placed = 0;
    for (int step = 0; step < n_; ++step) {
      Vertex best = -1;
      int bestLinks = -1;
      int bestDegree = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (placed & bit(v)) continue;
        const int links = std::popcount(a.neighbours(v) & placed);
        const int degree = a.degree(v);
        if (links > bestLinks || (links == bestLinks && degree > bestDegree)) {
          best = v;
          bestLinks = links;
          bestDegree = degree;
        }
      }
      order_.push_back(best);
      placed |= bit(best);
    }
  }

  bool exists() {
    stopAtFirst_ = true;
    return search(0, 0) > 0;
  }

  std::uint64_t count() {
    stopAtFirst_ = false;
    return search(0, 0);
  }

 private:
  std::uint64_t search(int pos, Bits used) {
    if (pos == n_) return 1;
    const Vertex v = order_[pos];
    const int d = a_.degree(v);
    if (d >= static_cast<int>(degreeClass_.size())) return 0;
    Bits candidates = degreeClass_[d] & ~used;
    for (int i = 0; i < pos && candidates != 0; ++i) {
      const Vertex u = order_[i];
      const Bits image_nbrs = b_.neighbours(image_[u]);
      candidates &= a_.adjacent(u, v) ? image_nbrs : ~image_nbrs;
    }
    std::uint64_t total = 0;
    for (; candidates != 0; candidates &= candidates - 1) {
      const Vertex w = std::countr_zero(candidates);
      image_[v] = w;
      total += search(pos + 1, used | bit(w));
      if (stopAtFirst_ && total > 0) break;
    }
    image_[v] = -1;
    return total;
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
  bool stopAtFirst_ = false;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<Bits> degreeClass_;
};

std::vector<int> sortedDegrees(const Graph& g) {
  std::vector<int> out;
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

// Branch and bound for the least adjacency string. Twins (vertices whose
// neighbourhoods agree outside each other) are interchangeable at any depth,
// so only one of each twin group is expanded per level.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) { order_.resize(n_); }

  void run() { search(0, 0, 0); }
  std::uint64_t bestCode() const { return best_; }
  const std::vector<Vertex>& bestOrder() const { return bestOrder_; }

 private:
  void search(int depth, Bits used, std::uint64_t code) {
    if (depth == n_) {
      if (!haveBest_ || code < best_) {
        best_ = code;
        bestOrder_ = order_;
        haveBest_ = true;
      }
      return;
    }
    const int prefixBits = depth * (depth + 1) / 2;
    const std::uint64_t prefixMask = prefixBits == 0 ? 0 : ~lowMask(64 - prefixBits);
    Bits tried = 0;
    for (Bits rest = ~used & lowMask(n_); rest != 0; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      bool twin = false;
      for (Bits t = tried; t != 0; t &= t - 1) {
        const Vertex u = std::countr_zero(t);
        if ((g_.neighbours(u) & ~bit(v)) == (g_.neighbours(v) & ~bit(u))) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried |= bit(v);
      std::uint64_t next = code;
      for (int i = 0; i < depth; ++i) {
        if (g_.adjacent(order_[i], v)) next |= std::uint64_t{1} << (63 - pairIndex(i, depth));
      }
      if (haveBest_ && (next & prefixMask) > (best_ & prefixMask)) continue;
      order_[depth] = v;
      search(depth + 1, used | bit(v), next);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> order_;
  std::vector<Vertex> bestOrder_;
  std::uint64_t best_ = 0;
  bool haveBest_ = false;
};

struct CanonicalResult {
  CanonicalForm form;
  std::vector<Vertex> order;
};

CanonicalResult computeCanonical(const Graph& g) {
  requireWithinCap(g.order(), labelCap(), "canonical form vertex count");
  CanonicalSearch search(g);
  search.run();
  return {CanonicalForm{g.order(), search.bestCode()}, search.bestOrder()};
}

std::string cacheKey(const Graph& g) {
  std::string key(1, static_cast<char>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    const Bits row = g.neighbours(v);
    key.append(reinterpret_cast<const char*>(&row), sizeof(row));
  }
  return key;
}

CanonicalResult cachedCanonical(const Graph& g) {
  static std::mutex mutex;
  static std::unordered_map<std::string, CanonicalResult> cache;
  const std::string key = cacheKey(g);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  CanonicalResult result = computeCanonical(g);
  std::lock_guard lock(mutex);
  if (cache.size() > (1U << 16)) cache.clear();
  cache.emplace(key, result);
  return result;
}

}  // namespace

bool isIsomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edgeCount() != b.edgeCount()) return false;
  if (sortedDegrees(a) != sortedDegrees(b)) return false;
  return BijectionSearch(a, b).exists();
}

std::uint64_t countAutomorphisms(const Graph& g) {
  requireWithinCap(g.order(), labelCap(), "automorphism vertex count");
  return BijectionSearch(g, g).count();
}

CanonicalForm canonicalForm(const Graph& g) { return cachedCanonical(g).form; }

std::vector<Vertex> canonicalOrdering(const Graph& g) { return cachedCanonical(g).order; }

Graph canonicalGraph(const Graph& g) { return g.permuted(canonicalOrdering(g)); }

Graph graphFromCanonical(const CanonicalForm& form) {
  Graph g(form.n);
  for (int j = 1; j < form.n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((form.code >> (63 - pairIndex(i, j))) & 1U) g.addEdge(i, j);
    }
  }
  return g;
}

const std::vector<Graph>& isomorphismClasses(int k) {
  requireWithinCap(k, sweepCap(), "isomorphism-class sweep size");
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  std::set<std::uint64_t> codes;
  const std::uint64_t subsets = std::uint64_t{1} << pairCount(k);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    codes.insert(computeCanonical(LabelledGraph::fromLabelMask(k, mask).graph()).form.code);
  }
  std::vector<Graph> reps;
  reps.reserve(codes.size());
  for (std::uint64_t code : codes) reps.push_back(graphFromCanonical({k, code}));
  return cache.emplace(k, std::move(reps)).first->second;
}

}  // namespace pcount
