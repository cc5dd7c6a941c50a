#include "pcount/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "pcount/caps.hpp"
#include "pcount/errors.hpp"

namespace pcount {
namespace {

void checkPatternColouring(const Graph& h, VertexSubset core, const std::vector<int>& fH) {
  const int size = h.order();
  if (static_cast<int>(fH.size()) != size) {
    throw DomainError("f_H must colour all " + std::to_string(size) + " pattern vertices");
  }
  Bits seen = 0;
  for (Vertex u = 0; u < size; ++u) {
    const int c = fH[u];
    if (c < 1 || c > size || (seen & bit(c - 1))) throw DomainError("f_H is not injective onto 1..|V_H|");
    seen |= bit(c - 1);
    if (core.contains(u) && c > core.size()) {
      throw DomainError("f_H must colour the core with 1.." + std::to_string(core.size()));
    }
  }
}

void checkGadgetInputs(const Graph& g, const Colouring& f, const Graph& h, VertexSubset core) {
  if (f.vertexCount() != g.order()) throw DomainError("colouring does not cover the host graph");
  if ((core.mask() & ~h.vertices()) != 0) throw DomainError("core is not a subset of V(H)");
  if (core.size() != f.paletteSize()) {
    throw DomainError("core has " + std::to_string(core.size()) + " vertices but the palette has " +
                      std::to_string(f.paletteSize()) + " colours");
  }
}

// Lexicographic k-subsets of 0..n-1; visit returns true to stop.
template <typename Visit>
bool anySubset(int n, int k, Visit visit) {
  if (k < 0 || k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Bits mask = 0;
    for (int i : idx) mask |= bit(i);
    if (visit(mask)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::pair<Vertex, Vertex>> pairsWithin(VertexSubset s) {
  std::vector<std::pair<Vertex, Vertex>> out;
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) out.emplace_back(members[i], members[j]);
  }
  return out;
}

// Tries every non-empty set of changes to the core's internal pairs; returns
// true if one of them lands in the class.
bool someChangeStaysInClass(const Graph& h, VertexSubset core, bool present,
                            const IsoMembership& cls) {
  const auto pairs = pairsWithin(core);
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t changes = 1; changes < limit; ++changes) {
    Graph modified = h;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if ((changes >> p) & 1U) modified.setEdge(pairs[p].first, pairs[p].second, present);
    }
    if (cls.containsIsomorphicTo(modified)) return true;
  }
  return false;
}

std::optional<VertexSubset> findGoodCore(const LabelledGraph& member, const IsoMembership& cls,
                                         int kPrime, GadgetMode mode) {
  const int k = member.size();
  if (cls.k() != k) throw DomainError("membership index is for a different k");
  if (!cls.family()(k, member)) {
    throw DomainError("member does not satisfy " + cls.family().name() + " at k = " +
                      std::to_string(k));
  }
  const Graph& h = member.graph();
  std::optional<VertexSubset> found;
  anySubset(k, kPrime, [&](Bits mask) {
    const VertexSubset core(mask);
    const bool shaped = mode == GadgetMode::kClique ? isClique(h, core) : isIndependent(h, core);
    if (!shaped) return false;
    // clique mode deletes edges (present=false); independent mode adds them
    if (someChangeStaysInClass(h, core, mode == GadgetMode::kIndependent, cls)) return false;
    found = core;
    return true;
  });
  return found;
}

}  // namespace

const char* toString(GadgetMode mode) {
  return mode == GadgetMode::kClique ? "clique" : "indep";
}

int GadgetOutput::hostOrder() const {
  return static_cast<int>(std::count_if(origins.begin(), origins.end(), [](const VertexOrigin& o) {
    return o.role == VertexRole::kHost;
  }));
}

std::vector<int> canonicalPatternColouring(const Graph& h, VertexSubset core) {
  std::vector<int> fH(static_cast<std::size_t>(h.order()), 0);
  int next = 1;
  for (Vertex u : core.members()) fH[u] = next++;
  for (Vertex u = 0; u < h.order(); ++u) {
    if (!core.contains(u)) fH[u] = next++;
  }
  return fH;
}

GadgetOutput buildCliqueGadget(const Graph& g, const Colouring& f, const Graph& h, VertexSubset u) {
  checkGadgetInputs(g, f, h, u);
  return buildCliqueGadget(g, f, h, u, canonicalPatternColouring(h, u));
}

GadgetOutput buildCliqueGadget(const Graph& g, const Colouring& f, const Graph& h, VertexSubset u,
                               const std::vector<int>& fH) {
  checkGadgetInputs(g, f, h, u);
  if (!isClique(h, u)) throw PreconditionError("U does not induce a clique in H");
  checkPatternColouring(h, u, fH);

  const int hostN = g.order();
  const int outN = hostN + h.order() - u.size();
  requireWithinCap(outN, kMaxVertices, "gadget vertex count");

  GadgetOutput out;
  out.mode = GadgetMode::kClique;
  out.core = u;
  out.fH = fH;
  out.graph = Graph(outN);
  std::vector<int> colours(static_cast<std::size_t>(outN));
  std::vector<Vertex> outputOf(static_cast<std::size_t>(h.order()), -1);
  std::vector<Vertex> coreByColour(static_cast<std::size_t>(u.size()) + 1, -1);

  for (Vertex v = 0; v < hostN; ++v) {
    out.origins.push_back({VertexRole::kHost, v});
    colours[v] = f.colour(v);
  }
  for (Vertex w = 0; w < h.order(); ++w) {
    if (u.contains(w)) {
      coreByColour[fH[w]] = w;
      continue;
    }
    outputOf[w] = static_cast<Vertex>(out.origins.size());
    colours[outputOf[w]] = fH[w];
    out.origins.push_back({VertexRole::kPattern, w});
  }

  for (auto [a, b] : g.edges()) out.graph.addEdge(a, b);
  for (auto [a, b] : h.edges()) {
    if (outputOf[a] >= 0 && outputOf[b] >= 0) out.graph.addEdge(outputOf[a], outputOf[b]);
  }
  for (Vertex v = 0; v < hostN; ++v) {
    const Vertex partner = coreByColour[f.colour(v)];
    for (Vertex w = 0; w < h.order(); ++w) {
      if (outputOf[w] >= 0 && h.adjacent(partner, w)) out.graph.addEdge(v, outputOf[w]);
    }
  }
  out.colouring = Colouring(h.order(), std::move(colours));
  return out;
}

GadgetOutput buildIndepGadget(const Graph& g, const Colouring& f, const Graph& h, VertexSubset w) {
  checkGadgetInputs(g, f, h, w);
  return buildIndepGadget(g, f, h, w, canonicalPatternColouring(h, w));
}

GadgetOutput buildIndepGadget(const Graph& g, const Colouring& f, const Graph& h, VertexSubset w,
                              const std::vector<int>& fH) {
  checkGadgetInputs(g, f, h, w);
  if (!isIndependent(h, w)) throw PreconditionError("W does not induce an independent set in H");
  GadgetOutput out = buildCliqueGadget(g, f, complement(h), w, fH);
  out.graph = complement(out.graph);
  out.mode = GadgetMode::kIndependent;
  return out;
}

ShapeReport verifyColourfulShape(const GadgetOutput& out, const Graph& h, GadgetMode mode) {
  const int palette = out.colouring.paletteSize();
  if (palette != h.order() || static_cast<int>(out.fH.size()) != h.order()) {
    throw DomainError("gadget palette does not match the pattern size");
  }
  requireWithinCap(palette, labelCap(), "gadget palette");
  std::vector<Vertex> patternOf(static_cast<std::size_t>(palette) + 1, -1);
  for (Vertex u = 0; u < h.order(); ++u) patternOf[out.fH[u]] = u;

  std::vector<std::vector<Vertex>> classes(static_cast<std::size_t>(palette));
  for (Vertex v = 0; v < out.graph.order(); ++v) {
    classes[out.colouring.colour(v) - 1].push_back(v);
  }
  double total = 1;
  for (const auto& cls : classes) total *= static_cast<double>(cls.size());
  if (total > 1e7) throw CapacityError("too many colourful subsets to enumerate");

  Bits hostMask = 0;
  for (Vertex v = 0; v < out.graph.order(); ++v) {
    if (out.origins[v].role == VertexRole::kHost) hostMask |= bit(v);
  }

  ShapeReport report;
  auto flag = [&](std::string message) {
    if (report.violations.size() < 100) report.violations.push_back(std::move(message));
  };
  std::vector<Vertex> chosen(static_cast<std::size_t>(palette));
  auto check = [&] {
    ++report.colourfulSubsets;
    Bits xMask = 0;
    for (Vertex x : chosen) xMask |= bit(x);
    int changes = 0;
    bool clean = true;
    for (int c = 0; c < palette; ++c) {
      for (int d = c + 1; d < palette; ++d) {
        const Vertex a = patternOf[c + 1];
        const Vertex b = patternOf[d + 1];
        const bool inGadget = out.graph.adjacent(chosen[c], chosen[d]);
        const bool inPattern = h.adjacent(a, b);
        const bool insideCore = out.core.contains(a) && out.core.contains(b);
        if (!insideCore) {
          if (inGadget != inPattern) {
            clean = false;
            flag("pattern pair (" + std::to_string(a) + "," + std::to_string(b) +
                 ") outside the core is not reproduced");
          }
          continue;
        }
        if (inGadget == inPattern) continue;
        const bool deletion = inPattern && !inGadget;
        if (deletion == (mode == GadgetMode::kClique)) {
          ++changes;
        } else {
          clean = false;
          flag(std::string("core pair (") + std::to_string(a) + "," + std::to_string(b) + ") " +
               (deletion ? "loses" : "gains") + " an edge in " + toString(mode) + " mode");
        }
      }
    }
    const Graph hostPart = out.graph.induced(xMask & hostMask);
    const int hostPairs = pairCount(hostPart.order());
    const int expected =
        mode == GadgetMode::kClique ? hostPairs - hostPart.edgeCount() : hostPart.edgeCount();
    if (clean && changes != expected) {
      flag("changed core pairs " + std::to_string(changes) + " but host part accounts for " +
           std::to_string(expected));
    }
    const bool inducesPattern = isIsomorphic(out.graph.induced(xMask), h);
    if (inducesPattern) ++report.inducingPattern;
    if (clean && inducesPattern != (changes == 0)) {
      flag("isomorphism to H disagrees with the change count");
    }
  };
  auto recurse = [&](auto& self, int colour) -> void {
    if (colour == palette) {
      check();
      return;
    }
    for (Vertex v : classes[colour]) {
      chosen[colour] = v;
      self(self, colour + 1);
    }
  };
  recurse(recurse, 0);
  return report;
}

std::optional<VertexSubset> isGoodForCliques(const LabelledGraph& member,
                                             const PropertyFamily& phi, int kPrime) {
  return isGoodForCliques(member, IsoMembership(phi, member.size()), kPrime);
}

std::optional<VertexSubset> isGoodForCliques(const LabelledGraph& member,
                                             const IsoMembership& cls, int kPrime) {
  return findGoodCore(member, cls, kPrime, GadgetMode::kClique);
}

std::optional<VertexSubset> isGoodForIndepSets(const LabelledGraph& member,
                                               const PropertyFamily& phi, int kPrime) {
  return isGoodForIndepSets(member, IsoMembership(phi, member.size()), kPrime);
}

std::optional<VertexSubset> isGoodForIndepSets(const LabelledGraph& member,
                                               const IsoMembership& cls, int kPrime) {
  return findGoodCore(member, cls, kPrime, GadgetMode::kIndependent);
}

}  // namespace pcount
