#include "pcount/counting.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>

#include "parallel.hpp"
#include "pcount/caps.hpp"
#include "pcount/errors.hpp"

namespace pcount {
namespace {

std::string memberKey(const LabelledGraph& member) {
  std::string key(1, static_cast<char>(member.size()));
  for (Vertex v = 0; v < member.size(); ++v) {
    const Bits row = member.graph().neighbours(v);
    key.append(reinterpret_cast<const char*>(&row), sizeof(row));
  }
  for (Vertex v : member.labelling()) key.push_back(static_cast<char>(v));
  return key;
}

std::uint64_t prefixOf(std::uint64_t mask, int length) {
  const int bits = pairCount(length);
  return bits >= 64 ? mask : mask & ((std::uint64_t{1} << bits) - 1);
}

// Depth-first walk over injective tuples with an incrementally built label
// mask. Optional filters: a class (pruned by label prefix), a colouring
// (colours must not repeat) and a final predicate on the complete mask.
class TupleWalker {
 public:
  TupleWalker(const Graph& g, int k, const LabelledClass* cls, const LabelMaskPredicate* accept,
              const Colouring* colouring)
      : g_(g), k_(k), cls_(cls), accept_(accept), colouring_(colouring) {}

  std::uint64_t fromLeading(Vertex v) { return step(0, v, 0, 0, 0); }

  std::uint64_t all() {
    if (k_ == 0) return finish(0);
    std::uint64_t total = 0;
    for (Vertex v = 0; v < g_.order(); ++v) total += fromLeading(v);
    return total;
  }

 private:
  std::uint64_t finish(std::uint64_t mask) const {
    if (cls_ != nullptr && !cls_->containsLabelMask(mask)) return 0;
    if (accept_ != nullptr && !(*accept_)(mask)) return 0;
    return 1;
  }

  // Places v at position `depth` and continues.
  std::uint64_t step(int depth, Vertex v, Bits used, std::uint64_t mask, Bits coloursUsed) {
    if (colouring_ != nullptr) {
      const Bits c = bit(colouring_->colour(v) - 1);
      if (coloursUsed & c) return 0;
      coloursUsed |= c;
    }
    const Bits nbrs = g_.neighbours(v);
    for (int i = 0; i < depth; ++i) {
      if ((nbrs >> tuple_[i]) & 1U) mask |= std::uint64_t{1} << pairIndex(i, depth);
    }
    if (cls_ != nullptr && !cls_->containsPrefix(depth + 1, mask)) return 0;
    tuple_[depth] = v;
    used |= bit(v);
    if (depth + 1 == k_) return finish(mask);
    std::uint64_t total = 0;
    for (Bits rest = g_.vertices() & ~used; rest != 0; rest &= rest - 1) {
      total += step(depth + 1, std::countr_zero(rest), used, mask, coloursUsed);
    }
    return total;
  }

  const Graph& g_;
  int k_;
  const LabelledClass* cls_;
  const LabelMaskPredicate* accept_;
  const Colouring* colouring_;
  std::array<Vertex, kMaxLabels> tuple_{};
};

std::uint64_t walkTuples(const Graph& g, int k, const LabelledClass* cls,
                         const LabelMaskPredicate* accept, const Colouring* colouring,
                         EnumerationOptions options) {
  requireWithinCap(k, labelCap(), "tuple length");
  if (k > g.order()) return 0;
  if (k == 0) return TupleWalker(g, k, cls, accept, colouring).all();
  return internal::sumOverLeadingVertex(g.order(), options.workers, [&](int v) {
    return TupleWalker(g, k, cls, accept, colouring).fromLeading(v);
  });
}

void requireColouringCovers(const Colouring& f, const Graph& g) {
  if (f.vertexCount() != g.order()) {
    throw DomainError("colouring covers " + std::to_string(f.vertexCount()) +
                      " vertices but the graph has " + std::to_string(g.order()));
  }
}

// Calls visit(subsetMask) for every k-subset of 0..n-1.
template <typename Visit>
void forEachSubset(int n, int k, Visit visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    Bits mask = 0;
    for (int i : idx) mask |= bit(i);
    visit(mask);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Calls visit(subsetMask) for every colourful subset of g under f.
template <typename Visit>
void forEachColourful(const Colouring& f, Visit visit) {
  const int k = f.paletteSize();
  std::vector<Bits> classes(static_cast<std::size_t>(k), 0);
  for (int c = 1; c <= k; ++c) classes[c - 1] = f.preimage(bit(c - 1));
  auto recurse = [&](auto& self, int colour, Bits chosen) -> void {
    if (colour == k) {
      visit(chosen);
      return;
    }
    for (Bits rest = classes[colour]; rest != 0; rest &= rest - 1) {
      self(self, colour + 1, chosen | (rest & -rest));
    }
  };
  recurse(recurse, 0, 0);
}

}  // namespace

LabelledClass::LabelledClass(int k) : k_(k) {
  requireWithinCap(k, labelCap(), "labelled class size");
  prefixes_.resize(static_cast<std::size_t>(k) + 1);
}

bool LabelledClass::insert(const LabelledGraph& member) {
  if (member.size() != k_) {
    throw DomainError("class on " + std::to_string(k_) + " labels cannot hold a " +
                      std::to_string(member.size()) + "-vertex member");
  }
  if (!keys_.insert(memberKey(member)).second) return false;
  members_.push_back(member);
  const std::uint64_t mask = member.labelMask();
  if (masks_.insert(mask).second) {
    for (int len = 0; len <= k_; ++len) prefixes_[len].insert(prefixOf(mask, len));
  }
  return true;
}

bool LabelledClass::contains(const LabelledGraph& member) const {
  return member.size() == k_ && keys_.contains(memberKey(member));
}

bool LabelledClass::containsPrefix(int length, std::uint64_t prefix) const {
  return prefixes_[length].contains(prefix);
}

LabelledClass restrictToIsomorphic(const LabelledClass& cls, const Graph& h) {
  LabelledClass out(cls.k());
  for (const LabelledGraph& member : cls.members()) {
    if (isIsomorphic(member.graph(), h)) out.insert(member);
  }
  return out;
}

Count strEmb(const Graph& h, const Graph& g) {
  const int k = h.order();
  requireWithinCap(k, labelCap(), "pattern size");
  if (k > g.order()) return 0;
  std::array<Vertex, kMaxLabels> image{};
  auto place = [&](auto& self, int i, Bits used) -> std::uint64_t {
    if (i == k) return 1;
    Bits candidates = g.vertices() & ~used;
    for (int j = 0; j < i && candidates != 0; ++j) {
      const Bits nbrs = g.neighbours(image[j]);
      candidates &= h.adjacent(i, j) ? nbrs : ~nbrs;
    }
    std::uint64_t total = 0;
    for (; candidates != 0; candidates &= candidates - 1) {
      image[i] = std::countr_zero(candidates);
      total += self(self, i + 1, used | bit(image[i]));
    }
    return total;
  };
  return place(place, 0, 0);
}

Count subInd(const Graph& h, const Graph& g) {
  const int k = h.order();
  requireWithinCap(k, labelCap(), "pattern size");
  std::uint64_t total = 0;
  forEachSubset(g.order(), k, [&](Bits subset) {
    if (isIsomorphic(g.induced(subset), h)) ++total;
  });
  return total;
}

Count strEmbClass(const LabelledClass& cls, const Graph& g, EnumerationOptions options) {
  if (cls.empty()) return 0;
  return walkTuples(g, cls.k(), &cls, nullptr, nullptr, options);
}

Count colStrEmbClass(const LabelledClass& cls, const Graph& g, const Colouring& f,
                     EnumerationOptions options) {
  if (f.paletteSize() != cls.k()) {
    throw DomainError("palette size " + std::to_string(f.paletteSize()) + " differs from k = " +
                      std::to_string(cls.k()));
  }
  requireColouringCovers(f, g);
  if (cls.empty()) return 0;
  return walkTuples(g, cls.k(), &cls, nullptr, &f, options);
}

Count countAcceptedTuples(const Graph& g, int k, const LabelMaskPredicate& accept,
                          const Colouring* colouring, EnumerationOptions options) {
  if (colouring != nullptr) requireColouringCovers(*colouring, g);
  return walkTuples(g, k, nullptr, &accept, colouring, options);
}

Count colSubInd(const Graph& h, const Graph& g, const Colouring& f) {
  if (f.paletteSize() != h.order()) {
    throw DomainError("palette size " + std::to_string(f.paletteSize()) +
                      " differs from pattern size " + std::to_string(h.order()));
  }
  requireWithinCap(h.order(), labelCap(), "pattern size");
  requireColouringCovers(f, g);
  std::uint64_t total = 0;
  forEachColourful(f, [&](Bits subset) {
    if (isIsomorphic(g.induced(subset), h)) ++total;
  });
  return total;
}

Count colClique(const Graph& g, const Colouring& f, int k) {
  if (f.paletteSize() != k) {
    throw DomainError("palette size " + std::to_string(f.paletteSize()) + " differs from k = " +
                      std::to_string(k));
  }
  requireWithinCap(k, labelCap(), "clique size");
  requireColouringCovers(f, g);
  std::vector<Bits> classes(static_cast<std::size_t>(k));
  for (int c = 1; c <= k; ++c) classes[c - 1] = f.preimage(bit(c - 1));
  auto extend = [&](auto& self, int colour, Bits common) -> std::uint64_t {
    if (colour == k) return 1;
    std::uint64_t total = 0;
    for (Bits rest = classes[colour] & common; rest != 0; rest &= rest - 1) {
      total += self(self, colour + 1, common & g.neighbours(std::countr_zero(rest)));
    }
    return total;
  };
  return extend(extend, 0, g.vertices());
}

Count subIndClass(const LabelledClass& cls, const Graph& g) {
  std::set<CanonicalForm> forms;
  for (const LabelledGraph& member : cls.members()) forms.insert(canonicalForm(member.graph()));
  std::uint64_t total = 0;
  if (forms.empty()) return 0;
  forEachSubset(g.order(), cls.k(), [&](Bits subset) {
    if (forms.contains(canonicalForm(g.induced(subset)))) ++total;
  });
  return total;
}

Count alphaH(const LabelledGraph& member, const LabelMaskPredicate& inClass) {
  const int k = member.size();
  requireWithinCap(k, labelCap(), "alpha_H label count");
  const std::uint64_t base = member.labelMask();
  if (!inClass(base)) throw DomainError("member is not in the class");
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::uint64_t alpha = 0;
  do {
    std::uint64_t permuted = 0;
    for (int j = 1; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        if ((base >> pairIndex(sigma[i], sigma[j])) & 1U) {
          permuted |= std::uint64_t{1} << pairIndex(i, j);
        }
      }
    }
    if (inClass(permuted)) ++alpha;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return alpha;
}

Count alphaH(const LabelledClass& cls, const LabelledGraph& member) {
  if (member.size() != cls.k()) throw DomainError("member size differs from the class's k");
  return alphaH(member, [&](std::uint64_t mask) { return cls.containsLabelMask(mask); });
}

}  // namespace pcount
