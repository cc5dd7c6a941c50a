#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "pcount/graph.hpp"
#include "pcount/numeric.hpp"

namespace pcount {

struct EnumerationOptions {
  // Tuple loops are split across this many threads by first vertex.
  int workers = 1;
};

// A finite set of labelled graphs on k vertices, deduplicated by
// (graph, labelling). Membership queries used by the counting routines go
// through label masks: an injective tuple theta is counted iff the label mask
// of G[theta(1), ..., theta(k)] is the label mask of some member.
class LabelledClass {
 public:
  explicit LabelledClass(int k);

  int k() const { return k_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<LabelledGraph>& members() const { return members_; }

  // Returns false (and leaves the class unchanged) for duplicates.
  bool insert(const LabelledGraph& member);
  bool contains(const LabelledGraph& member) const;
  bool containsLabelMask(std::uint64_t mask) const { return masks_.contains(mask); }
  // True if some member's label mask restricted to labels 0..length-1 equals
  // `prefix`.
  bool containsPrefix(int length, std::uint64_t prefix) const;
  std::size_t distinctLabelMasks() const { return masks_.size(); }

 private:
  int k_;
  std::vector<LabelledGraph> members_;
  std::unordered_set<std::string> keys_;
  std::unordered_set<std::uint64_t> masks_;
  std::vector<std::unordered_set<std::uint64_t>> prefixes_;
};

// cls^H: members whose graph is isomorphic to h.
LabelledClass restrictToIsomorphic(const LabelledClass& cls, const Graph& h);

Count strEmb(const Graph& h, const Graph& g);
Count subInd(const Graph& h, const Graph& g);
Count strEmbClass(const LabelledClass& cls, const Graph& g, EnumerationOptions options = {});
Count colStrEmbClass(const LabelledClass& cls, const Graph& g, const Colouring& f,
                     EnumerationOptions options = {});
Count colSubInd(const Graph& h, const Graph& g, const Colouring& f);
Count colClique(const Graph& g, const Colouring& f, int k);
// SubInd(cls, g): k-subsets U with g[U] isomorphic to some member's graph.
Count subIndClass(const LabelledClass& cls, const Graph& g);

// Membership of a k-label mask in some class of labelled graphs.
using LabelMaskPredicate = std::function<bool(std::uint64_t)>;

// Injective k-tuples of g whose label mask satisfies `accept`; when `colouring`
// is given only tuples with a colourful image are counted. No prefix pruning.
Count countAcceptedTuples(const Graph& g, int k, const LabelMaskPredicate& accept,
                          const Colouring* colouring = nullptr, EnumerationOptions options = {});

// alpha_H: permutations sigma of [k] for which relabelling `member` by sigma
// lands in the class. Since the relabelled graph is isomorphic to H this is
// the same as asking for a witness in cls^H.
Count alphaH(const LabelledClass& cls, const LabelledGraph& member);
Count alphaH(const LabelledGraph& member, const LabelMaskPredicate& inClass);

}  // namespace pcount
