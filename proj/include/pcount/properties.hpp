#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcount/counting.hpp"
#include "pcount/graph.hpp"

namespace pcount {

// Phi = (phi_1, phi_2, ...): a predicate on labelled k-vertex graphs for every
// k. Evaluation must be deterministic and depend on (H, pi) only up to
// labelled isomorphism. `symmetric` declares that pi is irrelevant; it is
// trusted for speed and spot-checked in tests.
class PropertyFamily {
 public:
  using Predicate = std::function<bool(int k, const LabelledGraph&)>;

  PropertyFamily(std::string name, Predicate predicate, bool symmetric);

  const std::string& name() const { return name_; }
  bool symmetric() const { return symmetric_; }
  bool operator()(int k, const LabelledGraph& member) const { return (*predicate_)(k, member); }
  bool evaluateMask(int k, std::uint64_t labelMask) const;

 private:
  std::string name_;
  std::shared_ptr<const Predicate> predicate_;
  bool symmetric_;
};

struct Interval {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Disjoint, sorted, non-adjacent integer intervals inside {0..C(k,2)}.
class IntervalSpec {
 public:
  IntervalSpec() = default;
  // Merges overlapping and adjacent intervals; rejects lo > hi and bounds
  // outside {0..C(k,2)} with DomainError.
  static IntervalSpec make(int k, std::vector<Interval> raw);
  static IntervalSpec fromValues(int k, const std::vector<int>& values);

  int k() const { return k_; }
  int maxEdges() const { return pairCount(k_); }
  const std::vector<Interval>& intervals() const { return intervals_; }
  int intervalCount() const { return static_cast<int>(intervals_.size()); }
  bool contains(int d) const;
  int unionSize() const;
  // Non-empty and not the whole range.
  bool isProper() const;
  // Intervals covering {0..C(k,2)} minus the union.
  IntervalSpec complement() const;

  friend bool operator==(const IntervalSpec&, const IntervalSpec&) = default;

 private:
  IntervalSpec(int k, std::vector<Interval> intervals) : k_(k), intervals_(std::move(intervals)) {}
  int k_ = 0;
  std::vector<Interval> intervals_;
};

// An interval bound that is either absolute or an offset below C(k,2), so one
// template describes the whole family (e.g. "complete graphs only").
struct IntervalBound {
  int value = 0;
  bool fromTop = false;
  int resolve(int k) const { return fromTop ? pairCount(k) - value : value; }
};

struct IntervalTemplate {
  IntervalBound lo;
  IntervalBound hi;
};

struct DensitySpectrum {
  int k = 0;
  std::vector<int> values;
};

// H_{phi_k}: every (H, pi) with V(H) = [k] satisfying phi_k. Capped at
// labelledSweepCap() since it materialises up to 2^C(k,2) * k! members.
LabelledClass enumerateClass(const PropertyFamily& phi, int k);
DensitySpectrum densitySpectrum(const PropertyFamily& phi, int k);

// Pointwise negation.
PropertyFamily complementFamily(const PropertyFamily& phi);
// phi'(H, pi) = phi(complement(H), pi).
PropertyFamily edgeComplementFamily(const PropertyFamily& phi);

// Built-ins.
PropertyFamily cliqueProperty();
PropertyFamily constantProperty(bool value);
// At most one graph per vertex count; phi_k is false for sizes not present.
PropertyFamily classIsoProperty(const std::vector<Graph>& graphs);
// Sub(H): one labelled pattern (H_k, pi_k) per size k.
PropertyFamily subHProperty(const std::vector<LabelledGraph>& patterns);
PropertyFamily matchingProperty();
PropertyFamily edgeIntervalProperty(std::vector<IntervalTemplate> intervals);
// True only at k = spec.k().
PropertyFamily edgeIntervalProperty(const IntervalSpec& spec);
PropertyFamily regularProperty();
PropertyFamily maxDegreeProperty(int maxDegree);

// "Is some graph isomorphic to h in H_{phi_k}?", memoised by canonical form.
// Symmetric families are evaluated once; others try every labelling.
class IsoMembership {
 public:
  IsoMembership(PropertyFamily phi, int k);

  const PropertyFamily& family() const { return phi_; }
  int k() const { return k_; }
  bool containsIsomorphicTo(const Graph& h) const;
  // First labelling (in lexicographic order) of h satisfying phi_k.
  std::optional<LabelledGraph> satisfyingLabelling(const Graph& h) const;

 private:
  PropertyFamily phi_;
  int k_;
  mutable std::map<CanonicalForm, bool> memo_;
};

// alpha_H with the class given by a property rather than an enumerated set.
Count alphaH(const PropertyFamily& phi, const LabelledGraph& member);

}  // namespace pcount
