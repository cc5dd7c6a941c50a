#include "pcount/properties.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pcount/caps.hpp"
#include "pcount/errors.hpp"

namespace pcount {
namespace {

std::vector<Vertex> identity(int k) {
  std::vector<Vertex> out(static_cast<std::size_t>(k));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::string describe(const std::vector<IntervalTemplate>& intervals) {
  auto bound = [](const IntervalBound& b) {
    if (!b.fromTop) return std::to_string(b.value);
    return b.value == 0 ? std::string("max") : "max-" + std::to_string(b.value);
  };
  std::string out = "edge_interval[";
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (i > 0) out += ",";
    out += "[" + bound(intervals[i].lo) + "," + bound(intervals[i].hi) + "]";
  }
  return out + "]";
}

}  // namespace

PropertyFamily::PropertyFamily(std::string name, Predicate predicate, bool symmetric)
    : name_(std::move(name)),
      predicate_(std::make_shared<const Predicate>(std::move(predicate))),
      symmetric_(symmetric) {}

bool PropertyFamily::evaluateMask(int k, std::uint64_t labelMask) const {
  return (*this)(k, LabelledGraph::fromLabelMask(k, labelMask));
}

IntervalSpec IntervalSpec::make(int k, std::vector<Interval> raw) {
  const int top = pairCount(k);
  for (const Interval& iv : raw) {
    if (iv.lo > iv.hi || iv.lo < 0 || iv.hi > top) {
      throw DomainError("interval [" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) +
                        "] is not inside {0.." + std::to_string(top) + "}");
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  std::vector<Interval> merged;
  for (const Interval& iv : raw) {
    if (!merged.empty() && iv.lo <= merged.back().hi + 1) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  return IntervalSpec(k, std::move(merged));
}

IntervalSpec IntervalSpec::fromValues(int k, const std::vector<int>& values) {
  std::vector<Interval> raw;
  for (int d : values) raw.push_back({d, d});
  return make(k, std::move(raw));
}

bool IntervalSpec::contains(int d) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [d](const Interval& iv) { return iv.lo <= d && d <= iv.hi; });
}

int IntervalSpec::unionSize() const {
  int total = 0;
  for (const Interval& iv : intervals_) total += iv.hi - iv.lo + 1;
  return total;
}

bool IntervalSpec::isProper() const { return unionSize() > 0 && unionSize() < maxEdges() + 1; }

IntervalSpec IntervalSpec::complement() const {
  std::vector<Interval> gaps;
  int next = 0;
  for (const Interval& iv : intervals_) {
    if (iv.lo > next) gaps.push_back({next, iv.lo - 1});
    next = iv.hi + 1;
  }
  if (next <= maxEdges()) gaps.push_back({next, maxEdges()});
  return IntervalSpec(k_, std::move(gaps));
}

LabelledClass enumerateClass(const PropertyFamily& phi, int k) {
  requireWithinCap(k, labelledSweepCap(), "labelled sweep size");
  LabelledClass cls(k);
  const std::uint64_t subsets = std::uint64_t{1} << pairCount(k);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const Graph h = LabelledGraph::fromLabelMask(k, mask).graph();
    std::vector<Vertex> pi = identity(k);
    const bool all = phi.symmetric() && phi(k, LabelledGraph(h, pi));
    if (phi.symmetric() && !all) continue;
    do {
      LabelledGraph member(h, pi);
      if (all || phi(k, member)) cls.insert(member);
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
  return cls;
}

DensitySpectrum densitySpectrum(const PropertyFamily& phi, int k) {
  requireWithinCap(k, sweepCap(), "spectrum size");
  std::set<int> values;
  const std::uint64_t subsets = std::uint64_t{1} << pairCount(k);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const int edges = std::popcount(mask);
    if (values.contains(edges)) continue;
    if (phi.evaluateMask(k, mask)) values.insert(edges);
  }
  return {k, std::vector<int>(values.begin(), values.end())};
}

PropertyFamily complementFamily(const PropertyFamily& phi) {
  return PropertyFamily(
      "not(" + phi.name() + ")",
      [phi](int k, const LabelledGraph& member) { return !phi(k, member); }, phi.symmetric());
}

PropertyFamily edgeComplementFamily(const PropertyFamily& phi) {
  return PropertyFamily(
      "edge_complement(" + phi.name() + ")",
      [phi](int k, const LabelledGraph& member) {
        return phi(k, LabelledGraph(complement(member.graph()), member.labelling()));
      },
      phi.symmetric());
}

PropertyFamily cliqueProperty() {
  return PropertyFamily(
      "clique",
      [](int k, const LabelledGraph& member) { return member.graph().edgeCount() == pairCount(k); },
      true);
}

PropertyFamily constantProperty(bool value) {
  return PropertyFamily(
      value ? "true" : "false", [value](int, const LabelledGraph&) { return value; }, true);
}

PropertyFamily classIsoProperty(const std::vector<Graph>& graphs) {
  std::map<int, Graph> bySize;
  std::string name = "class_iso[";
  for (const Graph& g : graphs) {
    if (!bySize.emplace(g.order(), g).second) {
      throw DomainError("class_iso needs at most one graph per vertex count; two have " +
                        std::to_string(g.order()) + " vertices");
    }
    name += (bySize.size() > 1 ? "," : "") + std::to_string(g.order());
  }
  name += "]";
  return PropertyFamily(
      name,
      [bySize = std::move(bySize)](int k, const LabelledGraph& member) {
        auto it = bySize.find(k);
        return it != bySize.end() && isIsomorphic(member.graph(), it->second);
      },
      true);
}

PropertyFamily subHProperty(const std::vector<LabelledGraph>& patterns) {
  std::map<int, LabelledGraph> bySize;
  for (const LabelledGraph& p : patterns) {
    if (!bySize.emplace(p.size(), p).second) {
      throw DomainError("sub_h needs at most one pattern per vertex count; two have " +
                        std::to_string(p.size()) + " vertices");
    }
  }
  return PropertyFamily(
      "sub_h",
      [bySize = std::move(bySize)](int k, const LabelledGraph& member) {
        auto it = bySize.find(k);
        if (it == bySize.end()) return false;
        const LabelledGraph& pattern = it->second;
        // label of each pattern vertex: pi_k^{-1}
        std::vector<int> labelOf(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) labelOf[pattern.labelling()[i]] = i;
        const auto& pi = member.labelling();
        for (auto [u, v] : pattern.graph().edges()) {
          if (!member.graph().adjacent(pi[labelOf[u]], pi[labelOf[v]])) return false;
        }
        return true;
      },
      false);
}

PropertyFamily matchingProperty() {
  return PropertyFamily(
      "matching",
      [](int k, const LabelledGraph& member) {
        if (k % 2 != 0) return false;
        const auto& pi = member.labelling();
        for (int i = 0; i + 1 < k; i += 2) {
          if (!member.graph().adjacent(pi[i], pi[i + 1])) return false;
        }
        return true;
      },
      false);
}

PropertyFamily edgeIntervalProperty(std::vector<IntervalTemplate> intervals) {
  std::string name = describe(intervals);
  return PropertyFamily(
      std::move(name),
      [intervals = std::move(intervals)](int k, const LabelledGraph& member) {
        const int d = member.graph().edgeCount();
        return std::any_of(intervals.begin(), intervals.end(), [&](const IntervalTemplate& t) {
          return t.lo.resolve(k) <= d && d <= t.hi.resolve(k);
        });
      },
      true);
}

PropertyFamily edgeIntervalProperty(const IntervalSpec& spec) {
  std::string name = "edge_interval@" + std::to_string(spec.k()) + "[";
  for (std::size_t i = 0; i < spec.intervals().size(); ++i) {
    const Interval& iv = spec.intervals()[i];
    name += (i > 0 ? ",[" : "[") + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
  }
  name += "]";
  return PropertyFamily(
      std::move(name),
      [spec](int k, const LabelledGraph& member) {
        return k == spec.k() && spec.contains(member.graph().edgeCount());
      },
      true);
}

PropertyFamily regularProperty() {
  return PropertyFamily(
      "regular",
      [](int k, const LabelledGraph& member) {
        for (Vertex v = 1; v < k; ++v) {
          if (member.graph().degree(v) != member.graph().degree(0)) return false;
        }
        return true;
      },
      true);
}

PropertyFamily maxDegreeProperty(int maxDegree) {
  return PropertyFamily(
      "max_degree[" + std::to_string(maxDegree) + "]",
      [maxDegree](int k, const LabelledGraph& member) {
        for (Vertex v = 0; v < k; ++v) {
          if (member.graph().degree(v) > maxDegree) return false;
        }
        return true;
      },
      true);
}

IsoMembership::IsoMembership(PropertyFamily phi, int k) : phi_(std::move(phi)), k_(k) {
  requireWithinCap(k, labelCap(), "membership label count");
}

std::optional<LabelledGraph> IsoMembership::satisfyingLabelling(const Graph& h) const {
  if (h.order() != k_) return std::nullopt;
  std::vector<Vertex> pi = identity(k_);
  if (phi_.symmetric()) {
    LabelledGraph member(h, pi);
    if (phi_(k_, member)) return member;
    return std::nullopt;
  }
  do {
    LabelledGraph member(h, pi);
    if (phi_(k_, member)) return member;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

bool IsoMembership::containsIsomorphicTo(const Graph& h) const {
  if (h.order() != k_) return false;
  const CanonicalForm form = canonicalForm(h);
  if (auto it = memo_.find(form); it != memo_.end()) return it->second;
  const bool found = satisfyingLabelling(h).has_value();
  memo_.emplace(form, found);
  return found;
}

Count alphaH(const PropertyFamily& phi, const LabelledGraph& member) {
  const int k = member.size();
  return alphaH(member, [&](std::uint64_t mask) { return phi.evaluateMask(k, mask); });
}

}  // namespace pcount
