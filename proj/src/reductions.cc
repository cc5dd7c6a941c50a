#include "pcount/reductions.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>

#include "pcount/caps.hpp"
#include "pcount/errors.hpp"

namespace pcount {
namespace {

std::string colourSetName(Bits colours, int k) {
  std::string out = "{";
  bool first = true;
  for (int c = 1; c <= k; ++c) {
    if (!((colours >> (c - 1)) & 1U)) continue;
    if (!first) out += ",";
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

std::string subsetName(VertexSubset s) {
  std::string out = "{";
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    out += (i > 0 ? "," : "") + std::to_string(members[i] + 1);
  }
  return out + "}";
}

}  // namespace

void ReductionTranscript::addLocal(std::string op, int param, std::string query, Count count) {
  steps.push_back({std::move(op), param, std::move(query), std::move(count), false});
}

void ReductionTranscript::addOracle(std::string op, int param, std::string query, Count count) {
  steps.push_back({"oracle:" + std::move(op), param, std::move(query), std::move(count), true});
}

std::size_t ReductionTranscript::oracleCalls() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [](const Step& s) { return s.oracle; }));
}

bool ReductionTranscript::withinBound() const {
  return std::all_of(steps.begin(), steps.end(),
                     [&](const Step& s) { return !s.oracle || s.param <= paramBound; });
}

std::string ReductionTranscript::toText() const {
  std::ostringstream out;
  for (const Step& s : steps) {
    out << s.op << " param=" << s.param << " count=" << toDecimal(s.count);
    if (!s.query.empty()) out << "  # " << s.query;
    out << '\n';
  }
  out << "final " << toDecimal(finalCount) << '\n';
  return out.str();
}

nlohmann::ordered_json ReductionTranscript::toJson() const {
  nlohmann::ordered_json out;
  out["steps"] = nlohmann::ordered_json::array();
  for (const Step& s : steps) {
    out["steps"].push_back({{"op", s.op}, {"param", s.param}, {"count", toDecimal(s.count)}});
  }
  out["final"] = toDecimal(finalCount);
  return out;
}

BruteForceOracle::BruteForceOracle(PropertyFamily phi, EnumerationOptions options)
    : phi_(std::move(phi)), options_(options) {}

Count BruteForceOracle::query(const Graph& g, int k) {
  requireWithinCap(k, labelCap(), "oracle parameter");
  std::mutex mutex;
  const bool locking = options_.workers > 1;
  LabelMaskPredicate accept;
  if (pairCount(k) <= 22) {
    auto& memo = denseMemo_[k];
    if (memo.empty()) memo.assign(std::size_t{1} << pairCount(k), -1);
    accept = [&, k](std::uint64_t mask) {
      std::unique_lock lock(mutex, std::defer_lock);
      if (locking) lock.lock();
      signed char& slot = memo[mask];
      if (slot < 0) slot = phi_.evaluateMask(k, mask) ? 1 : 0;
      return slot == 1;
    };
  } else {
    auto& memo = sparseMemo_[k];
    accept = [&, k](std::uint64_t mask) {
      std::unique_lock lock(mutex, std::defer_lock);
      if (locking) lock.lock();
      auto it = memo.find(mask);
      if (it == memo.end()) it = memo.emplace(mask, phi_.evaluateMask(k, mask)).first;
      return it->second;
    };
  }
  return countAcceptedTuples(g, k, accept, nullptr, options_);
}

ReductionResult complementReduce(const PropertyFamily& phi, const Graph& g, int k,
                                 Oracle& complementOracle) {
  const auto start = std::chrono::steady_clock::now();
  requireWithinCap(k, labelCap(), "parameter k");
  ReductionResult result;
  ReductionTranscript& t = result.transcript;
  t.paramBound = k;
  const Count total = binomial(g.order(), k) * factorial(k);
  t.addLocal("total-tuples", k, "C(n,k) k! with n = " + std::to_string(g.order()), total);
  const Count other = complementOracle.query(g, k);
  t.addOracle(complementOracle.name(), k, "StrEmb(H_{not " + phi.name() + "}, G)", other);
  result.count = total - other;
  t.finalCount = result.count;
  t.wallClock = std::chrono::steady_clock::now() - start;
  return result;
}

ReductionResult decolour(const PropertyFamily& phi, const Graph& g, const Colouring& f,
                         Oracle& oracle) {
  const auto start = std::chrono::steady_clock::now();
  const int k = f.paletteSize();
  requireWithinCap(k, labelCap(), "palette size");
  if (f.vertexCount() != g.order()) throw DomainError("colouring does not cover the graph");
  ReductionResult result;
  ReductionTranscript& t = result.transcript;
  t.paramBound = k;
  Count sum = 0;
  for (Bits colours = 0; colours < bit(k); ++colours) {
    const Graph part = g.induced(f.preimage(colours));
    const Count n = oracle.query(part, k);
    t.addOracle(oracle.name(), k,
                "N_" + colourSetName(colours, k) + " for " + phi.name() + " on G[f^-1(I)] with " +
                    std::to_string(part.order()) + " vertices",
                n);
    if ((k - std::popcount(colours)) % 2 == 0) {
      sum += n;
    } else {
      sum -= n;
    }
  }
  result.count = sum;
  t.finalCount = sum;
  t.wallClock = std::chrono::steady_clock::now() - start;
  return result;
}

std::optional<GoodWitness> findGoodWitness(const PropertyFamily& phi, int kPrime, int kMax) {
  return findGoodWitness(phi, kPrime, kMax, kPrime);
}

std::optional<GoodWitness> findGoodWitness(const PropertyFamily& phi, int kPrime, int kMax,
                                           int kMin) {
  if (kPrime < 0) throw DomainError("k' must be non-negative");
  requireWithinCap(kMax, sweepCap(), "witness search bound kMax");
  for (int k = std::max({kMin, kPrime, 0}); k <= kMax; ++k) {
    const IsoMembership cls(phi, k);
    for (const Graph& h : isomorphismClasses(k)) {
      const auto member = cls.satisfyingLabelling(h);
      if (!member) continue;
      if (auto u = isGoodForCliques(*member, cls, kPrime)) {
        return GoodWitness{k, *member, *u, GadgetMode::kClique};
      }
      if (auto w = isGoodForIndepSets(*member, cls, kPrime)) {
        return GoodWitness{k, *member, *w, GadgetMode::kIndependent};
      }
    }
  }
  return std::nullopt;
}

Rational boundedLayersBound(int k, int kPrime) {
  const std::int64_t ramsey = std::int64_t{1} << (2 * kPrime);
  Count denominator = 1;
  if (kPrime >= 2) denominator = binomial(k - 2, kPrime - 2) * binomial(kPrime, 2);
  if (denominator == 0) return 0;
  Rational bound(fallingFactorial(k, kPrime), fallingFactorial(ramsey, kPrime));
  return bound / Rational(denominator);
}

BoundedLayersReport checkBoundedLayersCondition(const PropertyFamily& phi, int k, int kPrime) {
  if (kPrime < 1 || kPrime > k) throw DomainError("need 1 <= k' <= k");
  if (2 * kPrime >= 62) throw CapacityError("k' too large for 2^(2k')");
  BoundedLayersReport report;
  report.k = k;
  report.kPrime = kPrime;
  report.r = densitySpectrum(phi, k).values.size();
  report.bound = boundedLayersBound(k, kPrime);
  report.holds = Rational(static_cast<long long>(report.r)) <= report.bound;
  report.emptyClass = report.r == 0;
  const std::int64_t threshold = std::int64_t{1} << (2 * kPrime);
  report.applicable = k >= threshold;
  if (!report.applicable) {
    report.note = "k = " + std::to_string(k) + " < 2^(2k') = " + std::to_string(threshold);
  } else if (report.emptyClass) {
    report.note = "class is empty; the inequality holds vacuously";
  }
  return report;
}

IntervalWitness intervalWitness(const IntervalSpec& spec, int kPrime) {
  const int k = spec.k();
  requireWithinCap(k, labelCap(), "interval witness size");
  if (kPrime < 0 || kPrime > k) throw InfeasibleInstanceError("need 0 <= k' <= k");
  if (!spec.isProper()) {
    throw InfeasibleInstanceError("the union of the intervals must be non-empty and proper");
  }
  IntervalWitness out;
  out.effective = spec;
  const int top = spec.maxEdges();
  if (2 * spec.unionSize() > top + 1) {
    out.effective = spec.complement();
    out.complemented = true;
  }
  const int corePairs = pairCount(kPrime);
  if (2 * ((out.effective.intervalCount() + 1) * corePairs + 1) >= top + 1) {
    throw InfeasibleInstanceError("(|I|+1) C(k',2) + 1 < (C(k,2)+1)/2 fails for " +
                                  std::to_string(out.effective.intervalCount()) +
                                  " intervals at k = " + std::to_string(k));
  }
  const IntervalSpec gaps = out.effective.complement();
  const auto& runs = gaps.intervals();
  auto j = std::find_if(runs.begin(), runs.end(),
                        [&](const Interval& iv) { return iv.hi - iv.lo + 1 >= corePairs + 1; });
  if (j == runs.end()) throw InternalConsistencyError("no gap interval of the required length");

  Graph h(k);
  Bits core = 0;
  if (j->lo != 0) {
    // d1 edges, all avoiding an independent set on the last k' vertices
    out.mode = GadgetMode::kIndependent;
    out.edges = j->lo - 1;
    core = lowMask(k) & ~lowMask(k - kPrime);
    int placed = 0;
    for (Vertex a = 0; a < k && placed < out.edges; ++a) {
      for (Vertex b = a + 1; b < k && placed < out.edges; ++b) {
        if ((core & bit(a)) && (core & bit(b))) continue;
        h.addEdge(a, b);
        ++placed;
      }
    }
  } else {
    // d2 edges, starting with a clique on the first k' vertices
    out.mode = GadgetMode::kClique;
    out.edges = j->hi + 1;
    core = lowMask(kPrime);
    int placed = 0;
    for (Vertex a = 0; a < kPrime; ++a) {
      for (Vertex b = a + 1; b < kPrime; ++b, ++placed) h.addEdge(a, b);
    }
    for (Vertex a = 0; a < k && placed < out.edges; ++a) {
      for (Vertex b = a + 1; b < k && placed < out.edges; ++b) {
        if (h.adjacent(a, b)) continue;
        h.addEdge(a, b);
        ++placed;
      }
    }
  }
  if (h.edgeCount() != out.edges || !out.effective.contains(out.edges)) {
    throw InternalConsistencyError("interval witness has the wrong edge count");
  }
  std::vector<Vertex> identity(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) identity[i] = i;
  out.member = LabelledGraph(std::move(h), std::move(identity));
  out.core = VertexSubset(core);
  return out;
}

ReductionResult solveMulticolourClique(const Graph& g, const Colouring& f,
                                       const PropertyFamily& phi, int kMax, Oracle& oracle) {
  const auto start = std::chrono::steady_clock::now();
  const int kPrime = f.paletteSize();
  const auto witness = findGoodWitness(phi, kPrime, kMax);
  if (!witness) {
    throw WitnessNotFoundError("no member of " + phi.name() + " with k <= " +
                               std::to_string(kMax) + " is good for " + std::to_string(kPrime) +
                               "-cliques or independent sets");
  }
  ReductionResult result;
  ReductionTranscript& t = result.transcript;
  t.paramBound = kMax;
  const int k = witness->k;
  t.addLocal("find-witness", k,
             std::string(toString(witness->mode)) + " core " + subsetName(witness->core) +
                 " in a graph with " + std::to_string(witness->member.graph().edgeCount()) +
                 " edges",
             witness->member.graph().edgeCount());

  const Graph& h = witness->member.graph();
  const GadgetOutput gadget = witness->mode == GadgetMode::kClique
                                  ? buildCliqueGadget(g, f, h, witness->core)
                                  : buildIndepGadget(g, f, h, witness->core);
  t.addLocal("build-gadget", k,
             std::to_string(gadget.graph.order()) + " vertices, palette " +
                 std::to_string(gadget.colouring.paletteSize()),
             gadget.graph.order());

  const Count alpha = alphaH(phi, witness->member);
  t.addLocal("alpha", k, "alpha_H over the witness class", alpha);

  ReductionResult coloured = decolour(phi, gadget.graph, gadget.colouring, oracle);
  for (auto& step : coloured.transcript.steps) t.steps.push_back(std::move(step));
  if (alpha == 0 || coloured.count % alpha != 0) {
    throw InternalConsistencyError("colourful embedding count " + toDecimal(coloured.count) +
                                   " is not divisible by alpha_H = " + toDecimal(alpha));
  }
  result.count = coloured.count / alpha;
  t.addLocal("divide", k, "ColStrEmb / alpha_H", result.count);
  t.finalCount = result.count;
  t.wallClock = std::chrono::steady_clock::now() - start;
  return result;
}

ReductionResult solveMulticolourClique(const Graph& g, const Colouring& f,
                                       const PropertyFamily& phi, int kMax,
                                       EnumerationOptions options) {
  BruteForceOracle oracle(phi, options);
  return solveMulticolourClique(g, f, phi, kMax, oracle);
}

}  // namespace pcount
