#include "pcount/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <vector>

#include "pcount/caps.hpp"
#include "pcount/errors.hpp"

namespace pcount {
namespace {

constexpr int kMaxRamseyExponent = 30;

std::int64_t ramseyThreshold(int k) {
  if (k > kMaxRamseyExponent) throw DomainError("k too large for 2^(2k)");
  return std::int64_t{1} << (2 * k);
}

std::optional<Bits> searchClique(const Graph& g, int k) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  auto extend = [&](auto& self, Bits chosen, int size, Bits candidates) -> std::optional<Bits> {
    if (size == k) return chosen;
    if (size + std::popcount(candidates) < k) return std::nullopt;
    for (Vertex v : order) {
      if (!((candidates >> v) & 1U)) continue;
      candidates &= ~bit(v);
      if (auto hit = self(self, chosen | bit(v), size + 1, candidates & g.neighbours(v))) {
        return hit;
      }
      if (size + 1 + std::popcount(candidates) < k) break;
    }
    return std::nullopt;
  };
  return extend(extend, 0, 0, g.vertices());
}

std::uint64_t countCliques(const Graph& g, int k) {
  auto extend = [&](auto& self, int size, Bits candidates) -> std::uint64_t {
    if (size == k) return 1;
    std::uint64_t total = 0;
    while (candidates != 0 && size + std::popcount(candidates) >= k) {
      const Vertex v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      total += self(self, size + 1, candidates & g.neighbours(v));
    }
    return total;
  };
  return extend(extend, 0, g.vertices());
}

}  // namespace

HomogeneousSearch findHomogeneousSet(const Graph& g, int k) {
  if (k < 0) throw DomainError("k must be non-negative");
  HomogeneousSearch out;
  if (auto s = searchClique(g, k)) {
    out.set = VertexSubset(*s);
    out.found = true;
    out.isClique = true;
    return out;
  }
  if (auto s = searchClique(complement(g), k)) {
    out.set = VertexSubset(*s);
    out.found = true;
    return out;
  }
  out.invariantViolated = k <= 3 && g.order() >= ramseyThreshold(k);
  return out;
}

Count countInteresting(const Graph& g, int k) {
  if (k < 0) throw DomainError("k must be non-negative");
  requireWithinCap(k, kMaxVertices, "subset size");
  if (k > g.order()) return 0;
  if (k <= 1) return binomial(g.order(), k);
  return Count(countCliques(g, k)) + Count(countCliques(complement(g), k));
}

Rational corollaryBound(std::int64_t n, int k) {
  if (k < 0 || n < k) throw DomainError("need 0 <= k <= n");
  const std::int64_t m = ramseyThreshold(k);
  return Rational(fallingFactorial(n, k), fallingFactorial(m, k));
}

nlohmann::ordered_json RamseyReport::toJson() const {
  return {{"k", k},
          {"n", n},
          {"interesting", toDecimal(interestingCount)},
          {"bound", toFraction(lowerBound)},
          {"holds", holds},
          {"applicable", applicable}};
}

RamseyReport verifyCorollary(const Graph& g, int k) {
  RamseyReport report;
  report.k = k;
  report.n = g.order();
  report.interestingCount = countInteresting(g, k);
  report.lowerBound = corollaryBound(g.order(), k);
  report.holds = Rational(report.interestingCount) >= report.lowerBound;
  report.applicable = k <= 3 && g.order() >= ramseyThreshold(k);
  return report;
}

}  // namespace pcount
