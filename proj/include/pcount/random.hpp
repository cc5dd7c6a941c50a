#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pcount/graph.hpp"

namespace pcount {

// Seeded generator for replayable instances. Only the raw mt19937_64 stream is
// used, so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound), by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// G(n, p) with p = num/den.
inline Graph randomGraph(int n, std::uint64_t num, std::uint64_t den, Rng& rng) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (rng.chance(num, den)) g.addEdge(u, v);
    }
  }
  return g;
}

// Every vertex gets a uniform colour in 1..palette.
inline Colouring randomColouring(int n, int palette, Rng& rng) {
  std::vector<int> colours(static_cast<std::size_t>(n));
  for (int& c : colours) c = rng.between(1, palette);
  return Colouring(palette, std::move(colours));
}

inline std::vector<Vertex> randomPermutation(int n, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);
  return perm;
}

}  // namespace pcount
