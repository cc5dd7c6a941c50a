#pragma once

#include <cstdint>
#include <future>
#include <vector>

namespace pcount::internal {

// Sums fn(v) over v in [0, n), handing out leading vertices round-robin to
// `workers` threads.
template <typename Fn>
std::uint64_t sumOverLeadingVertex(int n, int workers, Fn fn) {
  if (workers <= 1 || n <= 1) {
    std::uint64_t total = 0;
    for (int v = 0; v < n; ++v) total += fn(v);
    return total;
  }
  std::vector<std::future<std::uint64_t>> parts;
  for (int w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [=, &fn] {
      std::uint64_t total = 0;
      for (int v = w; v < n; v += workers) total += fn(v);
      return total;
    }));
  }
  std::uint64_t total = 0;
  for (auto& part : parts) total += part.get();
  return total;
}

}  // namespace pcount::internal
