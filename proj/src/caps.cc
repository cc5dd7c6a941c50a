#include "pcount/caps.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "pcount/errors.hpp"

namespace pcount {
namespace {

int envLimit() {
  static const int limit = [] {
    const char* raw = std::getenv("PCOUNT_MAX_K");
    if (raw == nullptr) return kMaxLabels;
    try {
      return std::clamp(std::stoi(raw), 0, kMaxLabels);
    } catch (const std::exception&) {
      return kMaxLabels;
    }
  }();
  return limit;
}

}  // namespace

int labelCap() { return std::min(kMaxLabels, envLimit()); }
int labelledSweepCap() { return std::min(kMaxLabelledSweep, envLimit()); }
int sweepCap() { return std::min(kMaxEdgeSubsetSweep, envLimit()); }

void requireWithinCap(int value, int cap, std::string_view what) {
  if (value > cap) {
    throw CapacityError(std::string(what) + " " + std::to_string(value) + " exceeds cap " +
                        std::to_string(cap));
  }
}

}  // namespace pcount
