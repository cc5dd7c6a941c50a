#pragma once

#include <string_view>

namespace pcount {

// Hard limits. Every enumeration checks its input against one of these and
// raises CapacityError instead of truncating.
inline constexpr int kMaxVertices = 64;
// Labelled enumeration, automorphism counting, canonical forms, alpha_H.
inline constexpr int kMaxLabels = 10;
// Materialised sweeps over all of L(k): 2^C(k,2) * k! labelled graphs.
inline constexpr int kMaxLabelledSweep = 5;
// Sweeps over the 2^C(k,2) edge subsets of [k] (isomorphism classes, label
// masks, density spectra, witness search).
inline constexpr int kMaxEdgeSubsetSweep = 7;

// Effective caps after the PCOUNT_MAX_K environment override, which can only
// lower them.
int labelCap();
int labelledSweepCap();
int sweepCap();

void requireWithinCap(int value, int cap, std::string_view what);

}  // namespace pcount
