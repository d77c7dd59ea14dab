#pragma once

#include <cstdint>

#include "pmcover/instance.hpp"
#include "pmcover/objectives.hpp"

namespace pmcover {

struct ExactLimits {
  int max_n = 12;
  int max_k = 10;
};

struct ExactOptions {
  // Bound pruning plus the canonical-form reduction (subsets contained in
  // another subset are never used). Disabling both gives plain enumeration
  // of every assignment; the optimal value is the same either way.
  bool prune = true;
};

struct ExactResult {
  Cover cover;
  ObjectiveValue objective;
  std::uint64_t nodes = 0;
};

// Optimal cover under `model` by exhaustive search over per-element subset
// choices. Among optimal covers found, the lexicographically smallest
// assignment wins (objective ties within 1e-9 relative). For p-mean models
// with p >= 0 and for entropy the cover is finally made locally optimal: no
// element can be moved to a strictly larger part of a subset containing it.
//
// Throws LimitError when n or k exceeds the limits, and ValidationError for
// a concave table shorter than the heaviest subset.
ExactResult exact_cover(const SetSystem& sys, const CostModel& model, ExactLimits limits = {},
                        ExactOptions options = {});

// exact_cover under the max-min model.
ExactResult exact_maxmin(const SetSystem& sys, ExactLimits limits = {});

}  // namespace pmcover
