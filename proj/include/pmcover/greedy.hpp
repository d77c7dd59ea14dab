#pragma once

#include <vector>

#include "pmcover/instance.hpp"
#include "pmcover/objectives.hpp"

namespace pmcover {

struct GreedyStep {
  int round;    // 1-based
  int subset;
  double gain;  // uncovered weight newly assigned in this round
};

struct GreedyResult {
  Cover cover;
  std::vector<GreedyStep> trace;
};

// Repeatedly picks the subset with the largest uncovered weight (lowest
// index on ties) and assigns all of its uncovered elements to it. An element
// is assigned once, in the round it is first covered. Weight comparisons are
// exact: rational weights are scaled to integers first.
GreedyResult greedy_cover(const SetSystem& sys);

// Objective of greedy_cover(sys) under `model`. The cover itself does not
// depend on the model.
ObjectiveValue greedy_value(const SetSystem& sys, const CostModel& model);

}  // namespace pmcover
