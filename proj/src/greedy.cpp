#include "pmcover/greedy.hpp"

#include <cstdint>

namespace pmcover {

GreedyResult greedy_cover(const SetSystem& sys) {
  const std::int64_t scale = weight_scale(sys);
  std::vector<std::int64_t> weight(sys.n(), 1);
  if (sys.weighted()) {
    for (int v = 0; v < sys.n(); ++v) {
      const Rational& w = sys.weights()[v];
      weight[v] = w.num() * (scale / w.den());
    }
  }

  std::vector<int> assignment(sys.n(), -1);
  std::vector<GreedyStep> trace;
  int uncovered = sys.n();
  for (int round = 1; uncovered > 0; ++round) {
    int best = -1;
    std::int64_t best_gain = 0;
    for (int i = 0; i < sys.k(); ++i) {
      std::int64_t gain = 0;
      for (int v : sys.set(i)) {
        if (assignment[v] < 0) gain += weight[v];
      }
      if (gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    for (int v : sys.set(best)) {
      if (assignment[v] < 0) {
        assignment[v] = best;
        --uncovered;
      }
    }
    trace.push_back({round, best, static_cast<double>(best_gain) / static_cast<double>(scale)});
  }
  return GreedyResult{Cover(sys, std::move(assignment)), std::move(trace)};
}

ObjectiveValue greedy_value(const SetSystem& sys, const CostModel& model) {
  const auto result = greedy_cover(sys);
  const auto sizes = part_sizes(sys, result.cover);
  return evaluate(model, sizes, sys.total_weight());
}

}  // namespace pmcover
