#include "pmcover/report.hpp"

#include <cmath>

#include "pmcover/analysis.hpp"

namespace pmcover {

using nlohmann::json;

json model_to_json(const CostModel& model) {
  using Kind = CostModel::Kind;
  switch (model.kind()) {
    case Kind::kPMean:
      if (model.p() == CostModel::kInf) return {{"kind", "max"}};
      if (model.p() == -CostModel::kInf) return {{"kind", "maxmin"}};
      return {{"kind", "pmean"}, {"p", model.p()}};
    case Kind::kEntropy:
      return {{"kind", "entropy"}};
    case Kind::kUnit:
      return {{"kind", "unit"}};
    case Kind::kRentOrBuy:
      return {{"kind", "rob"}, {"beta", model.beta()}};
    case Kind::kConcaveTable:
      return {{"kind", "table"}, {"values", model.table()}};
  }
  return {};
}

json cover_report(const SetSystem& sys, const Cover& cover, const ObjectiveValue& objective) {
  return json{{"assignment", cover.assignment()},
              {"part_sizes", part_sizes(sys, cover)},
              {"objective", objective.value},
              {"model", objective.model.spec()},
              {"model_spec", model_to_json(objective.model)}};
}

json greedy_report(const SetSystem& sys, const GreedyResult& result, const ObjectiveValue& objective) {
  json doc = cover_report(sys, result.cover, objective);
  json trace = json::array();
  for (const auto& step : result.trace) trace.push_back({step.round, step.subset, step.gain});
  doc["trace"] = std::move(trace);
  return doc;
}

json exact_report(const SetSystem& sys, const ExactResult& result) {
  json doc = cover_report(sys, result.cover, result.objective);
  doc["optimal"] = true;
  doc["nodes"] = result.nodes;
  return doc;
}

json coloring_report(const Coloring& coloring, const ObjectiveValue& objective) {
  return json{{"assignment", coloring.color},
              {"classes", coloring.classes},
              {"part_sizes", coloring.class_sizes()},
              {"objective", objective.value},
              {"model", objective.model.spec()},
              {"model_spec", model_to_json(objective.model)}};
}

json partition_report(const CliquePartition& partition, const ObjectiveValue& objective) {
  return json{{"assignment", partition.part_of},
              {"parts", partition.parts},
              {"stab_points", partition.stab_points},
              {"part_sizes", partition.sizes()},
              {"score", partition.score},
              {"objective", objective.value},
              {"model", objective.model.spec()},
              {"model_spec", model_to_json(objective.model)}};
}

std::optional<GreedyGuarantee> greedy_guarantee(const CostModel& model, const SetSystem& sys) {
  using Kind = CostModel::Kind;
  // The finite-n bounds take the element count; weighted instances count
  // their expanded size when the weights are integral.
  const double total = sys.total_weight();
  const bool integral_total = std::fabs(total - std::round(total)) < 1e-9;
  const long n = integral_total ? std::lround(total) : 0;
  switch (model.kind()) {
    case Kind::kPMean: {
      const double p = model.p();
      if (p == CostModel::kInf) return GreedyGuarantee{"max_part", 1.0};
      if (p == -CostModel::kInf) return std::nullopt;
      if (p == 0.0) return GreedyGuarantee{"geometric_e", std::exp(1.0)};
      if (p > 0.0) {
        if (n > 0) return GreedyGuarantee{"ratio_exact", std::min(ratio_exact(p, n), ratio_asymptotic(p))};
        return GreedyGuarantee{"ratio_asymptotic", ratio_asymptotic(p)};
      }
      if (n == 0) return std::nullopt;
      if (p < -1.0) return GreedyGuarantee{"ratio_negative", std::min(ratio_exact(p, n), ratio_negative(-p, n))};
      return GreedyGuarantee{"ratio_exact", ratio_exact(p, n)};
    }
    case Kind::kEntropy:
      return GreedyGuarantee{"entropy_log2e", std::log2(std::exp(1.0)), true};
    case Kind::kUnit: {
      const int c_max = sys.max_set_size();
      return GreedyGuarantee{"harmonic", harmonic(c_max)};
    }
    case Kind::kRentOrBuy:
      return GreedyGuarantee{"rob", ratio_rob(model.beta())};
    case Kind::kConcaveTable: {
      const int c_max = static_cast<int>(std::lround(sys.max_set_weight()));
      try {
        return GreedyGuarantee{"general_cost", ratio_general_cost(model.table(), c_max)};
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

std::optional<double> empirical_ratio(const CostModel& model, double greedy_value, double optimal_value) {
  if (model.kind() == CostModel::Kind::kEntropy) return greedy_value - optimal_value;
  if (model.orientation() == Orientation::kMaximize) {
    if (greedy_value == 0.0) return std::nullopt;
    return optimal_value / greedy_value;
  }
  if (optimal_value == 0.0) return std::nullopt;
  return greedy_value / optimal_value;
}

}  // namespace pmcover
