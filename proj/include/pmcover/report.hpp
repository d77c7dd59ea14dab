#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "pmcover/exact.hpp"
#include "pmcover/graph.hpp"
#include "pmcover/greedy.hpp"
#include "pmcover/interval.hpp"

namespace pmcover {

// {"kind":"pmean","p":1}, {"kind":"rob","beta":0.5}, {"kind":"table",
// "values":[...]}, {"kind":"entropy"}, {"kind":"max"}, ...
nlohmann::json model_to_json(const CostModel& model);

// {"assignment", "part_sizes", "objective", "model", "model_spec"}
nlohmann::json cover_report(const SetSystem& sys, const Cover& cover, const ObjectiveValue& objective);
// Adds "trace": [[round, set, gain], ...].
nlohmann::json greedy_report(const SetSystem& sys, const GreedyResult& result, const ObjectiveValue& objective);
// Adds "optimal": true and "nodes".
nlohmann::json exact_report(const SetSystem& sys, const ExactResult& result);
nlohmann::json coloring_report(const Coloring& coloring, const ObjectiveValue& objective);
nlohmann::json partition_report(const CliquePartition& partition, const ObjectiveValue& objective);

// Guarantee the greedy algorithm carries for `model` on `sys`: a
// multiplicative ratio, or an additive gap in bits for entropy.
struct GreedyGuarantee {
  std::string kind;
  double value;
  bool additive = false;
};
std::optional<GreedyGuarantee> greedy_guarantee(const CostModel& model, const SetSystem& sys);

// Greedy-versus-optimum quality in the guarantee's terms: optimum/greedy for
// maximization, greedy/optimum for minimization, greedy minus optimum for
// entropy. Empty when the ratio is undefined (zero optimum).
std::optional<double> empirical_ratio(const CostModel& model, double greedy_value, double optimal_value);

}  // namespace pmcover
