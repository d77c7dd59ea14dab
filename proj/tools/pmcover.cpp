// pmcover: command-line front end for the p-mean set cover toolkit.
//
//   pmcover solve    --instance F --model M --solver greedy|exact
//   pmcover color    --graph F --model M --solver exact|greedy
//   pmcover interval --intervals F --model M
//   pmcover bounds   --kind K --p LIST --q LIST --n LIST --a LIST --beta LIST
//   pmcover verify   --seed S [--count C] [--bound-factor X]
//   pmcover gen      --n N --k K --density D --seed S
//   pmcover expand   --instance F [--scale]
//
// Exit codes: 0 success, 1 parse/validation error or violated bound,
// 2 size cap exceeded.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pmcover/analysis.hpp"
#include "pmcover/errors.hpp"
#include "pmcover/exact.hpp"
#include "pmcover/format.hpp"
#include "pmcover/graph.hpp"
#include "pmcover/greedy.hpp"
#include "pmcover/interval.hpp"
#include "pmcover/io.hpp"
#include "pmcover/report.hpp"
#include "pmcover/verify.hpp"

namespace {

using namespace pmcover;
using nlohmann::json;

constexpr int kExitInput = 1;
constexpr int kExitLimit = 2;

// "0.5,1,2" or "start:stop:step" (inclusive), or a mix joined by commas.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream items(text);
  std::string item;
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ParseError("bad number '" + s + "' in grid '" + text + "'");
    }
    if (used != s.size()) throw ParseError("bad number '" + s + "' in grid '" + text + "'");
    return v;
  };
  while (std::getline(items, item, ',')) {
    if (item.empty()) throw ParseError("empty entry in grid '" + text + "'");
    const auto c1 = item.find(':');
    if (c1 == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const auto c2 = item.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ParseError("range '" + item + "' needs start:stop:step");
    const double start = number(item.substr(0, c1));
    const double stop = number(item.substr(c1 + 1, c2 - c1 - 1));
    const double step = number(item.substr(c2 + 1));
    if (!(step > 0.0) || stop < start) throw ParseError("invalid range '" + item + "'");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    if (count > 1000000) throw ParseError("range '" + item + "' is too long");
    for (long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * step);
  }
  if (out.empty()) throw ParseError("empty grid");
  return out;
}

std::vector<long> parse_counts(const std::string& text) {
  std::vector<long> out;
  for (double v : parse_grid(text)) {
    if (v < 1.0 || v != std::floor(v)) throw ParseError("n values must be positive integers: '" + text + "'");
    out.push_back(static_cast<long>(v));
  }
  return out;
}

void emit(const json& doc, const std::string& out, const std::vector<std::pair<std::string, std::string>>& pretty_rows,
          const std::string& csv_header, const std::string& csv_row) {
  if (out == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (out == "csv") {
    std::cout << csv_header << "\n" << csv_row << "\n";
  } else {
    for (const auto& [key, value] : pretty_rows) {
      std::cout << key << std::string(key.size() < 18 ? 18 - key.size() : 1, ' ') << value << "\n";
    }
  }
}

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + format_number(values[i]);
  return out;
}

struct SolveArgs {
  std::string instance;
  std::string model = "pmean:1";
  std::string solver = "greedy";
  int limit_n = ExactLimits{}.max_n;
  int limit_k = ExactLimits{}.max_k;
  std::string out = "json";
};

int run_solve(const SolveArgs& args) {
  const SetSystem sys = load_instance(args.instance);
  const CostModel model = parse_model_spec(args.model);
  const auto greedy = greedy_cover(sys);
  const auto greedy_sizes = part_sizes(sys, greedy.cover);
  const auto greedy_obj = evaluate(model, greedy_sizes, sys.total_weight());

  json doc;
  std::vector<std::pair<std::string, std::string>> rows{{"model", model.spec()}, {"solver", args.solver}};
  std::string header = "solver,model,n,k,objective,parts";
  std::string row;
  if (args.solver == "greedy") {
    doc = greedy_report(sys, greedy, greedy_obj);
    rows.emplace_back("objective", format_number(greedy_obj.value));
    rows.emplace_back("parts", std::to_string(eval_unit(greedy_sizes)));
    rows.emplace_back("part_sizes", join_numbers(greedy_sizes));
    std::string trace;
    for (const auto& s : greedy.trace) trace += "(" + std::to_string(s.subset) + ", " + format_number(s.gain) + ") ";
    rows.emplace_back("trace", trace);
    row = "greedy," + model.spec() + "," + std::to_string(sys.n()) + "," + std::to_string(sys.k()) + "," +
          format_number(greedy_obj.value) + "," + std::to_string(eval_unit(greedy_sizes));
  } else if (args.solver == "exact") {
    const auto exact = exact_cover(sys, model, ExactLimits{args.limit_n, args.limit_k});
    const auto exact_sizes = part_sizes(sys, exact.cover);
    doc = exact_report(sys, exact);
    doc["greedy_objective"] = greedy_obj.value;
    const auto ratio = empirical_ratio(model, greedy_obj.value, exact.objective.value);
    const auto bound = greedy_guarantee(model, sys);
    doc["empirical_ratio"] = ratio ? json(*ratio) : json(nullptr);
    doc["bound"] = bound ? json{{"kind", bound->kind}, {"value", bound->value}, {"additive", bound->additive}}
                         : json(nullptr);
    rows.emplace_back("objective", format_number(exact.objective.value));
    rows.emplace_back("parts", std::to_string(eval_unit(exact_sizes)));
    rows.emplace_back("part_sizes", join_numbers(exact_sizes));
    rows.emplace_back("nodes", std::to_string(exact.nodes));
    rows.emplace_back("greedy_objective", format_number(greedy_obj.value));
    rows.emplace_back("empirical_ratio", ratio ? format_number(*ratio) : "-");
    rows.emplace_back("bound", bound ? bound->kind + " " + format_number(bound->value) : "-");
    header += ",greedy_objective,empirical_ratio,bound";
    row = "exact," + model.spec() + "," + std::to_string(sys.n()) + "," + std::to_string(sys.k()) + "," +
          format_number(exact.objective.value) + "," + std::to_string(eval_unit(exact_sizes)) + "," +
          format_number(greedy_obj.value) + "," + (ratio ? format_number(*ratio) : "") + "," +
          (bound ? format_number(bound->value) : "");
  } else {
    throw ParseError("unknown solver '" + args.solver + "' (expected greedy or exact)");
  }
  emit(doc, args.out, rows, header, row);
  return 0;
}

struct ColorArgs {
  std::string graph;
  std::string model = "pmean:1";
  std::string solver = "exact";
  std::string out = "json";
};

int run_color(const ColorArgs& args) {
  const Graph g = load_graph(args.graph);
  const CostModel model = parse_model_spec(args.model);
  IsSolver solver;
  if (args.solver == "exact") {
    solver = IsSolver::kExact;
  } else if (args.solver == "greedy") {
    solver = IsSolver::kGreedy;
  } else {
    throw ParseError("unknown independent set solver '" + args.solver + "' (expected exact or greedy)");
  }
  const Coloring coloring = maxis_coloring(g, solver);
  const auto sizes = coloring.class_sizes();
  const auto obj = evaluate(model, sizes, g.n());
  json doc = coloring_report(coloring, obj);
  doc["max_degree"] = g.max_degree();
  emit(doc, args.out,
       {{"model", model.spec()}, {"solver", args.solver}, {"colors", std::to_string(coloring.classes.size())},
        {"class_sizes", join_numbers(sizes)}, {"objective", format_number(obj.value)}},
       "solver,model,n,colors,objective",
       args.solver + "," + model.spec() + "," + std::to_string(g.n()) + "," +
           std::to_string(coloring.classes.size()) + "," + format_number(obj.value));
  return 0;
}

struct IntervalArgs {
  std::string intervals;
  std::string model = "pmean:1";
  std::string out = "json";
};

int run_interval(const IntervalArgs& args) {
  const IntervalSet iv = load_intervals(args.intervals);
  const CostModel model = parse_model_spec(args.model);
  double p = 0.0;
  if (model.kind() == CostModel::Kind::kPMean && model.p() >= 0.0 && std::isfinite(model.p())) {
    p = model.p();
  } else if (model.kind() != CostModel::Kind::kEntropy) {
    throw ValidationError("interval clique partition supports pmean:<p> with p >= 0 and entropy");
  }
  const auto partition = interval_clique_partition(iv, p);
  const auto sizes = partition.sizes();
  json doc;
  ObjectiveValue obj{0.0, {}, model};
  if (iv.size() > 0) obj = evaluate(model, sizes, iv.size());
  doc = partition_report(partition, obj);
  emit(doc, args.out,
       {{"model", model.spec()}, {"parts", std::to_string(partition.parts.size())},
        {"part_sizes", join_numbers(sizes)}, {"objective", format_number(obj.value)}},
       "model,n,parts,objective",
       model.spec() + "," + std::to_string(iv.size()) + "," + std::to_string(partition.parts.size()) + "," +
           format_number(obj.value));
  return 0;
}

struct BoundsArgs {
  std::string kind = "all";
  std::string p = "0.25,0.5,1,2,4";
  std::string q = "2,3";
  std::string n = "1,2,5,10,100,1000";
  std::string a = "1,2,5,10";
  std::string beta = "0.1,0.5";
};

int run_bounds(const BoundsArgs& args) {
  static const std::vector<std::string> kKinds{"all", "exact", "asymptotic", "negative", "gap", "rob", "general_cost"};
  if (std::find(kKinds.begin(), kKinds.end(), args.kind) == kKinds.end()) {
    throw ParseError("unknown bound kind '" + args.kind + "'");
  }
  const auto ps = parse_grid(args.p);
  const auto qs = parse_grid(args.q);
  const auto ns = parse_counts(args.n);
  const auto as = parse_grid(args.a);
  const auto betas = parse_grid(args.beta);
  auto want = [&](const char* kind) { return args.kind == "all" || args.kind == kind; };

  std::vector<BoundReport> rows;
  if (want("exact")) {
    for (double p : ps) {
      if (p == 0.0) continue;
      for (long n : ns) rows.push_back({BoundKind::kExact, p, n, {}, {}, ratio_exact(p, n)});
    }
  }
  if (want("asymptotic")) {
    for (double p : ps) {
      if (p > 0.0) rows.push_back({BoundKind::kAsymptotic, p, {}, {}, {}, ratio_asymptotic(p)});
    }
  }
  if (want("negative")) {
    for (double q : qs) {
      for (long n : ns) rows.push_back({BoundKind::kNegative, q, n, {}, {}, ratio_negative(q, n)});
    }
  }
  if (want("gap")) {
    for (double p : ps) {
      if (p <= 0.0) continue;
      for (double a : as) rows.push_back({BoundKind::kGap, p, {}, {}, a, inapprox_gap(p, a)});
    }
  }
  if (want("rob")) {
    for (double beta : betas) rows.push_back({BoundKind::kRentOrBuy, {}, {}, beta, {}, ratio_rob(beta)});
  }
  if (want("general_cost")) {
    for (double beta : betas) {
      for (long n : ns) {
        const auto table = rob_table(beta, static_cast<int>(n));
        rows.push_back({BoundKind::kGeneralCost, {}, n, beta, {}, ratio_general_cost(table, static_cast<int>(n))});
      }
    }
  }
  std::cout << bounds_csv_header() << "\n";
  for (const auto& r : rows) std::cout << to_csv_row(r) << "\n";
  return 0;
}

struct VerifyArgs {
  VerifyConfig config;
  std::string dump_dir = ".";
  std::string out = "pretty";
};

int run_verify_cmd(VerifyArgs args) {
  args.config.dump_dir = args.dump_dir;
  const auto report = run_verify(args.config);
  if (args.out == "json") {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"check", c.name},
                        {"instances", c.checked},
                        {"violations", c.violations},
                        {"worst", c.worst},
                        {"bound", c.bound},
                        {"worst_index", c.worst_index}});
    }
    std::cout << json{{"seed", args.config.seed}, {"passed", report.passed()}, {"checks", checks},
                      {"dumped", report.dumped}}
                     .dump(2)
              << "\n";
  } else if (args.out == "csv") {
    std::cout << "check,instances,violations,worst,bound,worst_index\n";
    for (const auto& c : report.checks) {
      std::cout << c.name << "," << c.checked << "," << c.violations << "," << format_number(c.worst) << ","
                << format_number(c.bound) << "," << c.worst_index << "\n";
    }
  } else {
    std::cout << "seed " << args.config.seed << ", " << args.config.count << " instances\n" << report.summary();
    for (const auto& path : report.dumped) std::cout << "dumped " << path << "\n";
  }
  return report.passed() ? 0 : kExitInput;
}

struct GenArgs {
  int n = 8;
  int k = 4;
  double density = 0.3;
  std::uint64_t seed = 1;
  int max_weight = 0;
  std::string output;
};

int run_gen(const GenArgs& args) {
  const SetSystem sys = args.max_weight > 0 ? gen_random_weighted(args.n, args.k, args.density, args.max_weight, args.seed)
                                            : gen_random(args.n, args.k, args.density, args.seed);
  if (args.output.empty()) {
    std::cout << to_json(sys).dump() << "\n";
  } else {
    save_instance(sys, args.output);
  }
  return 0;
}

struct ExpandArgs {
  std::string instance;
  bool scale = false;
  std::string output;
};

int run_expand(const ExpandArgs& args) {
  SetSystem sys = load_instance(args.instance);
  if (args.scale) sys = scale_to_integer_weights(sys);
  const auto expanded = expand_weighted(sys);
  json doc = to_json(expanded.system);
  doc["origin"] = expanded.origin;
  if (args.output.empty()) {
    std::cout << doc.dump() << "\n";
  } else {
    write_text_file(args.output, doc.dump() + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy and exact solvers for maximum p-mean set cover and its variants"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "pretty"};

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a set cover instance");
  solve_cmd->add_option("--instance", solve.instance, "Instance JSON file")->required();
  solve_cmd->add_option("--model", solve.model, "pmean:<p>, entropy, unit, rob:<beta>, table:<path>, maxmin, max");
  solve_cmd->add_option("--solver", solve.solver, "greedy or exact");
  solve_cmd->add_option("--limit-n", solve.limit_n, "Exact solver element cap");
  solve_cmd->add_option("--limit-k", solve.limit_k, "Exact solver subset cap");
  solve_cmd->add_option("--out", solve.out, "json, csv or pretty")->check(CLI::IsMember(formats));

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "MaxIS coloring of a graph");
  color_cmd->add_option("--graph", color.graph, "Graph JSON or DIMACS file")->required();
  color_cmd->add_option("--model", color.model, "Objective used to score the coloring");
  color_cmd->add_option("--solver", color.solver, "Independent set solver: exact or greedy");
  color_cmd->add_option("--out", color.out, "json, csv or pretty")->check(CLI::IsMember(formats));

  IntervalArgs interval;
  auto* interval_cmd = app.add_subcommand("interval", "Optimal clique partition of an interval graph");
  interval_cmd->add_option("--intervals", interval.intervals, "Intervals JSON file")->required();
  interval_cmd->add_option("--model", interval.model, "pmean:<p> with p >= 0, or entropy");
  interval_cmd->add_option("--out", interval.out, "json, csv or pretty")->check(CLI::IsMember(formats));

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Tabulate approximation bounds as CSV");
  bounds_cmd->add_option("--kind", bounds.kind, "all, exact, asymptotic, negative, gap, rob, general_cost");
  bounds_cmd->add_option("--p", bounds.p, "p grid: list and/or start:stop:step ranges");
  bounds_cmd->add_option("--q", bounds.q, "q grid for p = -q < -1");
  bounds_cmd->add_option("--n", bounds.n, "n grid");
  bounds_cmd->add_option("--a", bounds.a, "a grid for the hardness gap");
  bounds_cmd->add_option("--beta", bounds.beta, "beta grid for rent-or-buy");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check greedy against the exact oracle on a seeded corpus");
  verify_cmd->add_option("--seed", verify.config.seed, "Corpus seed");
  verify_cmd->add_option("--count", verify.config.count, "Number of instances");
  verify_cmd->add_option("--max-n", verify.config.max_n, "Largest corpus ground set");
  verify_cmd->add_option("--max-k", verify.config.max_k, "Largest corpus subset count");
  verify_cmd->add_option("--limit-n", verify.config.limits.max_n, "Exact solver element cap");
  verify_cmd->add_option("--limit-k", verify.config.limits.max_k, "Exact solver subset cap");
  verify_cmd->add_option("--bound-factor", verify.config.bound_factor, "Scale applied to every guarantee");
  verify_cmd->add_option("--jobs", verify.config.jobs, "Worker threads");
  verify_cmd->add_option("--dump-dir", verify.dump_dir, "Where offending instances are written");
  verify_cmd->add_option("--out", verify.out, "json, csv or pretty")->check(CLI::IsMember(formats));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
  gen_cmd->add_option("--n", gen.n, "Ground set size");
  gen_cmd->add_option("--k", gen.k, "Number of subsets before dropping empty ones");
  gen_cmd->add_option("--density", gen.density, "Membership probability");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--max-weight", gen.max_weight, "Draw integer weights in [1, max] when > 0");
  gen_cmd->add_option("--output", gen.output, "Output file (stdout when omitted)");

  ExpandArgs expand;
  auto* expand_cmd = app.add_subcommand("expand", "Replace weighted elements by unit copies");
  expand_cmd->add_option("--instance", expand.instance, "Instance JSON file")->required();
  expand_cmd->add_flag("--scale", expand.scale, "Multiply weights by the LCM of their denominators first");
  expand_cmd->add_option("--output", expand.output, "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*color_cmd) return run_color(color);
    if (*interval_cmd) return run_interval(interval);
    if (*bounds_cmd) return run_bounds(bounds);
    if (*verify_cmd) return run_verify_cmd(verify);
    if (*gen_cmd) return run_gen(gen);
    if (*expand_cmd) return run_expand(expand);
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
