#include "pmcover/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <thread>

#include "pmcover/analysis.hpp"
#include "pmcover/errors.hpp"
#include "pmcover/greedy.hpp"
#include "pmcover/io.hpp"
#include "pmcover/report.hpp"

namespace pmcover {
namespace {

constexpr double kSlack = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Outcome {
  double observed;
  double bound;
};

struct Check {
  std::string name;
  CostModel model;
  // Guarantee for this instance, before bound_factor.
  double (*bound)(const CostModel&, const SetSystem&);
};

double pmean_asymptotic(const CostModel& m, const SetSystem&) { return ratio_asymptotic(m.p()); }
double pmean_finite(const CostModel& m, const SetSystem& sys) { return ratio_exact(m.p(), sys.n()); }
double entropy_bound(const CostModel&, const SetSystem&) { return std::log2(std::exp(1.0)); }
double unit_bound(const CostModel&, const SetSystem& sys) { return harmonic(sys.max_set_size()); }
double rob_bound(const CostModel& m, const SetSystem&) { return ratio_rob(m.beta()); }
// Oracle dominance only: the optimum is never worse than greedy.
double dominance_bound(const CostModel&, const SetSystem&) { return 1.0; }

std::vector<Check> default_checks() {
  std::vector<Check> checks;
  for (double p : {0.5, 1.0, 2.0}) {
    const std::string tag = p == 0.5 ? "0.5" : p == 1.0 ? "1" : "2";
    checks.push_back({"pmean:" + tag + " asymptotic", CostModel::pmean(p), pmean_asymptotic});
    checks.push_back({"pmean:" + tag + " finite-n", CostModel::pmean(p), pmean_finite});
  }
  checks.push_back({"entropy additive", CostModel::entropy(), entropy_bound});
  checks.push_back({"unit harmonic", CostModel::unit(), unit_bound});
  checks.push_back({"rob:0.1", CostModel::rent_or_buy(0.1), rob_bound});
  checks.push_back({"rob:0.5", CostModel::rent_or_buy(0.5), rob_bound});
  checks.push_back({"maxmin dominance", CostModel::max_min(), dominance_bound});
  return checks;
}

std::string pad(const std::string& text, std::size_t width) {
  return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
}

}  // namespace

std::vector<CorpusInstance> make_corpus(std::uint64_t seed, int count, int max_n, int max_k) {
  static constexpr double kDensities[] = {0.2, 0.4, 0.7};
  std::vector<CorpusInstance> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = splitmix64(seed * 0x100000001b3ULL + static_cast<std::uint64_t>(i));
    const int n = 2 + static_cast<int>(splitmix64(s ^ 1) % static_cast<std::uint64_t>(std::max(1, max_n - 1)));
    const int k = 1 + static_cast<int>(splitmix64(s ^ 2) % static_cast<std::uint64_t>(max_k));
    const double density = kDensities[i % 3];
    out.push_back({i, s, density, gen_random(n, k, density, s)});
  }
  return out;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckSummary& c) { return c.violations == 0; });
}

std::string VerifyReport::summary() const {
  std::string out = pad("check", 22) + pad("instances", 11) + pad("violations", 12) + pad("worst", 14) +
                    pad("bound", 14) + "at\n";
  char buf[64];
  for (const auto& c : checks) {
    out += pad(c.name, 22) + pad(std::to_string(c.checked), 11) + pad(std::to_string(c.violations), 12);
    std::snprintf(buf, sizeof buf, "%.10f", c.worst);
    out += pad(buf, 14);
    std::snprintf(buf, sizeof buf, "%.10f", c.bound);
    out += pad(buf, 14) + std::to_string(c.worst_index) + "\n";
  }
  out += passed() ? "PASS\n" : "FAIL\n";
  return out;
}

VerifyReport run_verify(const VerifyConfig& config) {
  const auto corpus = make_corpus(config.seed, config.count, config.max_n, config.max_k);
  for (const auto& inst : corpus) {
    if (inst.sys.n() > config.limits.max_n || inst.sys.k() > config.limits.max_k) {
      throw LimitError("corpus instance " + std::to_string(inst.index) + " (n = " + std::to_string(inst.sys.n()) +
                       ", k = " + std::to_string(inst.sys.k()) + ") exceeds the exact limits");
    }
  }
  const auto checks = default_checks();

  // outcomes[i][c]: instance i, check c.
  std::vector<std::vector<Outcome>> outcomes(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      const SetSystem& sys = corpus[i].sys;
      const auto greedy = greedy_cover(sys);
      const auto sizes = part_sizes(sys, greedy.cover);
      auto& row = outcomes[i];
      for (const auto& check : checks) {
        const double g = evaluate(check.model, sizes, sys.total_weight()).value;
        const double opt = exact_cover(sys, check.model, config.limits).objective.value;
        double observed = 0.0;
        if (check.bound == dominance_bound) {
          // 1 when the optimum is at least as good; above 1 otherwise.
          observed = check.model.better(g, opt) ? 1.0 + std::fabs(g - opt) : 1.0;
        } else {
          observed = empirical_ratio(check.model, g, opt).value_or(1.0);
        }
        row.push_back({observed, check.bound(check.model, sys)});
      }
    }
  };
  const int jobs = std::max(1, config.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  VerifyReport report;
  for (std::size_t c = 0; c < checks.size(); ++c) {
    CheckSummary summary;
    summary.name = checks[c].name;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Outcome& o = outcomes[i][c];
      const double limit = o.bound * config.bound_factor + kSlack;
      ++summary.checked;
      const bool worse = summary.worst_index < 0 || o.observed - o.bound > summary.worst - summary.bound;
      if (worse) {
        summary.worst = o.observed;
        summary.bound = o.bound;
        summary.worst_index = static_cast<int>(i);
      }
      if (o.observed > limit) {
        ++summary.violations;
        if (!config.dump_dir.empty()) {
          std::string tag = checks[c].name;
          std::replace_if(tag.begin(), tag.end(), [](char ch) { return ch == ' ' || ch == ':' || ch == '.'; }, '_');
          const auto path = config.dump_dir / ("verify_fail_" + tag + "_" + std::to_string(i) + ".json");
          std::error_code ec;
          std::filesystem::create_directories(config.dump_dir, ec);
          save_instance(corpus[i].sys, path);
          report.dumped.push_back(path.string());
        }
      }
    }
    report.checks.push_back(summary);
  }
  return report;
}

}  // namespace pmcover
