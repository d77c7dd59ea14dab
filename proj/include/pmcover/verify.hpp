#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "pmcover/exact.hpp"

namespace pmcover {

struct CorpusInstance {
  int index;
  std::uint64_t seed;
  double density;
  SetSystem sys;
};

// Seeded corpus: instance i has n in [2, max_n], k in [1, max_k] and
// density cycling through {0.2, 0.4, 0.7}. Deterministic in (seed, i).
std::vector<CorpusInstance> make_corpus(std::uint64_t seed, int count, int max_n = 10, int max_k = 6);

struct VerifyConfig {
  std::uint64_t seed = 1;
  int count = 200;
  int max_n = 10;
  int max_k = 6;
  ExactLimits limits;
  // Every guarantee is multiplied by this before comparison; values below 1
  // make the bounds too tight and must produce failures.
  double bound_factor = 1.0;
  int jobs = 1;
  // Offending instances are written here as JSON; empty disables dumping.
  std::filesystem::path dump_dir;
};

struct CheckSummary {
  std::string name;
  int checked = 0;
  int violations = 0;
  double worst = 0.0;    // worst observed ratio (or additive gap)
  double bound = 0.0;    // guarantee at the worst instance
  int worst_index = -1;  // corpus index of the worst instance
};

struct VerifyReport {
  std::vector<CheckSummary> checks;
  std::vector<std::string> dumped;
  bool passed() const;
  // Fixed-width table, one line per check; identical for identical input.
  std::string summary() const;
};

// Runs greedy and the exact oracle on every corpus instance for p-means
// p in {0.5, 1, 2}, entropy, unit, rent-or-buy beta in {0.1, 0.5} and
// max-min, and checks every guarantee plus oracle dominance. Throws
// LimitError if the corpus exceeds the exact limits.
VerifyReport run_verify(const VerifyConfig& config);

}  // namespace pmcover
