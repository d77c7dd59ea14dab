#include "pmcover/instance.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "pmcover/errors.hpp"

namespace pmcover {
namespace {

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementations.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int index_draw(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); }

}  // namespace

SetSystem::SetSystem(int n, std::vector<std::vector<int>> sets, std::optional<std::vector<Rational>> weights,
                     std::vector<std::string> names)
    : n_(n), sets_(std::move(sets)), weights_(std::move(weights)), names_(std::move(names)) {
  if (n_ < 1) throw ValidationError("ground set must have at least one element");
  containing_.assign(n_, {});
  for (int i = 0; i < k(); ++i) {
    auto& s = sets_[i];
    if (s.empty()) throw ValidationError("subset " + std::to_string(i) + " is empty");
    std::sort(s.begin(), s.end());
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] < 0 || s[j] >= n_) {
        throw ValidationError("subset " + std::to_string(i) + " has element id " + std::to_string(s[j]) +
                              " outside [0, " + std::to_string(n_) + ")");
      }
      if (j > 0 && s[j] == s[j - 1]) {
        throw ValidationError("subset " + std::to_string(i) + " lists element " + std::to_string(s[j]) + " twice");
      }
      containing_[s[j]].push_back(i);
    }
  }
  for (int v = 0; v < n_; ++v) {
    if (containing_[v].empty()) throw ValidationError("element " + std::to_string(v) + " uncovered");
  }
  if (weights_) {
    if (static_cast<int>(weights_->size()) != n_) {
      throw ValidationError("expected " + std::to_string(n_) + " weights, got " + std::to_string(weights_->size()));
    }
    for (int v = 0; v < n_; ++v) {
      if ((*weights_)[v].num() <= 0) {
        throw ValidationError("weight of element " + std::to_string(v) + " is not positive");
      }
    }
  }
  if (!names_.empty() && static_cast<int>(names_.size()) != n_) {
    throw ValidationError("expected " + std::to_string(n_) + " names, got " + std::to_string(names_.size()));
  }
  weight_values_.resize(n_, 1.0);
  if (weights_) {
    for (int v = 0; v < n_; ++v) weight_values_[v] = (*weights_)[v].to_double();
  }
  total_weight_ = 0.0;
  for (double w : weight_values_) total_weight_ += w;
}

std::span<const Rational> SetSystem::weights() const {
  if (!weights_) return {};
  return *weights_;
}

int SetSystem::max_set_size() const {
  std::size_t best = 0;
  for (const auto& s : sets_) best = std::max(best, s.size());
  return static_cast<int>(best);
}

double SetSystem::max_set_weight() const {
  double best = 0.0;
  for (const auto& s : sets_) {
    double total = 0.0;
    for (int v : s) total += weight_values_[v];
    best = std::max(best, total);
  }
  return best;
}

Cover::Cover(const SetSystem& sys, std::vector<int> assignment) : assignment_(std::move(assignment)) {
  if (static_cast<int>(assignment_.size()) != sys.n()) {
    throw ValidationError("assignment has " + std::to_string(assignment_.size()) + " entries for " +
                          std::to_string(sys.n()) + " elements");
  }
  for (int v = 0; v < sys.n(); ++v) {
    const int i = assignment_[v];
    if (i < 0 || i >= sys.k()) {
      throw ValidationError("element " + std::to_string(v) + " assigned to nonexistent subset " + std::to_string(i));
    }
    const auto s = sys.set(i);
    if (!std::binary_search(s.begin(), s.end(), v)) {
      throw ValidationError("element " + std::to_string(v) + " assigned to subset " + std::to_string(i) +
                            " which does not contain it");
    }
  }
}

std::vector<double> part_sizes(const SetSystem& sys, const Cover& cov) {
  std::vector<double> sizes(sys.k(), 0.0);
  for (int v = 0; v < sys.n(); ++v) sizes[cov[v]] += sys.weight(v);
  return sizes;
}

std::vector<double> element_values(const SetSystem& sys, const Cover& cov) {
  const auto sizes = part_sizes(sys, cov);
  std::vector<double> values(sys.n());
  for (int v = 0; v < sys.n(); ++v) values[v] = sizes[cov[v]];
  return values;
}

Cover ExpandedSystem::lift(const Cover& original) const {
  std::vector<int> assignment(origin.size());
  for (std::size_t j = 0; j < origin.size(); ++j) assignment[j] = original[origin[j]];
  return Cover(system, std::move(assignment));
}

ExpandedSystem expand_weighted(const SetSystem& sys) {
  std::vector<int> first_copy(sys.n());
  std::vector<int> origin;
  for (int v = 0; v < sys.n(); ++v) {
    std::int64_t copies = 1;
    if (sys.weighted()) {
      const Rational& w = sys.weights()[v];
      if (!w.is_integer()) {
        throw ValidationError("weight of element " + std::to_string(v) + " is " + w.str() +
                              ", not an integer; scale weights first");
      }
      copies = w.num();
    }
    first_copy[v] = static_cast<int>(origin.size());
    for (std::int64_t c = 0; c < copies; ++c) origin.push_back(v);
  }
  std::vector<std::vector<int>> sets;
  sets.reserve(sys.k());
  for (const auto& s : sys.sets()) {
    std::vector<int> expanded;
    for (int v : s) {
      const int copies = sys.weighted() ? static_cast<int>(sys.weights()[v].num()) : 1;
      for (int c = 0; c < copies; ++c) expanded.push_back(first_copy[v] + c);
    }
    sets.push_back(std::move(expanded));
  }
  const int n = static_cast<int>(origin.size());
  return ExpandedSystem{SetSystem(n, std::move(sets)), std::move(origin)};
}

std::int64_t weight_scale(const SetSystem& sys) {
  std::int64_t scale = 1;
  for (const Rational& w : sys.weights()) scale = checked_lcm(scale, w.den());
  return scale;
}

SetSystem scale_to_integer_weights(const SetSystem& sys) {
  if (!sys.weighted()) return sys;
  const std::int64_t scale = weight_scale(sys);
  std::vector<Rational> scaled;
  scaled.reserve(sys.n());
  for (const Rational& w : sys.weights()) scaled.emplace_back(w.num() * (scale / w.den()), 1);
  return SetSystem(sys.n(), sys.sets(), std::move(scaled), sys.names());
}

SetSystem gen_random(int n, int k, double density, std::uint64_t seed) {
  if (n < 1 || k < 1) throw ValidationError("gen_random needs n >= 1 and k >= 1");
  if (!(density > 0.0 && density <= 1.0)) throw ValidationError("density must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<bool>> member(k, std::vector<bool>(n, false));
  for (int i = 0; i < k; ++i) {
    for (int v = 0; v < n; ++v) member[i][v] = unit_draw(rng) < density;
  }
  for (int v = 0; v < n; ++v) {
    bool covered = false;
    for (int i = 0; i < k && !covered; ++i) covered = member[i][v];
    if (!covered) member[index_draw(rng, k)][v] = true;
  }
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < k; ++i) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v) {
      if (member[i][v]) s.push_back(v);
    }
    if (!s.empty()) sets.push_back(std::move(s));
  }
  return SetSystem(n, std::move(sets));
}

SetSystem gen_random_weighted(int n, int k, double density, int max_weight, std::uint64_t seed) {
  if (max_weight < 1) throw ValidationError("max_weight must be at least 1");
  SetSystem base = gen_random(n, k, density, seed);
  // Separate stream so the membership matrix matches gen_random's.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Rational> weights;
  weights.reserve(n);
  for (int v = 0; v < n; ++v) weights.emplace_back(1 + index_draw(rng, max_weight), 1);
  return SetSystem(n, base.sets(), std::move(weights));
}

}  // namespace pmcover
