#include "pmcover/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pmcover/errors.hpp"
#include "pmcover/greedy.hpp"

namespace pmcover {
namespace {

using Kind = CostModel::Kind;

// Model value expressed through a per-element function h(a_v):
//   value = finish(sum_v w_v h(a_v))
// with h chosen so that, for every supported model, replacing a_v by an
// upper bound on its final part size moves the sum towards the optimum.
// Max and max-min have no such form and are handled separately.
class Scorer {
 public:
  Scorer(const CostModel& model, double n_total) : model_(model), n_total_(n_total) {}

  bool additive() const { return !(model_.kind() == Kind::kPMean && std::isinf(model_.p())); }

  double h(double a) const {
    switch (model_.kind()) {
      case Kind::kPMean: {
        const double p = model_.p();
        if (p == 0.0) return std::log(a);
        return std::pow(a / n_total_, p);
      }
      case Kind::kEntropy:
        return std::log2(a);
      case Kind::kUnit:
        return 1.0 / a;
      case Kind::kRentOrBuy:
        return std::min(1.0 / a, 1.0 / (model_.beta() * n_total_));
      case Kind::kConcaveTable: {
        const auto c = static_cast<std::size_t>(std::llround(a));
        return model_.table()[c - 1] / a;
      }
    }
    return 0.0;
  }

  double finish(double sum) const {
    switch (model_.kind()) {
      case Kind::kPMean: {
        const double p = model_.p();
        if (p == 0.0) return std::exp(sum / n_total_);
        return n_total_ * std::pow(sum / n_total_, 1.0 / p);
      }
      case Kind::kEntropy:
        return std::log2(n_total_) - sum / n_total_;
      default:
        return sum;
    }
  }

  // Value of a (partial or complete) configuration where part i currently
  // holds size[i] and can grow to at most ceiling[i]; `free_best` lists, for
  // each unassigned element, its weight and the largest ceiling among its
  // subsets. With ceiling == size and no free elements this is the exact
  // value of a complete cover.
  double bound(const std::vector<double>& size, const std::vector<double>& ceiling,
               const std::vector<std::pair<double, double>>& free_best) const {
    if (additive()) {
      double sum = 0.0;
      for (std::size_t i = 0; i < size.size(); ++i) {
        if (size[i] > 0.0) sum += size[i] * h(ceiling[i]);
      }
      for (const auto& [w, best] : free_best) sum += w * h(best);
      return finish(sum);
    }
    if (model_.p() > 0.0) {
      double top = 0.0;
      for (double c : ceiling) top = std::max(top, c);
      return top;
    }
    double low = CostModel::kInf;
    for (std::size_t i = 0; i < size.size(); ++i) {
      if (size[i] > 0.0) low = std::min(low, ceiling[i]);
    }
    for (const auto& fb : free_best) low = std::min(low, fb.second);
    return low;
  }

 private:
  const CostModel& model_;
  double n_total_;
};

class Search {
 public:
  Search(const SetSystem& sys, const CostModel& model, bool prune)
      : sys_(sys), model_(model), scorer_(model, sys.total_weight()), prune_(prune) {
    const int k = sys.k();
    active_.assign(k, true);
    if (prune_) {
      // A subset contained in another one is never needed: merging its part
      // into the containing subset's part is weakly better for every model.
      for (int j = 0; j < k; ++j) {
        for (int i = 0; i < k && active_[j]; ++i) {
          if (i == j) continue;
          const auto a = sys.set(j);
          const auto b = sys.set(i);
          const bool inside = std::includes(b.begin(), b.end(), a.begin(), a.end());
          if (inside && (b.size() > a.size() || i < j)) active_[j] = false;
        }
      }
    }
    choices_.assign(sys.n(), {});
    for (int v = 0; v < sys.n(); ++v) {
      for (int i : sys.containing(v)) {
        if (active_[i]) choices_[v].push_back(i);
      }
    }
    order_.resize(sys.n());
    for (int v = 0; v < sys.n(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return choices_[a].size() > choices_[b].size(); });

    size_.assign(k, 0.0);
    remaining_.assign(k, 0.0);
    for (int v = 0; v < sys.n(); ++v) {
      for (int i : choices_[v]) remaining_[i] += sys.weight(v);
    }
    assignment_.assign(sys.n(), -1);
  }

  void seed(const std::vector<int>& assignment) {
    best_assignment_ = assignment;
    best_value_ = leaf_value(assignment);
    have_best_ = true;
  }

  void run() { descend(0); }

  const std::vector<int>& best_assignment() const { return best_assignment_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  double tolerance() const { return 1e-9 * std::max(1.0, std::fabs(best_value_)); }

  bool strictly_worse(double candidate) const {
    const double tol = tolerance();
    return model_.orientation() == Orientation::kMaximize ? candidate < best_value_ - tol
                                                          : candidate > best_value_ + tol;
  }

  bool strictly_better(double candidate) const {
    const double tol = tolerance();
    return model_.orientation() == Orientation::kMaximize ? candidate > best_value_ + tol
                                                          : candidate < best_value_ - tol;
  }

  double leaf_value(const std::vector<int>& assignment) const {
    std::vector<double> sizes(sys_.k(), 0.0);
    for (int v = 0; v < sys_.n(); ++v) sizes[assignment[v]] += sys_.weight(v);
    return scorer_.bound(sizes, sizes, {});
  }

  void descend(int depth) {
    ++nodes_;
    if (depth == sys_.n()) {
      const double value = scorer_.bound(size_, size_, {});
      if (!have_best_ || strictly_better(value) ||
          (!strictly_worse(value) && assignment_ < best_assignment_)) {
        best_value_ = value;
        best_assignment_ = assignment_;
        have_best_ = true;
      }
      return;
    }
    if (prune_ && have_best_ && strictly_worse(optimistic(depth))) return;

    const int v = order_[depth];
    const double w = sys_.weight(v);
    for (int i : choices_[v]) remaining_[i] -= w;
    for (int i : choices_[v]) {
      size_[i] += w;
      assignment_[v] = i;
      descend(depth + 1);
      size_[i] -= w;
    }
    assignment_[v] = -1;
    for (int i : choices_[v]) remaining_[i] += w;
  }

  double optimistic(int depth) {
    ceiling_.resize(size_.size());
    for (std::size_t i = 0; i < size_.size(); ++i) ceiling_[i] = size_[i] + remaining_[i];
    free_best_.clear();
    for (int d = depth; d < sys_.n(); ++d) {
      const int v = order_[d];
      double best = 0.0;
      for (int i : choices_[v]) best = std::max(best, ceiling_[i]);
      free_best_.emplace_back(sys_.weight(v), best);
    }
    return scorer_.bound(size_, ceiling_, free_best_);
  }

  const SetSystem& sys_;
  const CostModel& model_;
  Scorer scorer_;
  bool prune_;

  std::vector<bool> active_;
  std::vector<std::vector<int>> choices_;
  std::vector<int> order_;
  std::vector<double> size_;
  std::vector<double> remaining_;
  std::vector<int> assignment_;

  std::vector<double> ceiling_;
  std::vector<std::pair<double, double>> free_best_;

  bool have_best_ = false;
  double best_value_ = 0.0;
  std::vector<int> best_assignment_;
  std::uint64_t nodes_ = 0;
};

// Moves elements into strictly larger parts until none can move. Each move
// strictly increases the sum of squared part sizes, so this terminates.
void make_locally_optimal(const SetSystem& sys, std::vector<int>& assignment) {
  std::vector<double> sizes(sys.k(), 0.0);
  for (int v = 0; v < sys.n(); ++v) sizes[assignment[v]] += sys.weight(v);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < sys.n() && !moved; ++v) {
      const int from = assignment[v];
      for (int to : sys.containing(v)) {
        if (to != from && sizes[to] > sizes[from]) {
          sizes[from] -= sys.weight(v);
          sizes[to] += sys.weight(v);
          assignment[v] = to;
          moved = true;
          break;
        }
      }
    }
  }
}

}  // namespace

ExactResult exact_cover(const SetSystem& sys, const CostModel& model, ExactLimits limits, ExactOptions options) {
  if (sys.n() > limits.max_n) {
    throw LimitError("exact search refused: n = " + std::to_string(sys.n()) + " exceeds limit " +
                     std::to_string(limits.max_n));
  }
  if (sys.k() > limits.max_k) {
    throw LimitError("exact search refused: k = " + std::to_string(sys.k()) + " exceeds limit " +
                     std::to_string(limits.max_k));
  }
  if (model.kind() == Kind::kConcaveTable && sys.max_set_weight() > static_cast<double>(model.table().size())) {
    throw ValidationError("concave table covers sizes 1.." + std::to_string(model.table().size()) +
                          " but a subset has weight " + std::to_string(sys.max_set_weight()));
  }
  if (model.kind() == Kind::kConcaveTable) {
    for (const Rational& w : sys.weights()) {
      if (!w.is_integer()) throw ValidationError("concave tables need integer weights; scale the instance first");
    }
  }

  Search search(sys, model, options.prune);
  if (options.prune) search.seed(greedy_cover(sys).cover.assignment());
  search.run();

  std::vector<int> assignment = search.best_assignment();
  const bool convex_pmean = model.kind() == Kind::kPMean && model.p() >= 0.0 && !std::isinf(model.p());
  if (convex_pmean || model.kind() == Kind::kEntropy) make_locally_optimal(sys, assignment);

  Cover cover(sys, std::move(assignment));
  const auto sizes = part_sizes(sys, cover);
  return ExactResult{cover, evaluate(model, sizes, sys.total_weight()), search.nodes()};
}

ExactResult exact_maxmin(const SetSystem& sys, ExactLimits limits) {
  return exact_cover(sys, CostModel::max_min(), limits);
}

}  // namespace pmcover
