#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmcover/rational.hpp"

namespace pmcover {

// A ground set {0, ..., n-1} together with a collection of subsets whose
// union is the whole ground set, plus optional positive element weights.
//
// Construction normalizes every subset to sorted order and validates:
// ids in range, no duplicates, no empty subsets, every element covered,
// weights strictly positive. Violations throw ValidationError naming the
// offending index. Instances are immutable afterwards.
class SetSystem {
 public:
  SetSystem(int n, std::vector<std::vector<int>> sets,
            std::optional<std::vector<Rational>> weights = std::nullopt,
            std::vector<std::string> names = {});

  int n() const { return n_; }
  int k() const { return static_cast<int>(sets_.size()); }

  const std::vector<std::vector<int>>& sets() const { return sets_; }
  std::span<const int> set(int i) const { return sets_[i]; }
  // Subsets containing element v, in increasing index order.
  std::span<const int> containing(int v) const { return containing_[v]; }

  bool weighted() const { return weights_.has_value(); }
  // Empty when unweighted.
  std::span<const Rational> weights() const;
  double weight(int v) const { return weight_values_[v]; }
  // w(V), or n when unweighted.
  double total_weight() const { return total_weight_; }

  // Largest subset size by element count.
  int max_set_size() const;
  // Largest subset size by weight (equals max_set_size() when unweighted).
  double max_set_weight() const;

  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const SetSystem& a, const SetSystem& b) {
    return a.n_ == b.n_ && a.sets_ == b.sets_ && a.weights_ == b.weights_ && a.names_ == b.names_;
  }

 private:
  int n_;
  std::vector<std::vector<int>> sets_;
  std::optional<std::vector<Rational>> weights_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> containing_;
  std::vector<double> weight_values_;
  double total_weight_ = 0.0;
};

// Total assignment of elements to subsets containing them.
class Cover {
 public:
  // Throws ValidationError if the assignment has the wrong length, an index
  // out of range, or sends an element to a subset that does not contain it.
  Cover(const SetSystem& sys, std::vector<int> assignment);

  const std::vector<int>& assignment() const { return assignment_; }
  int operator[](int v) const { return assignment_[v]; }
  int size() const { return static_cast<int>(assignment_.size()); }

  friend bool operator==(const Cover&, const Cover&) = default;

 private:
  std::vector<int> assignment_;
};

// c_i for every subset i (weighted totals when the system is weighted).
// Zero entries mark unused subsets.
std::vector<double> part_sizes(const SetSystem& sys, const Cover& cov);

// a_v for every element: the size (or weight) of the part containing v.
std::vector<double> element_values(const SetSystem& sys, const Cover& cov);

// Weighted instance rewritten with w(v) unit copies of each element v.
struct ExpandedSystem {
  SetSystem system;
  // origin[j] is the original element that copy j stands for.
  std::vector<int> origin;

  // Cover of the expanded system in which every copy follows its original.
  Cover lift(const Cover& original) const;
};

// Requires integer weights (throws ValidationError otherwise). Copies of an
// element are numbered contiguously in element order. An unweighted input
// expands to itself.
ExpandedSystem expand_weighted(const SetSystem& sys);

// Least common multiple of the weight denominators (1 when unweighted).
std::int64_t weight_scale(const SetSystem& sys);

// Same system with every weight multiplied by weight_scale(sys).
SetSystem scale_to_integer_weights(const SetSystem& sys);

// Seeded random instance. Each (element, subset) membership is drawn with
// probability `density`; an element left uncovered is then added to one
// uniformly chosen subset, and empty subsets are dropped.
SetSystem gen_random(int n, int k, double density, std::uint64_t seed);

// As gen_random, with integer weights drawn uniformly from [1, max_weight].
SetSystem gen_random_weighted(int n, int k, double density, int max_weight, std::uint64_t seed);

}  // namespace pmcover
