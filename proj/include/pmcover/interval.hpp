#pragma once

#include <vector>

#include "pmcover/graph.hpp"

namespace pmcover {

struct Interval {
  double left;
  double right;
};

// Closed intervals on the real line. Two intervals are adjacent in the
// induced graph when they intersect; a family of intervals is a clique
// exactly when the intervals share a common point.
class IntervalSet {
 public:
  // Throws ValidationError on non-finite endpoints or left > right.
  explicit IntervalSet(std::vector<Interval> intervals);

  int size() const { return static_cast<int>(intervals_.size()); }
  const Interval& operator[](int i) const { return intervals_[i]; }
  const std::vector<Interval>& intervals() const { return intervals_; }

  Graph to_graph() const;

 private:
  std::vector<Interval> intervals_;
};

IntervalSet gen_random_intervals(int n, double span, double max_length, std::uint64_t seed);

struct CliquePartition {
  std::vector<std::vector<int>> parts;  // sorted interval ids
  std::vector<double> stab_points;      // a point shared by every interval of parts[j]
  std::vector<int> part_of;             // part index of each interval
  double score = 0.0;                   // sum of c^{p+1}, or sum of c ln c at p = 0

  std::vector<double> sizes() const;
};

// Partition of the interval graph into cliques maximizing the sum of
// c^{p+1} over parts (p > 0), i.e. the p-mean of the part sizes. At p = 0
// the sum of c ln c is maximized (minimum entropy clique partition).
//
// Dynamic program over windows between stab points. Some optimal partition
// contains all intervals through a single point (grow the largest part to
// every interval through its stab point; the new size vector dominates the
// old one), and removing them splits the rest into intervals entirely to the
// left and entirely to the right. With stab points restricted to left
// endpoints there are O(n^2) windows, each solved in O(n): O(n^3) total.
//
// Throws ValidationError for p < 0.
CliquePartition interval_clique_partition(const IntervalSet& intervals, double p);

}  // namespace pmcover
