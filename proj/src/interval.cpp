#include "pmcover/interval.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "pmcover/errors.hpp"

namespace pmcover {

IntervalSet::IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    if (!std::isfinite(iv.left) || !std::isfinite(iv.right)) {
      throw ValidationError("interval " + std::to_string(i) + " has a non-finite endpoint");
    }
    if (iv.left > iv.right) throw ValidationError("interval " + std::to_string(i) + " has left > right");
  }
}

Graph IntervalSet::to_graph() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (std::max(intervals_[i].left, intervals_[j].left) <= std::min(intervals_[i].right, intervals_[j].right)) {
        edges.emplace_back(i, j);
      }
    }
  }
  return Graph(size(), edges);
}

IntervalSet gen_random_intervals(int n, double span, double max_length, std::uint64_t seed) {
  // Integer endpoints, so touching and nested intervals show up often.
  std::mt19937_64 rng(seed);
  const auto span_steps = static_cast<std::uint64_t>(span) + 1;
  const auto length_steps = static_cast<std::uint64_t>(max_length) + 1;
  std::vector<Interval> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double left = static_cast<double>(rng() % span_steps);
    const double length = static_cast<double>(rng() % length_steps);
    out.push_back({left, left + length});
  }
  return IntervalSet(std::move(out));
}

std::vector<double> CliquePartition::sizes() const {
  std::vector<double> out;
  out.reserve(parts.size());
  for (const auto& part : parts) out.push_back(static_cast<double>(part.size()));
  return out;
}

CliquePartition interval_clique_partition(const IntervalSet& intervals, double p) {
  if (!(p >= 0.0) || !std::isfinite(p)) throw ValidationError("interval clique partition needs finite p >= 0");
  const int m = intervals.size();
  CliquePartition out;
  out.part_of.assign(m, -1);
  if (m == 0) return out;

  auto gain = [p](int c) {
    const double x = c;
    return p == 0.0 ? x * std::log(x) : std::pow(x, p + 1.0);
  };

  // Stab points are the distinct left endpoints. Interval i contains stab y
  // exactly when first[i] <= y <= last[i].
  std::vector<double> stabs;
  for (const auto& iv : intervals.intervals()) stabs.push_back(iv.left);
  std::sort(stabs.begin(), stabs.end());
  stabs.erase(std::unique(stabs.begin(), stabs.end()), stabs.end());
  const int s = static_cast<int>(stabs.size());
  std::vector<int> first(m), last(m);
  for (int i = 0; i < m; ++i) {
    first[i] = static_cast<int>(std::lower_bound(stabs.begin(), stabs.end(), intervals[i].left) - stabs.begin());
    last[i] = static_cast<int>(std::upper_bound(stabs.begin(), stabs.end(), intervals[i].right) - stabs.begin()) - 1;
  }

  // Window (a, b) with -1 <= a < b <= s holds the intervals strictly between
  // stab a and stab b: first > a and last < b. Stored at [a + 1][b].
  const int width = s + 1;
  std::vector<double> best(static_cast<std::size_t>(width) * width, 0.0);
  std::vector<int> choice(static_cast<std::size_t>(width) * width, -1);
  auto at = [width](int a, int b) { return static_cast<std::size_t>(a + 1) * width + b; };

  std::vector<int> coverage(s + 1);
  for (int gap = 2; gap <= s + 1; ++gap) {
    for (int a = -1; a + gap <= s; ++a) {
      const int b = a + gap;
      std::fill(coverage.begin() + (a + 1), coverage.begin() + b + 1, 0);
      bool any = false;
      for (int i = 0; i < m; ++i) {
        if (first[i] > a && last[i] < b) {
          ++coverage[first[i]];
          --coverage[last[i] + 1];
          any = true;
        }
      }
      if (!any) continue;
      double top = -1.0;
      int pick = -1;
      int running = 0;
      for (int y = a + 1; y < b; ++y) {
        running += coverage[y];
        if (running == 0) continue;
        const double value = gain(running) + best[at(a, y)] + best[at(y, b)];
        if (value > top) {
          top = value;
          pick = y;
        }
      }
      best[at(a, b)] = top;
      choice[at(a, b)] = pick;
    }
  }

  // Unwind the chosen stab points.
  std::vector<std::pair<int, int>> stack{{-1, s}};
  while (!stack.empty()) {
    const auto [a, b] = stack.back();
    stack.pop_back();
    const int y = choice[at(a, b)];
    if (y < 0) continue;
    std::vector<int> part;
    for (int i = 0; i < m; ++i) {
      if (first[i] > a && last[i] < b && first[i] <= y && y <= last[i]) part.push_back(i);
    }
    const int index = static_cast<int>(out.parts.size());
    for (int i : part) out.part_of[i] = index;
    out.score += gain(static_cast<int>(part.size()));
    out.parts.push_back(std::move(part));
    out.stab_points.push_back(stabs[y]);
    stack.emplace_back(y, b);
    stack.emplace_back(a, y);
  }
  return out;
}

}  // namespace pmcover
