// Independent reference implementations used only by the tests. They trade
// speed for obviousness and share no code with the library beyond the
// input types.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "pmcover/graph.hpp"
#include "pmcover/instance.hpp"
#include "pmcover/interval.hpp"

namespace oracle {

// Objectives written straight from their definitions.
inline double pmean(const std::vector<double>& sizes, double n, double p) {
  if (p == 0.0) {
    double s = 0.0;
    for (double c : sizes)
      if (c > 0) s += c * std::log(c);
    return std::exp(s / n);
  }
  double s = 0.0;
  for (double c : sizes)
    if (c > 0) s += std::pow(c, p + 1.0);
  return std::pow(s / n, 1.0 / p);
}

inline double entropy_bits(const std::vector<double>& sizes, double n) {
  double h = 0.0;
  for (double c : sizes)
    if (c > 0) h -= (c / n) * std::log2(c / n);
  return h;
}

inline double rob(const std::vector<double>& sizes, double n, double beta) {
  double s = 0.0;
  for (double c : sizes)
    if (c > 0) s += std::min(1.0, c / (beta * n));
  return s;
}

inline int parts(const std::vector<double>& sizes) {
  return static_cast<int>(std::count_if(sizes.begin(), sizes.end(), [](double c) { return c > 0; }));
}

// Every reachable labelled part-size vector of a set system, built one
// element at a time. Fine for n <= 12 and k <= 8.
inline std::set<std::vector<double>> reachable_sizes(const pmcover::SetSystem& sys) {
  std::set<std::vector<double>> layer{std::vector<double>(sys.k(), 0.0)};
  for (int v = 0; v < sys.n(); ++v) {
    std::set<std::vector<double>> next;
    for (const auto& s : layer) {
      for (int i = 0; i < sys.k(); ++i) {
        const auto& set = sys.sets()[i];
        if (!std::binary_search(set.begin(), set.end(), v)) continue;
        auto t = s;
        t[i] += sys.weight(v);
        next.insert(t);
      }
    }
    layer.swap(next);
  }
  return layer;
}

// Best value of `score` over all covers; `maximize` picks the direction.
inline double best_cover_value(const pmcover::SetSystem& sys,
                               const std::function<double(const std::vector<double>&)>& score, bool maximize) {
  double best = maximize ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
  for (const auto& sizes : reachable_sizes(sys)) {
    const double v = score(sizes);
    best = maximize ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

// Textbook greedy set cover: repeatedly take the set covering the most
// uncovered elements. Returns the number of sets taken.
inline int textbook_greedy_count(const pmcover::SetSystem& sys) {
  std::set<int> uncovered;
  for (int v = 0; v < sys.n(); ++v) uncovered.insert(v);
  int taken = 0;
  while (!uncovered.empty()) {
    std::size_t best_gain = 0;
    int best = -1;
    for (int i = 0; i < sys.k(); ++i) {
      std::size_t gain = 0;
      for (int v : sys.sets()[i]) gain += uncovered.count(v);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    for (int v : sys.sets()[best]) uncovered.erase(v);
    ++taken;
  }
  return taken;
}

// Calls visit(blocks) for every set partition of {0..n-1}.
inline void for_each_partition(int n, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      visit(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(v);
      rec(v + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({v});
    rec(v + 1);
    blocks.pop_back();
  };
  rec(0);
}

// Exhaustive clique partition of an interval family: a block is a clique
// exactly when its latest left end is no later than its earliest right end.
inline double best_interval_partition(const pmcover::IntervalSet& iv, double p) {
  double best = -std::numeric_limits<double>::infinity();
  for_each_partition(iv.size(), [&](const std::vector<std::vector<int>>& blocks) {
    double score = 0.0;
    for (const auto& b : blocks) {
      double lo = -std::numeric_limits<double>::infinity();
      double hi = std::numeric_limits<double>::infinity();
      for (int i : b) {
        lo = std::max(lo, iv.intervals()[i].left);
        hi = std::min(hi, iv.intervals()[i].right);
      }
      if (lo > hi) return;
      const double c = static_cast<double>(b.size());
      score += p == 0.0 ? c * std::log(c) : std::pow(c, p + 1.0);
    }
    best = std::max(best, score);
  });
  return best;
}

// All proper colorings as class-size vectors (one per set partition into
// independent sets).
inline std::vector<std::vector<double>> coloring_size_vectors(const pmcover::Graph& g) {
  std::vector<std::vector<double>> out;
  for_each_partition(g.n(), [&](const std::vector<std::vector<int>>& blocks) {
    std::vector<double> sizes;
    for (const auto& b : blocks) {
      for (std::size_t x = 0; x < b.size(); ++x)
        for (std::size_t y = x + 1; y < b.size(); ++y)
          if (g.adjacent(b[x], b[y])) return;
      sizes.push_back(static_cast<double>(b.size()));
    }
    out.push_back(sizes);
  });
  return out;
}

// Independence number by trying every vertex subset.
inline int independence_number(const pmcover::Graph& g) {
  const int n = g.n();
  int best = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (!(mask >> u & 1)) continue;
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> v & 1) && g.adjacent(u, v)) ok = false;
    }
    if (ok) best = std::max(best, __builtin_popcountl(mask));
  }
  return best;
}

inline bool is_independent(const pmcover::Graph& g, const std::vector<int>& vs) {
  for (std::size_t x = 0; x < vs.size(); ++x)
    for (std::size_t y = x + 1; y < vs.size(); ++y)
      if (g.adjacent(vs[x], vs[y])) return false;
  return true;
}

}  // namespace oracle
