#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pmcover/instance.hpp"

namespace pmcover {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  // Throws ValidationError on self-loops, repeated edges or bad endpoints.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(adjacency_.size()); }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  bool adjacent(int u, int v) const;
  // Each edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;

 private:
  std::vector<std::vector<int>> adjacency_;
};

Graph complement_graph(const Graph& g);

// Seeded G(n, q) random graph.
Graph gen_random_graph(int n, double edge_probability, std::uint64_t seed);

inline constexpr int kExactMisLimit = 40;

// Maximum independent set by branch and bound: branch on a vertex of
// maximum residual degree, prune with a greedy clique-cover bound.
// Returns sorted vertex ids. Throws LimitError above kExactMisLimit vertices.
std::vector<int> exact_mis(const Graph& g);

// Repeatedly takes a minimum-degree vertex of the remaining graph (lowest id
// on ties) and deletes its closed neighborhood. Returns sorted vertex ids.
std::vector<int> greedy_mis(const Graph& g);

enum class IsSolver { kExact, kGreedy };

struct Coloring {
  std::vector<int> color;                   // color[v], 0-based
  std::vector<std::vector<int>> classes;    // classes[c], sorted vertex ids
  std::vector<double> class_sizes() const;
};

// MaxIS coloring: each color class is an independent set taken from the
// residual graph by the chosen solver, until no vertex is left.
Coloring maxis_coloring(const Graph& g, IsSolver solver);

// Coloring read off a cover of graph_to_setsystem(g).
Coloring coloring_from_cover(const Graph& g, const Cover& cover);

bool is_proper_coloring(const Graph& g, std::span<const int> color);

struct MisEnumerationLimits {
  int max_n = 20;
  std::size_t max_sets = 100000;
};

// Set system whose subsets are the maximal independent sets of g, listed in
// lexicographic order; its covers are exactly the proper colorings of g.
// Throws LimitError when n or the number of maximal independent sets
// exceeds the limits.
SetSystem graph_to_setsystem(const Graph& g, MisEnumerationLimits limits = {});

}  // namespace pmcover
