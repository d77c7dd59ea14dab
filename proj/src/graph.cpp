#include "pmcover/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string>

#include "pmcover/errors.hpp"

namespace pmcover {
namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

int lowest(Mask m) { return std::countr_zero(m); }

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    for (int u : g.neighbors(v)) adj[v] |= bit(u);
  }
  return adj;
}

std::vector<int> to_vertices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

// Number of cliques in a greedy clique cover of `candidates`; an upper
// bound on the independence number of the induced subgraph.
int clique_cover_bound(const std::vector<Mask>& adj, Mask candidates) {
  int cliques = 0;
  while (candidates) {
    const int u = lowest(candidates);
    Mask clique = bit(u);
    Mask extend = candidates & adj[u];
    while (extend) {
      const int w = lowest(extend);
      clique |= bit(w);
      extend &= adj[w];
    }
    candidates &= ~clique;
    ++cliques;
  }
  return cliques;
}

class MisSearch {
 public:
  explicit MisSearch(const std::vector<Mask>& adj) : adj_(adj) {}

  Mask run(Mask candidates) {
    best_ = 0;
    best_size_ = 0;
    descend(candidates, 0, 0);
    return best_;
  }

 private:
  void descend(Mask candidates, Mask chosen, int size) {
    if (!candidates) {
      if (size > best_size_) {
        best_ = chosen;
        best_size_ = size;
      }
      return;
    }
    if (size + clique_cover_bound(adj_, candidates) <= best_size_) return;

    int pivot = -1;
    int pivot_degree = -1;
    for (Mask m = candidates; m; m &= m - 1) {
      const int v = lowest(m);
      const int d = std::popcount(adj_[v] & candidates);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    if (pivot_degree == 0) {
      descend(0, chosen | candidates, size + std::popcount(candidates));
      return;
    }
    descend(candidates & ~adj_[pivot] & ~bit(pivot), chosen | bit(pivot), size + 1);
    descend(candidates & ~bit(pivot), chosen, size);
  }

  const std::vector<Mask>& adj_;
  Mask best_ = 0;
  int best_size_ = 0;
};

// Minimum-degree greedy restricted to the vertices flagged in `alive`.
std::vector<int> greedy_mis_within(const Graph& g, std::vector<bool> alive) {
  std::vector<int> degree(g.n(), 0);
  int remaining = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (!alive[v]) continue;
    ++remaining;
    for (int u : g.neighbors(v)) degree[v] += alive[u] ? 1 : 0;
  }
  std::vector<int> chosen;
  auto remove = [&](int v) {
    alive[v] = false;
    --remaining;
    for (int u : g.neighbors(v)) {
      if (alive[u]) --degree[u];
    }
  };
  while (remaining > 0) {
    int pick = -1;
    for (int v = 0; v < g.n(); ++v) {
      if (alive[v] && (pick < 0 || degree[v] < degree[pick])) pick = v;
    }
    chosen.push_back(pick);
    std::vector<int> closed{pick};
    for (int u : g.neighbors(pick)) {
      if (alive[u]) closed.push_back(u);
    }
    for (int u : closed) remove(u);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

void check_exact_size(const Graph& g) {
  if (g.n() > kExactMisLimit) {
    throw LimitError("exact independent set refused: n = " + std::to_string(g.n()) + " exceeds limit " +
                     std::to_string(kExactMisLimit));
  }
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw ValidationError("negative vertex count");
  adjacency_.assign(n, {});
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ValidationError("edge " + std::to_string(e) + " has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw ValidationError("edge " + std::to_string(e) + " is a self-loop at " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    const auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end()) {
      throw ValidationError("edge {" + std::to_string(v) + ", " + std::to_string(*dup) + "} appears more than once");
    }
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency_) twice += nb.size();
  return twice / 2;
}

Graph complement_graph(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.n(), edges);
}

Graph gen_random_graph(int n, double edge_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < edge_probability) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::vector<int> exact_mis(const Graph& g) {
  check_exact_size(g);
  const auto adj = adjacency_masks(g);
  MisSearch search(adj);
  const Mask all = g.n() == 64 ? ~Mask{0} : bit(g.n()) - 1;
  return to_vertices(search.run(all));
}

std::vector<int> greedy_mis(const Graph& g) { return greedy_mis_within(g, std::vector<bool>(g.n(), true)); }

std::vector<double> Coloring::class_sizes() const {
  std::vector<double> sizes;
  sizes.reserve(classes.size());
  for (const auto& c : classes) sizes.push_back(static_cast<double>(c.size()));
  return sizes;
}

Coloring maxis_coloring(const Graph& g, IsSolver solver) {
  Coloring out;
  out.color.assign(g.n(), -1);
  if (solver == IsSolver::kExact) {
    check_exact_size(g);
    const auto adj = adjacency_masks(g);
    MisSearch search(adj);
    Mask residual = g.n() == 0 ? 0 : bit(g.n()) - 1;
    while (residual) {
      const Mask picked = search.run(residual);
      for (int v : to_vertices(picked)) out.color[v] = static_cast<int>(out.classes.size());
      out.classes.push_back(to_vertices(picked));
      residual &= ~picked;
    }
    return out;
  }
  std::vector<bool> alive(g.n(), true);
  int remaining = g.n();
  while (remaining > 0) {
    auto picked = greedy_mis_within(g, alive);
    for (int v : picked) {
      out.color[v] = static_cast<int>(out.classes.size());
      alive[v] = false;
      --remaining;
    }
    out.classes.push_back(std::move(picked));
  }
  return out;
}

Coloring coloring_from_cover(const Graph& g, const Cover& cover) {
  Coloring out;
  out.color.assign(g.n(), -1);
  std::vector<int> renumber;
  for (int v = 0; v < g.n(); ++v) {
    const int subset = cover[v];
    if (subset >= static_cast<int>(renumber.size())) renumber.resize(subset + 1, -1);
    if (renumber[subset] < 0) {
      renumber[subset] = static_cast<int>(out.classes.size());
      out.classes.emplace_back();
    }
    out.color[v] = renumber[subset];
    out.classes[renumber[subset]].push_back(v);
  }
  return out;
}

bool is_proper_coloring(const Graph& g, std::span<const int> color) {
  if (static_cast<int>(color.size()) != g.n()) return false;
  for (int v = 0; v < g.n(); ++v) {
    if (color[v] < 0) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    if (color[u] == color[v]) return false;
  }
  return true;
}

SetSystem graph_to_setsystem(const Graph& g, MisEnumerationLimits limits) {
  if (g.n() > limits.max_n) {
    throw LimitError("maximal independent set enumeration refused: n = " + std::to_string(g.n()) +
                     " exceeds limit " + std::to_string(limits.max_n));
  }
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  const Mask all = bit(n) - 1;
  // Maximal independent sets are the maximal cliques of the complement;
  // Bron-Kerbosch with pivoting on non-neighborhoods.
  std::vector<Mask> found;
  auto non_adj = [&](int v) { return all & ~adj[v] & ~bit(v); };
  auto expand = [&](auto&& self, Mask chosen, Mask candidates, Mask excluded) -> void {
    if (!candidates && !excluded) {
      if (found.size() >= limits.max_sets) {
        throw LimitError("more than " + std::to_string(limits.max_sets) + " maximal independent sets");
      }
      found.push_back(chosen);
      return;
    }
    int pivot = lowest(candidates | excluded);
    int pivot_cover = -1;
    for (Mask m = candidates | excluded; m; m &= m - 1) {
      const int u = lowest(m);
      const int covered = std::popcount(candidates & non_adj(u));
      if (covered > pivot_cover) {
        pivot = u;
        pivot_cover = covered;
      }
    }
    for (Mask m = candidates & ~non_adj(pivot); m; m &= m - 1) {
      const int v = lowest(m);
      self(self, chosen | bit(v), candidates & non_adj(v), excluded & non_adj(v));
      candidates &= ~bit(v);
      excluded |= bit(v);
    }
  };
  expand(expand, 0, all, 0);

  std::vector<std::vector<int>> sets;
  sets.reserve(found.size());
  for (Mask m : found) sets.push_back(to_vertices(m));
  std::sort(sets.begin(), sets.end());
  return SetSystem(n, std::move(sets));
}

}  // namespace pmcover
