#pragma once

// Test-only brute-force oracles. They use DFS over adjacency lists and plain
// subset enumeration, sharing no code path with the library under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "heterotree/graph.hpp"

namespace heterotree::testing {

inline int dfs_components(int nv, const EdgeColouredGraph& g, const std::vector<EdgeId>& ids) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nv));
  for (EdgeId id : ids) {
    adj[g.edge(id).u].push_back(g.edge(id).v);
    adj[g.edge(id).v].push_back(g.edge(id).u);
  }
  std::vector<bool> seen(static_cast<std::size_t>(nv), false);
  int comps = 0;
  for (int s = 0; s < nv; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : adj[a]) {
        if (!seen[b]) {
          seen[b] = true;
          stack.push_back(b);
        }
      }
    }
  }
  return comps;
}

// A forest has exactly |V| - |X| components.
inline bool dfs_acyclic(const EdgeColouredGraph& g, const std::vector<EdgeId>& ids) {
  return dfs_components(g.num_vertices(), g, ids) + static_cast<int>(ids.size()) == g.num_vertices();
}

inline bool distinct_colours(const EdgeColouredGraph& g, const std::vector<EdgeId>& ids) {
  std::set<Colour> colours;
  for (EdgeId id : ids) colours.insert(g.edge(id).colour);
  return colours.size() == ids.size();
}

inline std::vector<EdgeId> mask_ids(std::uint64_t mask, std::size_t m) {
  std::vector<EdgeId> ids;
  for (EdgeId id = 0; id < m; ++id) {
    if (mask >> id & 1U) ids.push_back(id);
  }
  return ids;
}

// Every (|V| - 1)-subset of edges that is a heterochromatic spanning tree.
inline std::vector<std::vector<EdgeId>> brute_force_rainbow_trees(const EdgeColouredGraph& g) {
  std::vector<std::vector<EdgeId>> trees;
  const std::size_t m = g.num_edges();
  const auto k = static_cast<std::size_t>(g.num_vertices() - 1);
  if (k > m) return trees;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<EdgeId> ids;
    for (EdgeId id = 0; id < m; ++id) {
      if (pick[id]) ids.push_back(id);
    }
    if (distinct_colours(g, ids) && dfs_components(g.num_vertices(), g, ids) == 1) trees.push_back(ids);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return trees;
}

// Largest acyclic heterochromatic edge set, over all 2^|E| subsets.
inline std::size_t brute_force_max_common(const EdgeColouredGraph& g) {
  std::size_t best = 0;
  const std::size_t m = g.num_edges();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const auto ids = mask_ids(mask, m);
    if (ids.size() > best && distinct_colours(g, ids) && dfs_acyclic(g, ids)) best = ids.size();
  }
  return best;
}

// Random coloured simple graph: a random spanning tree (if connected) plus
// each remaining pair with probability p, colours drawn from 1..max_colours
// and then compacted.
inline EdgeColouredGraph random_coloured_graph(int nv, double p, int max_colours, bool connected,
                                               std::mt19937_64& rng) {
  std::set<std::pair<int, int>> pairs;
  if (connected) {
    for (int v = 1; v < nv; ++v) {
      std::uniform_int_distribution<int> pick(0, v - 1);
      int u = pick(rng);
      pairs.emplace(u, v);
    }
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) {
      if (coin(rng)) pairs.emplace(u, v);
    }
  }
  std::uniform_int_distribution<int> colour(1, max_colours);
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, colour(rng)});
  std::shuffle(edges.begin(), edges.end(), rng);
  return EdgeColouredGraph(nv, compact_colours(std::move(edges)));
}

inline EdgeSet random_subset(const EdgeColouredGraph& g, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<EdgeId> ids;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (coin(rng)) ids.push_back(id);
  }
  return EdgeSet(std::move(ids));
}

// Edge ids of g for the given vertex pairs, in the given order.
inline EdgeSet edges_of(const EdgeColouredGraph& g, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<EdgeId> ids;
  for (auto [a, b] : pairs) ids.push_back(g.find_edge(a, b).value());
  return EdgeSet(std::move(ids));
}

// K_3 with edges 01:1, 12:1, 02:2 (ids 0, 1, 2).
inline EdgeColouredGraph graceful_k3() { return EdgeColouredGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 2}}); }

inline EdgeColouredGraph monochromatic_k3() { return EdgeColouredGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }

}  // namespace heterotree::testing
