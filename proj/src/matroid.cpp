#include "heterotree/matroid.hpp"

#include <cstdint>
#include <queue>
#include <string>
#include <vector>

namespace heterotree {

bool IndependenceOracle::independent(const EdgeSet& x) const {
  return kind_ == MatroidKind::graphic ? graphic_independent(*graph_, x) : partition_independent(*graph_, x);
}

int IndependenceOracle::greedy_rank(const EdgeSet& x) const {
  validate(*graph_, x);
  EdgeSet basis;
  for (EdgeId id : x) {
    basis.insert(id);
    if (!independent(basis)) basis.erase(id);
  }
  return static_cast<int>(basis.size());
}

bool graphic_independent(const EdgeColouredGraph& g, const EdgeSet& x) {
  validate(g, x);
  DisjointSets sets(g.num_vertices());
  for (EdgeId id : x) {
    if (!sets.unite(g.edge(id).u, g.edge(id).v)) return false;
  }
  return true;
}

bool partition_independent(const EdgeColouredGraph& g, const EdgeSet& x) { return is_heterochromatic(g, x); }

int graphic_rank(const EdgeColouredGraph& g, const EdgeSet& x) { return g.num_vertices() - components_count(g, x); }

int partition_corank(const EdgeColouredGraph& g, const EdgeSet& x) {
  validate(g, x);
  std::vector<bool> outside(static_cast<std::size_t>(g.num_colours()), false);
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (!x.contains(id)) outside[static_cast<std::size_t>(g.edge(id).colour - 1)] = true;
  }
  int rank = 0;
  for (bool b : outside) rank += b ? 1 : 0;
  return rank;
}

namespace {

constexpr int kNone = -1;

// One augmentation step. Returns false when no augmenting path exists.
bool augment(const EdgeColouredGraph& g, std::vector<bool>& in_set) {
  const std::size_t m = g.num_edges();
  const int nv = g.num_vertices();

  std::vector<EdgeId> members;
  std::vector<int> owner(static_cast<std::size_t>(g.num_colours()) + 1, kNone);
  DisjointSets full(nv);
  for (EdgeId id = 0; id < m; ++id) {
    if (!in_set[id]) continue;
    members.push_back(id);
    owner[static_cast<std::size_t>(g.edge(id).colour)] = static_cast<int>(id);
    full.unite(g.edge(id).u, g.edge(id).v);
  }

  std::vector<bool> source(m, false);
  std::vector<bool> sink(m, false);
  for (EdgeId y = 0; y < m; ++y) {
    if (in_set[y]) continue;
    source[y] = full.find(g.edge(y).u) != full.find(g.edge(y).v);
    sink[y] = owner[static_cast<std::size_t>(g.edge(y).colour)] == kNone;
  }

  // graphic_arc[k][y]: I - members[k] + y stays acyclic.
  std::vector<std::vector<bool>> graphic_arc(members.size(), std::vector<bool>(m, false));
  for (std::size_t k = 0; k < members.size(); ++k) {
    DisjointSets without(nv);
    for (EdgeId id : members) {
      if (id != members[k]) without.unite(g.edge(id).u, g.edge(id).v);
    }
    for (EdgeId y = 0; y < m; ++y) {
      if (!in_set[y]) graphic_arc[k][y] = without.find(g.edge(y).u) != without.find(g.edge(y).v);
    }
  }
  std::vector<int> member_slot(m, kNone);
  for (std::size_t k = 0; k < members.size(); ++k) member_slot[members[k]] = static_cast<int>(k);

  std::vector<int> prev(m, kNone);
  std::vector<bool> visited(m, false);
  std::queue<EdgeId> queue;
  for (EdgeId y = 0; y < m; ++y) {
    if (source[y]) {
      visited[y] = true;
      queue.push(y);
    }
  }

  while (!queue.empty()) {
    const EdgeId a = queue.front();
    queue.pop();
    if (!in_set[a] && sink[a]) {
      for (int cur = static_cast<int>(a); cur != kNone; cur = prev[static_cast<std::size_t>(cur)]) {
        in_set[static_cast<std::size_t>(cur)] = !in_set[static_cast<std::size_t>(cur)];
      }
      return true;
    }
    if (in_set[a]) {
      // x -> y when I - x + y is acyclic.
      const auto k = static_cast<std::size_t>(member_slot[a]);
      for (EdgeId y = 0; y < m; ++y) {
        if (!in_set[y] && !visited[y] && graphic_arc[k][y]) {
          visited[y] = true;
          prev[y] = static_cast<int>(a);
          queue.push(y);
        }
      }
    } else {
      // y -> x when I - x + y is heterochromatic.
      const Colour cy = g.edge(a).colour;
      for (EdgeId x : members) {
        if (visited[x]) continue;
        if (owner[static_cast<std::size_t>(cy)] == kNone || g.edge(x).colour == cy) {
          visited[x] = true;
          prev[x] = static_cast<int>(a);
          queue.push(x);
        }
      }
    }
  }
  return false;
}

std::uint64_t subset_count(const EdgeColouredGraph& g) {
  if (g.num_edges() > kExhaustiveEdgeLimit) {
    const std::uint64_t space = g.num_edges() >= 64 ? UINT64_MAX : (std::uint64_t{1} << g.num_edges());
    throw BudgetExceeded("exhaustive subset check limited to " + std::to_string(kExhaustiveEdgeLimit) +
                             " edges, graph has " + std::to_string(g.num_edges()),
                         space);
  }
  return std::uint64_t{1} << g.num_edges();
}

EdgeSet from_mask(std::uint64_t mask, std::size_t m) {
  std::vector<EdgeId> ids;
  for (EdgeId id = 0; id < m; ++id) {
    if (mask >> id & 1U) ids.push_back(id);
  }
  return EdgeSet(std::move(ids));
}

// Calls fn(mask, w(X), c(X)) for every subset X of E(G).
template <typename Fn>
void for_each_subset(const EdgeColouredGraph& g, Fn&& fn) {
  const std::uint64_t total = subset_count(g);
  const std::size_t m = g.num_edges();
  std::vector<std::uint64_t> class_mask(static_cast<std::size_t>(g.num_colours()), 0);
  for (EdgeId id = 0; id < m; ++id) {
    class_mask[static_cast<std::size_t>(g.edge(id).colour - 1)] |= std::uint64_t{1} << id;
  }
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    DisjointSets sets(g.num_vertices());
    for (EdgeId id = 0; id < m; ++id) {
      if (mask >> id & 1U) sets.unite(g.edge(id).u, g.edge(id).v);
    }
    int contained = 0;
    for (std::uint64_t cm : class_mask) contained += (mask & cm) == cm ? 1 : 0;
    if (!fn(mask, sets.num_sets(), contained)) return;
  }
}

}  // namespace

IntersectionResult max_common_independent(const EdgeColouredGraph& g) {
  std::vector<bool> in_set(g.num_edges(), false);
  while (augment(g, in_set)) {
  }
  std::vector<EdgeId> ids;
  for (EdgeId id = 0; id < in_set.size(); ++id) {
    if (in_set[id]) ids.push_back(id);
  }
  return IntersectionResult{EdgeSet(std::move(ids)), std::nullopt};
}

std::optional<EdgeSet> find_heterochromatic_spanning_tree(const EdgeColouredGraph& g) {
  auto result = max_common_independent(g);
  if (result.common_independent.size() + 1 == static_cast<std::size_t>(g.num_vertices())) {
    return std::move(result.common_independent);
  }
  return std::nullopt;
}

RankCover min_rank_cover(const EdgeColouredGraph& g) {
  const int nv = g.num_vertices();
  const int k = g.num_colours();
  RankCover best{EdgeSet{}, -1};
  std::uint64_t best_mask = 0;
  for_each_subset(g, [&](std::uint64_t mask, int w, int c) {
    const int value = (nv - w) + (k - c);
    if (best.value < 0 || value < best.value) {
      best.value = value;
      best_mask = mask;
    }
    return true;
  });
  best.x = from_mask(best_mask, g.num_edges());
  return best;
}

IntersectionResult certified_max_common_independent(const EdgeColouredGraph& g) {
  auto result = max_common_independent(g);
  const auto cover = min_rank_cover(g);
  if (static_cast<int>(result.common_independent.size()) != cover.value) {
    throw InternalError("matroid intersection size " + std::to_string(result.common_independent.size()) +
                        " disagrees with min-max value " + std::to_string(cover.value));
  }
  result.certificate = cover.x;
  return result;
}

Lemma1Check lemma1_condition_holds(const EdgeColouredGraph& g) {
  const int n = g.num_vertices() - 1;
  if (g.num_colours() != n) {
    throw InvalidInput("lemma check needs n colours on n + 1 vertices; got " + std::to_string(g.num_colours()) +
                       " colours on " + std::to_string(g.num_vertices()) + " vertices");
  }
  Lemma1Check check;
  for_each_subset(g, [&](std::uint64_t mask, int w, int c) {
    if (w + c <= n + 1) return true;
    check.holds = false;
    check.violating = from_mask(mask, g.num_edges());
    return false;
  });
  return check;
}

}  // namespace heterotree
