#include "heterotree/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <utility>

namespace heterotree {

EdgeColouredGraph::EdgeColouredGraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 1) {
    throw InvalidInput("graph must have at least one vertex");
  }
  std::set<std::pair<Vertex, Vertex>> seen;
  Colour max_colour = 0;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= num_vertices_ || e.u >= e.v) {
      throw InvalidInput("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         ") violates 0 <= u < v < vertices");
    }
    if (e.colour < 1) {
      throw InvalidInput("edge colours must be >= 1");
    }
    if (!seen.emplace(e.u, e.v).second) {
      throw InvalidInput("duplicate edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    max_colour = std::max(max_colour, e.colour);
  }
  classes_.resize(static_cast<std::size_t>(max_colour));
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    classes_[static_cast<std::size_t>(edges_[id].colour - 1)].push_back(id);
  }
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (classes_[c].empty()) {
      throw InvalidInput("colour " + std::to_string(c + 1) + " is unused; colours must be 1..k");
    }
  }
}

std::span<const EdgeId> EdgeColouredGraph::colour_class(Colour c) const {
  if (c < 1 || c > num_colours()) {
    throw InvalidInput("no colour " + std::to_string(c));
  }
  return classes_[static_cast<std::size_t>(c - 1)];
}

std::vector<std::size_t> EdgeColouredGraph::class_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(classes_.size());
  for (const auto& cls : classes_) sizes.push_back(cls.size());
  return sizes;
}

std::optional<EdgeId> EdgeColouredGraph::find_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    if (edges_[id].u == a && edges_[id].v == b) return id;
  }
  return std::nullopt;
}

std::vector<Edge> compact_colours(std::vector<Edge> edges) {
  std::map<Colour, Colour> relabel;
  for (const Edge& e : edges) relabel.emplace(e.colour, 0);
  Colour next = 1;
  for (auto& [from, to] : relabel) to = next++;
  for (Edge& e : edges) e.colour = relabel[e.colour];
  return edges;
}

EdgeSet::EdgeSet(std::initializer_list<EdgeId> ids) : EdgeSet(std::vector<EdgeId>(ids)) {}

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

EdgeSet EdgeSet::all(const EdgeColouredGraph& g) {
  std::vector<EdgeId> ids(g.num_edges());
  for (EdgeId id = 0; id < ids.size(); ++id) ids[id] = id;
  return EdgeSet(std::move(ids));
}

bool EdgeSet::contains(EdgeId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

void EdgeSet::insert(EdgeId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

void EdgeSet::erase(EdgeId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it != ids_.end() && *it == id) ids_.erase(it);
}

void validate(const EdgeColouredGraph& g, const EdgeSet& x) {
  if (!x.empty() && x.ids().back() >= g.num_edges()) {
    throw InvalidEdgeSet("edge index " + std::to_string(x.ids().back()) + " out of range for graph with " +
                         std::to_string(g.num_edges()) + " edges");
  }
}

DisjointSets::DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), num_sets_(n) {
  for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
}

int DisjointSets::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --num_sets_;
  return true;
}

int components_count(const EdgeColouredGraph& g, const EdgeSet& x) {
  validate(g, x);
  DisjointSets sets(g.num_vertices());
  for (EdgeId id : x) sets.unite(g.edge(id).u, g.edge(id).v);
  return sets.num_sets();
}

int contained_classes_count(const EdgeColouredGraph& g, const EdgeSet& x) {
  validate(g, x);
  std::vector<std::size_t> hits(static_cast<std::size_t>(g.num_colours()), 0);
  for (EdgeId id : x) ++hits[static_cast<std::size_t>(g.edge(id).colour - 1)];
  const auto sizes = g.class_sizes();
  int contained = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (hits[c] == sizes[c]) ++contained;
  }
  return contained;
}

bool is_heterochromatic(const EdgeColouredGraph& g, const EdgeSet& x) {
  validate(g, x);
  std::vector<bool> used(static_cast<std::size_t>(g.num_colours()), false);
  for (EdgeId id : x) {
    const auto c = static_cast<std::size_t>(g.edge(id).colour - 1);
    if (used[c]) return false;
    used[c] = true;
  }
  return true;
}

bool is_spanning_tree(const EdgeColouredGraph& g, const EdgeSet& x) {
  validate(g, x);
  return x.size() + 1 == static_cast<std::size_t>(g.num_vertices()) && components_count(g, x) == 1;
}

namespace {

std::size_t choose2(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

// Per component (size in side 0, size in side 1) of a proper 2-colouring, or
// nullopt when some component has an odd cycle.
std::optional<std::vector<std::pair<int, int>>> bipartite_components(const EdgeColouredGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<std::pair<int, int>> comps;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    std::pair<int, int> counts{0, 0};
    std::queue<Vertex> queue;
    side[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      Vertex a = queue.front();
      queue.pop();
      (side[a] == 0 ? counts.first : counts.second)++;
      for (Vertex b : adj[a]) {
        if (side[b] == -1) {
          side[b] = 1 - side[a];
          queue.push(b);
        } else if (side[b] == side[a]) {
          return std::nullopt;
        }
      }
    }
    comps.push_back(counts);
  }
  return comps;
}

// Whether each component can be oriented so that one side totals exactly target.
bool can_balance(const std::vector<std::pair<int, int>>& comps, int target) {
  std::vector<bool> reachable(static_cast<std::size_t>(target) + 1, false);
  reachable[0] = true;
  for (auto [a, b] : comps) {
    std::vector<bool> next(reachable.size(), false);
    for (int s = 0; s <= target; ++s) {
      if (!reachable[s]) continue;
      if (s + a <= target) next[s + a] = true;
      if (s + b <= target) next[s + b] = true;
    }
    reachable = std::move(next);
  }
  return reachable[target];
}

bool sizes_match(std::vector<std::size_t> sorted_sizes, std::vector<std::size_t> expected) {
  std::sort(expected.begin(), expected.end());
  return sorted_sizes == expected;
}

}  // namespace

std::vector<std::string> ColouringClass::verdicts() const {
  std::vector<std::string> names;
  if (nice) names.emplace_back("nice");
  if (cute) names.emplace_back("cute");
  if (bipartite_nice) names.emplace_back("bipartite_nice");
  if (bipartite_cute) names.emplace_back("bipartite_cute");
  if (names.empty()) names.emplace_back("other");
  return names;
}

ColouringClass classify_colouring(const EdgeColouredGraph& g) {
  ColouringClass result;
  result.class_sizes = g.class_sizes();
  std::sort(result.class_sizes.begin(), result.class_sizes.end());

  const auto vertices = static_cast<std::size_t>(g.num_vertices());
  const auto colours = static_cast<std::size_t>(g.num_colours());
  const std::size_t edges = g.num_edges();
  const std::size_t n = vertices - 1;

  if (n >= 1 && colours == n && edges == choose2(n + 1)) {
    std::vector<std::size_t> expected;
    for (std::size_t i = 1; i <= n; ++i) expected.push_back(i);
    result.nice = sizes_match(result.class_sizes, expected);
  }
  if (n >= 2 && colours == n && edges == 1 + choose2(n)) {
    std::vector<std::size_t> expected{1};
    for (std::size_t i = 1; i <= n - 1; ++i) expected.push_back(i);
    result.cute = sizes_match(result.class_sizes, expected);
  }

  if (vertices % 2 == 0) {
    const std::size_t m = vertices / 2;
    const auto comps = bipartite_components(g);
    const bool spanning_in_kmm = comps && can_balance(*comps, static_cast<int>(m));
    if (spanning_in_kmm && colours == 2 * m - 1 && edges == m * m) {
      // m^2 edges inside a balanced bipartition means the graph is K_{m,m}.
      std::vector<std::size_t> expected{m};
      for (std::size_t i = 1; i < m; ++i) expected.insert(expected.end(), {i, i});
      result.bipartite_nice = sizes_match(result.class_sizes, expected);
    }
    if (spanning_in_kmm && m >= 2 && colours == 2 * m - 1 && edges == 1 + 2 * choose2(m)) {
      std::vector<std::size_t> expected{1};
      for (std::size_t i = 1; i < m; ++i) expected.insert(expected.end(), {i, i});
      result.bipartite_cute = sizes_match(result.class_sizes, expected);
    }
  }
  return result;
}

EdgeSet Subgraph::lift(const EdgeSet& local) const {
  std::vector<EdgeId> ids;
  ids.reserve(local.size());
  for (EdgeId id : local) ids.push_back(host_edges.at(id));
  return EdgeSet(std::move(ids));
}

Subgraph spanning_subgraph(const EdgeColouredGraph& g, const EdgeSet& x) {
  validate(g, x);
  std::vector<Edge> edges;
  std::vector<EdgeId> host;
  for (EdgeId id : x) {
    edges.push_back(g.edge(id));
    host.push_back(id);
  }
  return Subgraph{EdgeColouredGraph(g.num_vertices(), compact_colours(std::move(edges))), std::move(host)};
}

}  // namespace heterotree
