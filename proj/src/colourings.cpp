#include "heterotree/colourings.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>

namespace heterotree {

namespace {

std::vector<Edge> complete_graph_edges(int num_vertices) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < num_vertices; ++u) {
    for (Vertex v = u + 1; v < num_vertices; ++v) edges.push_back({u, v, 1});
  }
  return edges;
}

// Generators emit edges ordered by (colour, u, v).
EdgeColouredGraph make_sorted(int num_vertices, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.colour, a.u, a.v) < std::tie(b.colour, b.u, b.v);
  });
  return EdgeColouredGraph(num_vertices, std::move(edges));
}

// Assigns colour k + 1 to the k-th consecutive block of the given sizes.
void colour_blocks(std::vector<Edge>& edges, const std::vector<int>& block_sizes) {
  std::size_t pos = 0;
  for (std::size_t k = 0; k < block_sizes.size(); ++k) {
    for (int j = 0; j < block_sizes[k]; ++j) edges.at(pos++).colour = static_cast<Colour>(k + 1);
  }
}

void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInput(message);
}

}  // namespace

Tree Tree::from_edges(int num_vertices, std::vector<std::pair<Vertex, Vertex>> edges) {
  require(num_vertices >= 1, "tree must have at least one vertex");
  require(edges.size() + 1 == static_cast<std::size_t>(num_vertices),
          "a tree on " + std::to_string(num_vertices) + " vertices needs " + std::to_string(num_vertices - 1) +
              " edges, got " + std::to_string(edges.size()));
  DisjointSets sets(num_vertices);
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
    require(a >= 0 && b < num_vertices && a != b, "tree edge out of range");
    require(sets.unite(a, b), "tree edges contain a cycle");
  }
  std::sort(edges.begin(), edges.end());
  return Tree(num_vertices, std::move(edges));
}

Tree Tree::from_prufer(const std::vector<Vertex>& sequence) {
  const int nv = static_cast<int>(sequence.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(nv), 1);
  for (Vertex x : sequence) {
    require(x >= 0 && x < nv, "Prüfer entry " + std::to_string(x) + " out of range");
    ++degree[x];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < nv; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex x : sequence) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return from_edges(nv, std::move(edges));
}

std::vector<std::vector<Vertex>> Tree::adjacency() const {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(num_vertices_));
  for (auto [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

int Tree::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adjacency()) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

Tree random_tree(int num_vertices, std::mt19937_64& rng) {
  require(num_vertices >= 1, "tree must have at least one vertex");
  if (num_vertices == 1) return Tree::from_edges(1, {});
  std::uniform_int_distribution<Vertex> label(0, num_vertices - 1);
  std::vector<Vertex> sequence(static_cast<std::size_t>(num_vertices - 2));
  for (Vertex& x : sequence) x = label(rng);
  return Tree::from_prufer(sequence);
}

void for_each_labelled_tree(int num_vertices, const std::function<void(const Tree&)>& visit) {
  require(num_vertices >= 2, "labelled tree enumeration needs at least two vertices");
  std::vector<Vertex> sequence(static_cast<std::size_t>(num_vertices - 2), 0);
  while (true) {
    visit(Tree::from_prufer(sequence));
    std::size_t pos = 0;
    while (pos < sequence.size() && ++sequence[pos] == num_vertices) sequence[pos++] = 0;
    if (pos == sequence.size()) return;
  }
}

EdgeColouredGraph graceful_colouring(int n) {
  require(n >= 0, "graceful colouring needs n >= 0");
  auto edges = complete_graph_edges(n + 1);
  for (Edge& e : edges) e.colour = e.v - e.u;
  return make_sorted(n + 1, std::move(edges));
}

EdgeColouredGraph stellar_colouring(int n) {
  require(n >= 1, "stellar colouring needs n >= 1");
  auto edges = complete_graph_edges(n + 1);
  for (Edge& e : edges) e.colour = e.v;
  return make_sorted(n + 1, std::move(edges));
}

EdgeColouredGraph random_nice_colouring(int n, std::uint64_t seed) {
  require(n >= 1, "nice colouring needs n >= 1");
  std::mt19937_64 rng(seed);
  auto edges = complete_graph_edges(n + 1);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<int> sizes;
  for (int i = 1; i <= n; ++i) sizes.push_back(i);
  colour_blocks(edges, sizes);
  return make_sorted(n + 1, std::move(edges));
}

EdgeColouredGraph random_cute_colouring(int n, std::uint64_t seed) {
  require(n >= 2, "cute colouring needs n >= 2");
  std::mt19937_64 rng(seed);
  auto edges = complete_graph_edges(n + 1);
  std::shuffle(edges.begin(), edges.end(), rng);
  edges.resize(static_cast<std::size_t>(1 + n * (n - 1) / 2));
  std::vector<int> sizes{1};
  for (int i = 1; i <= n - 1; ++i) sizes.push_back(i);
  colour_blocks(edges, sizes);
  return make_sorted(n + 1, std::move(edges));
}

EdgeColouredGraph bipartite_nice_colouring(int m, std::uint64_t seed) {
  require(m >= 2, "bipartite nice colouring needs m >= 2");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < m; ++a) {
    for (Vertex b = m; b < 2 * m; ++b) edges.push_back({a, b, 1});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<int> sizes;
  for (int i = 1; i < m; ++i) sizes.insert(sizes.end(), {i, i});
  sizes.push_back(m);
  colour_blocks(edges, sizes);
  return make_sorted(2 * m, std::move(edges));
}

EdgeColouredGraph unique_tree_graph(const Tree& t) {
  const int nv = t.num_vertices();
  require(nv >= 3, "unique-tree construction needs at least 3 vertices");
  const int n = nv - 1;

  // BFS from vertex 0 gives an order in which every prefix spans a subtree.
  const auto adj = t.adjacency();
  std::vector<Vertex> order;
  std::vector<Vertex> parent(static_cast<std::size_t>(nv), -1);
  std::vector<bool> seen(static_cast<std::size_t>(nv), false);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = true;
  while (!queue.empty()) {
    const Vertex a = queue.front();
    queue.pop();
    order.push_back(a);
    for (Vertex b : adj[a]) {
      if (seen[b]) continue;
      seen[b] = true;
      parent[b] = a;
      queue.push(b);
    }
  }

  // order[k - 1] is v_k. Edge v_i v_j (i < j <= n) is the tree edge of v_j,
  // coloured j - 1, or else belongs to class j.
  std::vector<Edge> edges;
  for (int j = 2; j <= n; ++j) {
    const Vertex vj = order[j - 1];
    for (int i = 1; i < j; ++i) {
      const Vertex vi = order[i - 1];
      const Colour c = vi == parent[vj] ? j - 1 : j;
      edges.push_back({std::min(vi, vj), std::max(vi, vj), c});
    }
  }
  const Vertex last = order[n];
  edges.push_back({std::min(last, parent[last]), std::max(last, parent[last]), n});
  return make_sorted(nv, std::move(edges));
}

std::vector<Colour> colours_by_class_size(const EdgeColouredGraph& g) {
  if (!classify_colouring(g).nice) throw InvalidInput("colouring is not nice");
  std::vector<Colour> by_size(static_cast<std::size_t>(g.num_colours()));
  const auto sizes = g.class_sizes();
  for (std::size_t c = 0; c < sizes.size(); ++c) by_size[sizes[c] - 1] = static_cast<Colour>(c + 1);
  return by_size;
}

Side Bipartition::side_of(Vertex x) const {
  return std::binary_search(v1.begin(), v1.end(), x) ? Side::v1 : Side::v2;
}

namespace {

bool classes_acyclic(const EdgeColouredGraph& g) {
  for (Colour c = 1; c <= g.num_colours(); ++c) {
    DisjointSets sets(g.num_vertices());
    for (EdgeId id : g.colour_class(c)) {
      if (!sets.unite(g.edge(id).u, g.edge(id).v)) return false;
    }
  }
  return true;
}

bool is_partition_of(const Bipartition& b, int nv) {
  if (!std::is_sorted(b.v1.begin(), b.v1.end()) || !std::is_sorted(b.v2.begin(), b.v2.end())) return false;
  if (b.v1.size() + b.v2.size() != static_cast<std::size_t>(nv)) return false;
  std::vector<bool> seen(static_cast<std::size_t>(nv), false);
  for (const auto* part : {&b.v1, &b.v2}) {
    for (Vertex x : *part) {
      if (x < 0 || x >= nv || seen[x]) return false;
      seen[x] = true;
    }
  }
  return true;
}

}  // namespace

bool is_beautiful_witness(const EdgeColouredGraph& g, const Bipartition& b) {
  const auto by_size = colours_by_class_size(g);
  const int nv = g.num_vertices();
  const int n = nv - 1;
  if (!is_partition_of(b, nv)) return false;
  if (b.v2.size() != static_cast<std::size_t>((nv + 1) / 2)) return false;
  if (!classes_acyclic(g)) return false;

  std::size_t cross_edges = 0;
  for (int i = 1; i <= n; ++i) {
    const Colour c = by_size[i - 1];
    if (i % 2 == n % 2) {
      std::set<Vertex> touched;
      for (EdgeId id : g.colour_class(c)) {
        const Edge& e = g.edge(id);
        if (b.side_of(e.u) == b.side_of(e.v)) return false;
        ++cross_edges;
        touched.insert({e.u, e.v});
      }
      const auto in_v1 = std::count_if(touched.begin(), touched.end(),
                                       [&](Vertex x) { return b.side_of(x) == Side::v1; });
      if (static_cast<std::size_t>(in_v1) != touched.size() / 2) return false;
    } else {
      int inside_v1 = 0;
      int inside_v2 = 0;
      for (EdgeId id : g.colour_class(c)) {
        const Edge& e = g.edge(id);
        const Side su = b.side_of(e.u);
        if (su != b.side_of(e.v)) continue;
        ++(su == Side::v1 ? inside_v1 : inside_v2);
      }
      if (inside_v1 != i / 2 || inside_v2 != (i + 1) / 2) return false;
    }
  }
  // The parity-n classes are cross edges only, so covering every cross pair
  // makes their union exactly K_{V1,V2}.
  return cross_edges == b.v1.size() * b.v2.size();
}

std::optional<Bipartition> verify_beautiful(const EdgeColouredGraph& g) {
  const auto by_size = colours_by_class_size(g);
  const int nv = g.num_vertices();
  const int n = nv - 1;

  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(nv));
  for (int i = n % 2 == 0 ? 2 : 1; i <= n; i += 2) {
    for (EdgeId id : g.colour_class(by_size[i - 1])) {
      adj[g.edge(id).u].push_back(g.edge(id).v);
      adj[g.edge(id).v].push_back(g.edge(id).u);
    }
  }
  std::vector<int> side(static_cast<std::size_t>(nv), -1);
  side[0] = 0;
  std::queue<Vertex> queue;
  queue.push(0);
  int reached = 0;
  while (!queue.empty()) {
    const Vertex a = queue.front();
    queue.pop();
    ++reached;
    for (Vertex x : adj[a]) {
      if (side[x] == -1) {
        side[x] = 1 - side[a];
        queue.push(x);
      } else if (side[x] == side[a]) {
        return std::nullopt;
      }
    }
  }
  if (reached != nv) return std::nullopt;

  std::vector<Vertex> part0;
  std::vector<Vertex> part1;
  for (Vertex v = 0; v < nv; ++v) (side[v] == 0 ? part0 : part1).push_back(v);

  std::vector<Bipartition> candidates;
  if (part0.size() >= part1.size()) candidates.push_back({part1, part0});
  if (part0.size() <= part1.size()) candidates.push_back({part0, part1});
  for (const auto& candidate : candidates) {
    if (is_beautiful_witness(g, candidate)) return candidate;
  }
  return std::nullopt;
}

}  // namespace heterotree
