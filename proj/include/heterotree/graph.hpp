#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heterotree/errors.hpp"

namespace heterotree {

using Vertex = int;
using Colour = int;
using EdgeId = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Colour colour = 1;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A simple graph on vertices 0..num_vertices-1 with one colour per edge.
//
// Edges are stored with u < v and are identified by their position in the
// edge list. Colours must cover 1..k with every label used; construction
// throws InvalidInput otherwise.
class EdgeColouredGraph {
 public:
  EdgeColouredGraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  int num_colours() const { return static_cast<int>(classes_.size()); }

  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const { return edges_; }

  // Edge ids of colour c (1-based), in increasing order.
  std::span<const EdgeId> colour_class(Colour c) const;

  // Class sizes indexed by colour - 1.
  std::vector<std::size_t> class_sizes() const;

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  friend bool operator==(const EdgeColouredGraph& a, const EdgeColouredGraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  int num_vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> classes_;
};

// Relabels colours to 1..k preserving their relative order. Used by generators
// and by callers holding arbitrary positive labels.
std::vector<Edge> compact_colours(std::vector<Edge> edges);

// Sorted, duplicate-free set of edge ids of some host graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<EdgeId> ids);
  explicit EdgeSet(std::vector<EdgeId> ids);

  static EdgeSet all(const EdgeColouredGraph& g);

  std::span<const EdgeId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(EdgeId id) const;

  void insert(EdgeId id);
  void erase(EdgeId id);

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<EdgeId> ids_;
};

// Throws InvalidEdgeSet when an id is out of range for g.
void validate(const EdgeColouredGraph& g, const EdgeSet& x);

// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n);

  int find(int x);
  // Returns false if a and b were already in the same set.
  bool unite(int a, int b);
  int num_sets() const { return num_sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int num_sets_;
};

// w(X): components of the spanning subgraph with edge set X.
int components_count(const EdgeColouredGraph& g, const EdgeSet& x);

// c(X): colours whose whole class lies inside X.
int contained_classes_count(const EdgeColouredGraph& g, const EdgeSet& x);

bool is_heterochromatic(const EdgeColouredGraph& g, const EdgeSet& x);

bool is_spanning_tree(const EdgeColouredGraph& g, const EdgeSet& x);

struct ColouringClass {
  bool nice = false;
  bool cute = false;
  bool bipartite_nice = false;
  bool bipartite_cute = false;
  // Colour class sizes in ascending order.
  std::vector<std::size_t> class_sizes;

  bool other() const { return !(nice || cute || bipartite_nice || bipartite_cute); }
  // Names of every satisfied verdict, or {"other"}.
  std::vector<std::string> verdicts() const;
};

ColouringClass classify_colouring(const EdgeColouredGraph& g);

// A spanning subgraph together with the host id of each of its edges.
struct Subgraph {
  EdgeColouredGraph graph;
  std::vector<EdgeId> host_edges;

  EdgeSet lift(const EdgeSet& local) const;
};

// Keeps all vertices and the edges of x in host order. Colour labels are
// compacted if some class disappears.
Subgraph spanning_subgraph(const EdgeColouredGraph& g, const EdgeSet& x);

}  // namespace heterotree
