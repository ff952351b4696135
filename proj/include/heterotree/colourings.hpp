#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "heterotree/graph.hpp"

namespace heterotree {

// A labelled tree on vertices 0..num_vertices-1. Edges are canonical (u < v)
// and sorted.
class Tree {
 public:
  static Tree from_edges(int num_vertices, std::vector<std::pair<Vertex, Vertex>> edges);
  // Decodes a Prüfer sequence over labels 0..len+1.
  static Tree from_prufer(const std::vector<Vertex>& sequence);

  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  std::vector<std::vector<Vertex>> adjacency() const;
  int max_degree() const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  Tree(int num_vertices, std::vector<std::pair<Vertex, Vertex>> edges)
      : num_vertices_(num_vertices), edges_(std::move(edges)) {}

  int num_vertices_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

// Uniform labelled tree via a random Prüfer sequence.
Tree random_tree(int num_vertices, std::mt19937_64& rng);

// Visits every labelled tree on num_vertices >= 2 vertices once, in Prüfer
// order.
void for_each_labelled_tree(int num_vertices, const std::function<void(const Tree&)>& visit);

// K_{n+1} with edge {s, t} coloured |t - s|.
EdgeColouredGraph graceful_colouring(int n);

// K_{n+1} built by adding vertex i with all back-edges in colour i.
EdgeColouredGraph stellar_colouring(int n);

// Seeded shuffle of E(K_{n+1}) cut into classes of sizes 1..n; colour i has
// size i.
EdgeColouredGraph random_nice_colouring(int n, std::uint64_t seed);

// 1 + C(n, 2) random edges of K_{n+1} cut into classes of sizes 1, 1, 2, ...,
// n - 1; colour 1 has size 1 and colour i >= 2 has size i - 1.
EdgeColouredGraph random_cute_colouring(int n, std::uint64_t seed);

// K_{m,m} on parts {0..m-1} and {m..2m-1} with classes of sizes
// 1, 1, 2, 2, ..., m - 1, m - 1, m in colour order.
EdgeColouredGraph bipartite_nice_colouring(int m, std::uint64_t seed);

// Cute supergraph of t in which t is the only heterochromatic spanning tree.
// Vertex labels are t's own, so t's edges are found verbatim in the output.
EdgeColouredGraph unique_tree_graph(const Tree& t);

// For a nice colouring: colour label of the class of size i, at index i - 1.
std::vector<Colour> colours_by_class_size(const EdgeColouredGraph& g);

enum class Side { v1, v2 };

struct Bipartition {
  std::vector<Vertex> v1;
  std::vector<Vertex> v2;

  Side side_of(Vertex x) const;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// Whether b witnesses that the nice colouring g is beautiful. InvalidInput
// if g is not nice.
bool is_beautiful_witness(const EdgeColouredGraph& g, const Bipartition& b);

// Derives the candidate bipartition from the classes of parity n and checks
// it. InvalidInput if g is not nice.
std::optional<Bipartition> verify_beautiful(const EdgeColouredGraph& g);

}  // namespace heterotree
