#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "heterotree/colourings.hpp"
#include "heterotree/graph.hpp"

namespace heterotree {

// One side per free class, in increasing class-size order. The free classes
// are the sizes i >= 2 with i of opposite parity to n; there are
// floor((n - 1) / 2) of them.
using ChoiceVector = std::vector<Side>;

std::vector<int> free_class_sizes(int n);

// Tree (group, step) of the nice family: it contains `pivot`, the group's edge
// of the middle class, and was found in the cute subgraph that keeps only
// `kept_top` from the largest class.
struct NiceProvenance {
  EdgeId pivot;
  std::size_t group;
  std::size_t step;
  std::vector<EdgeId> kept_top;
};

struct BeautifulProvenance {
  ChoiceVector choice;
};

using Provenance = std::variant<NiceProvenance, BeautifulProvenance>;

struct TreeFamily {
  EdgeColouredGraph host;
  std::vector<EdgeSet> trees;
  std::vector<Provenance> provenance;
};

// Heterochromatic spanning tree of a cute colouring. InvalidInput for
// non-cute input.
EdgeSet cute_tree(const EdgeColouredGraph& g);

// ceil((n+1)/2) * floor((n+1)/2) distinct heterochromatic spanning trees of a
// nice colouring with n >= 2.
TreeFamily nice_tree_family(const EdgeColouredGraph& g);

// Keeps C_1 and the classes of parity n whole; of each free class keeps only
// the edges inside the chosen part.
Subgraph beautiful_subgraph(const EdgeColouredGraph& g, const Bipartition& b, const ChoiceVector& choice);

// One tree per choice vector: 2^floor((n-1)/2) distinct trees.
TreeFamily beautiful_tree_family(const EdgeColouredGraph& g);

}  // namespace heterotree
