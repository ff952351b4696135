#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "heterotree/colourings.hpp"
#include "heterotree/graph.hpp"

namespace heterotree {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;
inline constexpr int kSuzukiColourLimit = 22;
inline constexpr int kPartitionVertexLimit = 10;
inline constexpr int kEmbeddingVertexLimit = 10;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  // Number of trees to retain in the report.
  std::size_t keep = 0;
};

struct EnumerationReport {
  std::uint64_t exact_count = 0;
  std::vector<EdgeSet> trees;
  // Colour-respecting selections of |V| - 1 edges, one per chosen colour.
  std::uint64_t search_space = 0;
  // More colours than |V| - 1: colour subsets are enumerated as well, which is
  // much more expensive than a plain transversal sweep.
  bool colour_subsets = false;
};

// Exact number of heterochromatic spanning trees, by backtracking over one
// edge per colour class with incremental cycle pruning. Throws BudgetExceeded
// when the search space is above options.budget.
EnumerationReport enumerate_heterochromatic_spanning_trees(const EdgeColouredGraph& g,
                                                           const EnumerationOptions& options = {});

// Suzuki's criterion. Colour sets R with |R| <= |V| - 2 are checked; R = {}
// enforces connectivity.
bool suzuki_check(const EdgeColouredGraph& g);

// Akbari–Alipour criterion over every partition of V.
bool akbari_alipour_check(const EdgeColouredGraph& g);

// Injective map tree vertex -> graph vertex under which the tree's image in
// the complete graph g is heterochromatic.
std::optional<std::vector<Vertex>> heterochromatic_embedding(const EdgeColouredGraph& g, const Tree& t);

}  // namespace heterotree
