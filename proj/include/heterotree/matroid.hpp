#pragma once

#include <cstddef>
#include <optional>

#include "heterotree/graph.hpp"

namespace heterotree {

// Subsets examined by the exhaustive verifiers are capped at 2^24.
inline constexpr std::size_t kExhaustiveEdgeLimit = 24;

enum class MatroidKind { graphic, colour_partition };

// Independence test for one of the two matroids on E(G): acyclic edge sets
// (graphic) or edge sets with at most one edge per colour (colour partition).
class IndependenceOracle {
 public:
  IndependenceOracle(const EdgeColouredGraph& g, MatroidKind kind) : graph_(&g), kind_(kind) {}

  MatroidKind kind() const { return kind_; }
  bool independent(const EdgeSet& x) const;
  // Size of a greedily grown maximal independent subset of x.
  int greedy_rank(const EdgeSet& x) const;

 private:
  const EdgeColouredGraph* graph_;
  MatroidKind kind_;
};

bool graphic_independent(const EdgeColouredGraph& g, const EdgeSet& x);
bool partition_independent(const EdgeColouredGraph& g, const EdgeSet& x);

// r1(X) = |V| - w(X).
int graphic_rank(const EdgeColouredGraph& g, const EdgeSet& x);
// r2(E \ X), which equals num_colours - c(X) because every class is nonempty.
int partition_corank(const EdgeColouredGraph& g, const EdgeSet& x);

struct IntersectionResult {
  EdgeSet common_independent;
  // Minimiser of r1(X) + r2(E \ X); filled only by certified_max_common_independent.
  std::optional<EdgeSet> certificate;
};

// Maximum common independent set of the graphic and colour-partition
// matroids, by shortest augmenting paths in the exchange graph. Ties go to the
// lowest edge index.
IntersectionResult max_common_independent(const EdgeColouredGraph& g);

std::optional<EdgeSet> find_heterochromatic_spanning_tree(const EdgeColouredGraph& g);

struct RankCover {
  EdgeSet x;
  int value = 0;
};

// Brute-force min over X of r1(X) + r2(E \ X). Throws BudgetExceeded above
// kExhaustiveEdgeLimit edges.
RankCover min_rank_cover(const EdgeColouredGraph& g);

// Runs the augmenting-path engine and the brute-force min-max, attaches the
// minimiser as certificate, and throws InternalError if the two disagree.
IntersectionResult certified_max_common_independent(const EdgeColouredGraph& g);

struct Lemma1Check {
  bool holds = true;
  std::optional<EdgeSet> violating;
};

// Exhaustively checks w(X) + c(X) <= n + 1 over all X. Requires n + 1
// vertices and n colours (InvalidInput otherwise) and at most
// kExhaustiveEdgeLimit edges (BudgetExceeded otherwise).
Lemma1Check lemma1_condition_holds(const EdgeColouredGraph& g);

}  // namespace heterotree
