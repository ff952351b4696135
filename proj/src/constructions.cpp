#include "heterotree/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "heterotree/matroid.hpp"

namespace heterotree {

namespace {

void require_distinct(const std::vector<EdgeSet>& trees) {
  std::set<EdgeSet> unique(trees.begin(), trees.end());
  if (unique.size() != trees.size()) throw InternalError("tree family contains a repeated tree");
}

}  // namespace

std::vector<int> free_class_sizes(int n) {
  std::vector<int> sizes;
  for (int i = 2; i <= n; ++i) {
    if (i % 2 != n % 2) sizes.push_back(i);
  }
  return sizes;
}

EdgeSet cute_tree(const EdgeColouredGraph& g) {
  if (!classify_colouring(g).cute) throw InvalidInput("colouring is not cute");
  auto tree = find_heterochromatic_spanning_tree(g);
  if (!tree) throw InternalError("cute colouring without a heterochromatic spanning tree");
  return std::move(*tree);
}

TreeFamily nice_tree_family(const EdgeColouredGraph& g) {
  const auto by_size = colours_by_class_size(g);
  const int n = g.num_vertices() - 1;
  if (n < 2) throw InvalidInput("nice tree family needs n >= 2");

  const int ceil_half = (n + 2) / 2;
  const int floor_half = (n + 1) / 2;
  const Colour middle = by_size[ceil_half - 1];
  const Colour top = by_size[n - 1];
  const auto middle_class = g.colour_class(middle);
  const auto top_class = g.colour_class(top);

  // Edges outside the middle and top classes are shared by every subgraph.
  std::vector<EdgeId> base;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Colour c = g.edge(id).colour;
    if (c != middle && c != top) base.push_back(id);
  }
  // When n = 2 the middle class is the top class and the pivot alone stands
  // in for it.
  const std::size_t keep = middle == top ? 0 : static_cast<std::size_t>(ceil_half);

  TreeFamily family{g, {}, {}};
  for (std::size_t group = 0; group < middle_class.size(); ++group) {
    const EdgeId pivot = middle_class[group];
    std::vector<EdgeId> used_top;
    for (std::size_t step = 0; step < static_cast<std::size_t>(floor_half); ++step) {
      std::vector<EdgeId> kept;
      for (EdgeId id : top_class) {
        if (kept.size() == keep) break;
        if (std::find(used_top.begin(), used_top.end(), id) == used_top.end()) kept.push_back(id);
      }
      if (kept.size() != keep) throw InternalError("not enough unused edges in the largest class");

      std::vector<EdgeId> ids = base;
      ids.push_back(pivot);
      ids.insert(ids.end(), kept.begin(), kept.end());
      const auto sub = spanning_subgraph(g, EdgeSet(std::move(ids)));
      EdgeSet tree = sub.lift(cute_tree(sub.graph));

      if (middle != top) {
        const auto it = std::find_if(tree.begin(), tree.end(), [&](EdgeId id) { return g.edge(id).colour == top; });
        if (it == tree.end()) throw InternalError("tree misses the largest class");
        used_top.push_back(*it);
      }
      family.trees.push_back(std::move(tree));
      family.provenance.emplace_back(NiceProvenance{pivot, group, step, std::move(kept)});
    }
  }
  require_distinct(family.trees);
  return family;
}

Subgraph beautiful_subgraph(const EdgeColouredGraph& g, const Bipartition& b, const ChoiceVector& choice) {
  if (!is_beautiful_witness(g, b)) throw InvalidInput("bipartition is not a beautiful witness");
  const auto by_size = colours_by_class_size(g);
  const int n = g.num_vertices() - 1;
  const auto free = free_class_sizes(n);
  if (choice.size() != free.size()) {
    throw InvalidInput("choice vector needs " + std::to_string(free.size()) + " entries, got " +
                       std::to_string(choice.size()));
  }

  std::vector<int> size_of_colour(static_cast<std::size_t>(g.num_colours()) + 1, 0);
  for (int i = 1; i <= n; ++i) size_of_colour[by_size[i - 1]] = i;

  std::vector<EdgeId> ids;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    const auto slot = std::find(free.begin(), free.end(), size_of_colour[e.colour]);
    if (slot == free.end()) {
      ids.push_back(id);
      continue;
    }
    const Side wanted = choice[static_cast<std::size_t>(slot - free.begin())];
    if (b.side_of(e.u) == wanted && b.side_of(e.v) == wanted) ids.push_back(id);
  }
  return spanning_subgraph(g, EdgeSet(std::move(ids)));
}

TreeFamily beautiful_tree_family(const EdgeColouredGraph& g) {
  const auto witness = verify_beautiful(g);
  if (!witness) throw InvalidInput("colouring is not beautiful");
  const int n = g.num_vertices() - 1;
  if (n < 2) throw InvalidInput("beautiful tree family needs n >= 2");

  const std::size_t free_count = free_class_sizes(n).size();
  TreeFamily family{g, {}, {}};
  for (std::size_t mask = 0; mask < (std::size_t{1} << free_count); ++mask) {
    ChoiceVector choice(free_count);
    for (std::size_t k = 0; k < free_count; ++k) choice[k] = (mask >> k & 1U) ? Side::v2 : Side::v1;
    const auto sub = beautiful_subgraph(g, *witness, choice);
    if (sub.graph.num_colours() != n) throw InternalError("beautiful subgraph lost a colour class");
    auto tree = find_heterochromatic_spanning_tree(sub.graph);
    if (!tree) throw InternalError("beautiful subgraph without a heterochromatic spanning tree");
    family.trees.push_back(sub.lift(*tree));
    family.provenance.emplace_back(BeautifulProvenance{std::move(choice)});
  }
  require_distinct(family.trees);
  return family;
}

}  // namespace heterotree
