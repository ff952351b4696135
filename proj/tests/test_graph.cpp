#include <doctest.h>

#include <random>

#include "heterotree/colourings.hpp"
#include "heterotree/graph.hpp"
#include "support.hpp"

using namespace heterotree;
using namespace heterotree::testing;

TEST_CASE("graph construction validates endpoints, duplicates and colours") {
  CHECK_THROWS_AS(EdgeColouredGraph(0, {}), InvalidInput);
  CHECK_THROWS_AS(EdgeColouredGraph(3, {{1, 0, 1}}), InvalidInput);
  CHECK_THROWS_AS(EdgeColouredGraph(3, {{0, 3, 1}}), InvalidInput);
  CHECK_THROWS_AS(EdgeColouredGraph(3, {{0, 1, 1}, {0, 1, 2}}), InvalidInput);
  CHECK_THROWS_AS(EdgeColouredGraph(3, {{0, 1, 1}, {1, 2, 3}}), InvalidInput);
  CHECK_THROWS_AS(EdgeColouredGraph(3, {{0, 1, 0}}), InvalidInput);
  CHECK_NOTHROW(EdgeColouredGraph(1, {}));

  const auto g = graceful_k3();
  CHECK(g.num_colours() == 2);
  CHECK(g.class_sizes() == std::vector<std::size_t>{2, 1});
  CHECK(std::vector<EdgeId>(g.colour_class(1).begin(), g.colour_class(1).end()) == std::vector<EdgeId>{0, 1});
  CHECK(g.find_edge(2, 0) == EdgeId{2});
  CHECK_FALSE(EdgeColouredGraph(3, {{0, 1, 1}}).find_edge(1, 2).has_value());
}

TEST_CASE("compact_colours keeps relative order") {
  const auto edges = compact_colours({{0, 1, 7}, {1, 2, 3}, {0, 2, 7}});
  CHECK(edges[0].colour == 2);
  CHECK(edges[1].colour == 1);
  CHECK(edges[2].colour == 2);
}

TEST_CASE("edge sets are sorted and reject out-of-range ids") {
  EdgeSet x{3, 1, 3, 0};
  CHECK(std::vector<EdgeId>(x.begin(), x.end()) == std::vector<EdgeId>{0, 1, 3});
  x.insert(2);
  x.erase(0);
  CHECK(x == EdgeSet{1, 2, 3});
  CHECK(x.contains(2));
  CHECK_THROWS_AS(components_count(graceful_k3(), EdgeSet{3}), InvalidEdgeSet);
  CHECK_THROWS_AS(contained_classes_count(graceful_k3(), EdgeSet{5}), InvalidEdgeSet);
}

TEST_CASE("components_count") {
  const auto g = graceful_k3();
  CHECK(components_count(g, {}) == 3);
  CHECK(components_count(g, {0, 1}) == 1);
  CHECK(components_count(g, {2}) == 2);
}

TEST_CASE("contained_classes_count") {
  const auto g = graceful_k3();
  CHECK(contained_classes_count(g, {2}) == 1);
  CHECK(contained_classes_count(g, {0}) == 0);
  CHECK(contained_classes_count(g, EdgeSet::all(g)) == 2);
}

TEST_CASE("is_heterochromatic and is_spanning_tree") {
  const auto g = graceful_k3();
  CHECK(is_heterochromatic(g, {0, 2}));
  CHECK_FALSE(is_heterochromatic(g, {0, 1}));
  CHECK(is_heterochromatic(g, {}));

  CHECK(is_spanning_tree(g, {0, 2}));
  CHECK_FALSE(is_spanning_tree(g, {0}));
  const auto k4 = graceful_colouring(3);
  CHECK_FALSE(is_spanning_tree(k4, edges_of(k4, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST_CASE("classify_colouring examples") {
  const auto k5 = classify_colouring(graceful_colouring(4));
  CHECK(k5.nice);
  CHECK(k5.class_sizes == std::vector<std::size_t>{1, 2, 3, 4});

  // G(P_4): 4 edges with sizes 1, 1, 2.
  const EdgeColouredGraph gp4(4, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}, {2, 3, 3}});
  const auto cls = classify_colouring(gp4);
  CHECK(cls.cute);
  CHECK_FALSE(cls.nice);

  CHECK(classify_colouring(monochromatic_k3()).other());
  CHECK(classify_colouring(monochromatic_k3()).verdicts() == std::vector<std::string>{"other"});
}

TEST_CASE("classify_colouring reports every satisfied verdict") {
  // K_2 is both K_{1+1} with sizes (1) and K_{1,1} with sizes (1).
  const auto k2 = classify_colouring(EdgeColouredGraph(2, {{0, 1, 1}}));
  CHECK(k2.verdicts() == std::vector<std::string>{"nice", "bipartite_nice"});

  // Path 0-1-2-3 with three colours: 4 vertices, 3 = 1 + 2*C(2,2) edges of
  // sizes 1, 1, 1 inside K_{2,2}.
  const auto p4 = classify_colouring(EdgeColouredGraph(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}}));
  CHECK(p4.bipartite_cute);
  CHECK_FALSE(p4.bipartite_nice);

  // A triangle plus an isolated vertex is not inside any K_{2,2}.
  const auto tri = classify_colouring(EdgeColouredGraph(4, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}}));
  CHECK_FALSE(tri.bipartite_cute);
}

TEST_CASE("graceful colourings classify as nice for n = 1..12") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(classify_colouring(graceful_colouring(n)).nice);
  }
}

TEST_CASE("w and c invariants on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int nv = 1 + static_cast<int>(rng() % 8);
    const auto g = random_coloured_graph(nv, 0.5, 5, trial % 2 == 0, rng);
    CHECK(components_count(g, {}) == nv);
    CHECK(contained_classes_count(g, EdgeSet::all(g)) == g.num_colours());

    const auto x = random_subset(g, rng);
    const int w = components_count(g, x);
    const int c = contained_classes_count(g, x);
    CHECK(w >= 1);
    CHECK(w <= nv);
    CHECK(w == dfs_components(nv, g, std::vector<EdgeId>(x.begin(), x.end())));

    auto bigger = x;
    for (EdgeId id : random_subset(g, rng)) bigger.insert(id);
    CHECK(components_count(g, bigger) <= w);
    CHECK(contained_classes_count(g, bigger) >= c);

    if (is_spanning_tree(g, x)) {
      CHECK(w == 1);
      CHECK(dfs_acyclic(g, std::vector<EdgeId>(x.begin(), x.end())));
    }
  }
}

TEST_CASE("spanning_subgraph keeps host ids and compacts colours") {
  const auto g = graceful_colouring(3);  // colours 1, 2, 3 with sizes 3, 2, 1
  const auto sub = spanning_subgraph(g, EdgeSet{0, 5});
  CHECK(sub.graph.num_vertices() == 4);
  CHECK(sub.graph.num_colours() == 2);
  CHECK(sub.host_edges == std::vector<EdgeId>{0, 5});
  CHECK(sub.lift(EdgeSet{1}) == EdgeSet{5});
}
