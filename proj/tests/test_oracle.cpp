#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "heterotree/colourings.hpp"
#include "heterotree/matroid.hpp"
#include "heterotree/oracle.hpp"
#include "support.hpp"

using namespace heterotree;
using namespace heterotree::testing;

namespace {

// Nice colouring of K_6 in which no heterochromatic spanning tree has a vertex
// of degree 4 or more. Found by random search over nice colourings.
EdgeColouredGraph no_big_star_k6() {
  return EdgeColouredGraph(6, {{1, 3, 1},
                               {2, 3, 2}, {3, 5, 2},
                               {4, 5, 3}, {2, 5, 3}, {1, 5, 3},
                               {1, 2, 4}, {3, 4, 4}, {0, 5, 4}, {0, 3, 4},
                               {0, 1, 5}, {1, 4, 5}, {2, 4, 5}, {0, 2, 5}, {0, 4, 5}});
}

bool embedding_is_heterochromatic(const EdgeColouredGraph& g, const Tree& t, const std::vector<Vertex>& map) {
  std::set<Vertex> images(map.begin(), map.end());
  if (images.size() != map.size()) return false;
  std::set<Colour> colours;
  for (auto [a, b] : t.edges()) colours.insert(g.edge(g.find_edge(map[a], map[b]).value()).colour);
  return colours.size() == t.edges().size();
}

EdgeColouredGraph relabelled(const EdgeColouredGraph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.num_vertices()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Colour> colour_perm(static_cast<std::size_t>(g.num_colours()));
  std::iota(colour_perm.begin(), colour_perm.end(), 1);
  std::shuffle(colour_perm.begin(), colour_perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = perm[e.u];
    const Vertex b = perm[e.v];
    edges.push_back({std::min(a, b), std::max(a, b), colour_perm[e.colour - 1]});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return EdgeColouredGraph(g.num_vertices(), std::move(edges));
}

}  // namespace

TEST_CASE("frozen small counts") {
  CHECK(enumerate_heterochromatic_spanning_trees(graceful_k3()).exact_count == 2);
  CHECK(enumerate_heterochromatic_spanning_trees(stellar_colouring(3)).exact_count == 6);
  const auto gp4 = unique_tree_graph(Tree::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(enumerate_heterochromatic_spanning_trees(gp4).exact_count == 1);
}

TEST_CASE("graceful counts match the independent enumeration") {
  // Computed independently by brute force over all edge subsets.
  const std::vector<std::uint64_t> expected{2, 4, 12, 40, 164, 752, 4020};
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const auto report = enumerate_heterochromatic_spanning_trees(graceful_colouring(n));
    CHECK(report.exact_count == expected[static_cast<std::size_t>(n - 2)]);
  }
  for (int n = 2; n <= 5; ++n) {
    CHECK(enumerate_heterochromatic_spanning_trees(graceful_colouring(n)).exact_count ==
          brute_force_rainbow_trees(graceful_colouring(n)).size());
  }
}

TEST_CASE("nice colourings have search space n!") {
  std::uint64_t factorial = 1;
  for (int n = 1; n <= 9; ++n) {
    factorial *= static_cast<std::uint64_t>(n);
    CHECK(enumerate_heterochromatic_spanning_trees(random_nice_colouring(n, 4)).search_space == factorial);
    // Every transversal of the stellar colouring is a tree.
    if (n <= 8) CHECK(enumerate_heterochromatic_spanning_trees(stellar_colouring(n)).exact_count == factorial);
  }
}

TEST_CASE("enumeration report retains valid trees up to the cap") {
  const auto g = graceful_colouring(5);
  const auto report = enumerate_heterochromatic_spanning_trees(g, {kDefaultEnumerationBudget, 7});
  CHECK(report.trees.size() == 7);
  CHECK_FALSE(report.colour_subsets);
  for (const auto& tree : report.trees) {
    CHECK(is_spanning_tree(g, tree));
    CHECK(is_heterochromatic(g, tree));
  }
  const auto all = enumerate_heterochromatic_spanning_trees(g, {kDefaultEnumerationBudget, 1000});
  CHECK(all.trees.size() == 40);
  CHECK(std::set<EdgeSet>(all.trees.begin(), all.trees.end()).size() == 40);
}

TEST_CASE("enumeration budget") {
  const auto g = graceful_colouring(9);  // 9! = 362880
  try {
    enumerate_heterochromatic_spanning_trees(g, {1000, 0});
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.search_space() == 362880);
  }
}

TEST_CASE("enumeration with more colours than needed and with too few") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_coloured_graph(2 + static_cast<int>(rng() % 5), 0.6, 8, trial % 2 == 0, rng);
    const auto report = enumerate_heterochromatic_spanning_trees(g, {kDefaultEnumerationBudget, 0});
    CHECK(report.exact_count == brute_force_rainbow_trees(g).size());
    CHECK(report.exact_count <= report.search_space);
    CHECK(report.colour_subsets == (g.num_colours() > g.num_vertices() - 1));
  }
  CHECK(enumerate_heterochromatic_spanning_trees(EdgeColouredGraph(1, {})).exact_count == 1);
  CHECK(enumerate_heterochromatic_spanning_trees(monochromatic_k3()).exact_count == 0);
}

TEST_CASE("count is invariant under vertex and colour relabelling") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_coloured_graph(3 + static_cast<int>(rng() % 4), 0.6, 6, true, rng);
    CHECK(enumerate_heterochromatic_spanning_trees(g).exact_count ==
          enumerate_heterochromatic_spanning_trees(relabelled(g, rng)).exact_count);
  }
}

TEST_CASE("suzuki_check") {
  CHECK(suzuki_check(EdgeColouredGraph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 2}})));
  CHECK_FALSE(suzuki_check(monochromatic_k3()));
  CHECK(suzuki_check(graceful_colouring(4)));
  // Two vertices and no edge: only the empty colour set can object.
  CHECK_FALSE(suzuki_check(EdgeColouredGraph(2, {})));
}

TEST_CASE("akbari_alipour_check") {
  CHECK_FALSE(akbari_alipour_check(monochromatic_k3()));
  CHECK(akbari_alipour_check(graceful_k3()));
  CHECK(akbari_alipour_check(graceful_colouring(4)));
  CHECK_THROWS_AS(akbari_alipour_check(graceful_colouring(10)), BudgetExceeded);
}

TEST_CASE("criteria agree with the count and the matroid finder") {
  std::mt19937_64 rng(41);
  int positives = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int nv = 1 + static_cast<int>(rng() % 7);
    const auto g = random_coloured_graph(nv, 0.5, std::max(1, nv - 1 + static_cast<int>(rng() % 3) - 1),
                                         trial % 4 != 0, rng);
    const bool exists = enumerate_heterochromatic_spanning_trees(g).exact_count > 0;
    positives += exists ? 1 : 0;
    CHECK(suzuki_check(g) == exists);
    CHECK(akbari_alipour_check(g) == exists);
    CHECK(find_heterochromatic_spanning_tree(g).has_value() == exists);
  }
  CHECK(positives > 20);
  CHECK(positives < 180);
}

TEST_CASE("heterochromatic_embedding") {
  const auto k4 = graceful_colouring(3);
  const auto star = Tree::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto map = heterochromatic_embedding(k4, star);
  REQUIRE(map.has_value());
  CHECK(embedding_is_heterochromatic(k4, star, *map));
  CHECK((*map)[0] == 0);

  for (int nv = 2; nv <= 6; ++nv) {
    for (const auto& g : {graceful_colouring(nv - 1), stellar_colouring(nv - 1)}) {
      for_each_labelled_tree(nv, [&](const Tree& t) {
        const auto m = heterochromatic_embedding(g, t);
        REQUIRE(m.has_value());
        CHECK(embedding_is_heterochromatic(g, t, *m));
      });
    }
  }

  CHECK_THROWS_AS(heterochromatic_embedding(k4, Tree::from_prufer({0})), InvalidInput);
  CHECK_THROWS_AS(heterochromatic_embedding(random_cute_colouring(3, 0), star), InvalidInput);
  CHECK_THROWS_AS(heterochromatic_embedding(graceful_colouring(10), Tree::from_prufer(std::vector<Vertex>(9, 0))),
                  BudgetExceeded);
}

TEST_CASE("a nice K_6 with no heterochromatic spanning tree of maximum degree >= 4") {
  const auto g = no_big_star_k6();
  REQUIRE(classify_colouring(g).nice);
  const auto report = enumerate_heterochromatic_spanning_trees(g, {kDefaultEnumerationBudget, 1000});
  REQUIRE(report.exact_count > 0);
  CHECK(report.trees.size() == report.exact_count);
  for (const auto& tree : report.trees) {
    std::vector<int> degree(6, 0);
    for (EdgeId id : tree) {
      ++degree[g.edge(id).u];
      ++degree[g.edge(id).v];
    }
    CHECK(*std::max_element(degree.begin(), degree.end()) <= 3);
  }
  // Hence the star K_{1,5} has no heterochromatic copy, unlike in the stellar colouring.
  const auto star = Tree::from_prufer({0, 0, 0, 0});
  CHECK_FALSE(heterochromatic_embedding(g, star).has_value());
  CHECK(heterochromatic_embedding(stellar_colouring(5), star).has_value());
  CHECK(report.exact_count >= 9);
}
