#include "heterotree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace heterotree {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return b > UINT64_MAX - a ? UINT64_MAX : a + b; }

// Union-find without path compression so unions can be rolled back.
class UndoableSets {
 public:
  explicit UndoableSets(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

class TransversalSearch {
 public:
  TransversalSearch(const EdgeColouredGraph& g, std::vector<Colour> order, std::size_t keep)
      : g_(g), order_(std::move(order)), keep_(keep), sets_(g.num_vertices()) {}

  EnumerationReport run(EnumerationReport report) {
    report_ = std::move(report);
    visit(0, static_cast<std::size_t>(g_.num_vertices() - 1));
    return std::move(report_);
  }

 private:
  void visit(std::size_t pos, std::size_t needed) {
    if (needed == 0) {
      ++report_.exact_count;
      if (report_.trees.size() < keep_) report_.trees.emplace_back(chosen_);
      return;
    }
    if (order_.size() - pos < needed) return;
    for (EdgeId id : g_.colour_class(order_[pos])) {
      if (!sets_.unite(g_.edge(id).u, g_.edge(id).v)) continue;
      chosen_.push_back(id);
      visit(pos + 1, needed - 1);
      chosen_.pop_back();
      sets_.undo();
    }
    if (order_.size() - pos > needed) visit(pos + 1, needed);
  }

  const EdgeColouredGraph& g_;
  std::vector<Colour> order_;
  std::size_t keep_;
  UndoableSets sets_;
  std::vector<EdgeId> chosen_;
  EnumerationReport report_;
};

}  // namespace

EnumerationReport enumerate_heterochromatic_spanning_trees(const EdgeColouredGraph& g,
                                                           const EnumerationOptions& options) {
  const auto needed = static_cast<std::size_t>(g.num_vertices() - 1);
  const auto sizes = g.class_sizes();

  // space[j]: number of ways to pick j colours and one edge of each.
  std::vector<std::uint64_t> space(needed + 1, 0);
  space[0] = 1;
  for (std::size_t size : sizes) {
    for (std::size_t j = needed; j >= 1; --j) space[j] = saturating_add(space[j], saturating_mul(space[j - 1], size));
  }

  EnumerationReport report;
  report.search_space = space[needed];
  report.colour_subsets = sizes.size() > needed;
  if (report.search_space > options.budget) {
    throw BudgetExceeded("search space " + std::to_string(report.search_space) + " exceeds budget " +
                             std::to_string(options.budget),
                         report.search_space);
  }
  if (report.search_space == 0) return report;

  // Small classes first so cycle pruning bites early.
  std::vector<Colour> order;
  for (Colour c = 1; c <= g.num_colours(); ++c) order.push_back(c);
  std::stable_sort(order.begin(), order.end(), [&](Colour a, Colour b) { return sizes[a - 1] < sizes[b - 1]; });

  return TransversalSearch(g, std::move(order), options.keep).run(std::move(report));
}

bool suzuki_check(const EdgeColouredGraph& g) {
  const int k = g.num_colours();
  if (k > kSuzukiColourLimit) {
    throw BudgetExceeded("Suzuki check limited to " + std::to_string(kSuzukiColourLimit) + " colours, graph has " +
                             std::to_string(k),
                         k >= 64 ? UINT64_MAX : std::uint64_t{1} << k);
  }
  const int max_removed = g.num_vertices() - 2;
  for (std::uint32_t removed = 0; removed < (std::uint32_t{1} << k); ++removed) {
    const int r = std::popcount(removed);
    if (r > max_removed && r > 0) continue;
    DisjointSets sets(g.num_vertices());
    for (const Edge& e : g.edges()) {
      if (!(removed >> (e.colour - 1) & 1U)) sets.unite(e.u, e.v);
    }
    if (sets.num_sets() > r + 1) return false;
  }
  return true;
}

bool akbari_alipour_check(const EdgeColouredGraph& g) {
  const int nv = g.num_vertices();
  if (nv > kPartitionVertexLimit) {
    throw BudgetExceeded("partition check limited to " + std::to_string(kPartitionVertexLimit) + " vertices, graph has " +
                             std::to_string(nv),
                         UINT64_MAX);
  }
  // A simple graph on <= 10 vertices has <= 45 edges, hence <= 45 colours.
  std::vector<int> block(static_cast<std::size_t>(nv), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(nv), 0);
  while (true) {
    const int parts = prefix_max[nv - 1] + 1;
    std::uint64_t cross_colours = 0;
    for (const Edge& e : g.edges()) {
      if (block[e.u] != block[e.v]) cross_colours |= std::uint64_t{1} << (e.colour - 1);
    }
    if (std::popcount(cross_colours) < parts - 1) return false;

    // Next restricted growth string: block[0] = 0, block[i] <= max(block[<i]) + 1.
    int i = nv - 1;
    while (i > 0 && block[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return true;
    ++block[i];
    prefix_max[i] = std::max(prefix_max[i - 1], block[i]);
    for (int j = i + 1; j < nv; ++j) {
      block[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const EdgeColouredGraph& g, const Tree& t) : nv_(g.num_vertices()) {
    colour_.assign(static_cast<std::size_t>(nv_ * nv_), 0);
    for (const Edge& e : g.edges()) {
      colour_[e.u * nv_ + e.v] = e.colour;
      colour_[e.v * nv_ + e.u] = e.colour;
    }
    const auto adj = t.adjacency();
    parent_.assign(static_cast<std::size_t>(nv_), -1);
    std::vector<bool> seen(static_cast<std::size_t>(nv_), false);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = true;
    while (!queue.empty()) {
      const Vertex a = queue.front();
      queue.pop();
      order_.push_back(a);
      for (Vertex b : adj[a]) {
        if (!seen[b]) {
          seen[b] = true;
          parent_[b] = a;
          queue.push(b);
        }
      }
    }
    image_.assign(static_cast<std::size_t>(nv_), -1);
    taken_.assign(static_cast<std::size_t>(nv_), false);
    colour_used_.assign(static_cast<std::size_t>(g.num_colours()) + 1, false);
  }

  std::optional<std::vector<Vertex>> run() {
    for (Vertex root = 0; root < nv_; ++root) {
      place(order_[0], root);
      if (extend(1)) return image_;
      unplace(order_[0], root);
    }
    return std::nullopt;
  }

 private:
  void place(Vertex tv, Vertex gv) {
    image_[tv] = gv;
    taken_[gv] = true;
  }
  void unplace(Vertex tv, Vertex gv) {
    image_[tv] = -1;
    taken_[gv] = false;
  }

  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    const Vertex tv = order_[k];
    const Vertex anchor = image_[parent_[tv]];
    for (Vertex gv = 0; gv < nv_; ++gv) {
      if (taken_[gv]) continue;
      const Colour c = colour_[anchor * nv_ + gv];
      if (colour_used_[c]) continue;
      colour_used_[c] = true;
      place(tv, gv);
      if (extend(k + 1)) return true;
      unplace(tv, gv);
      colour_used_[c] = false;
    }
    return false;
  }

  int nv_;
  std::vector<Colour> colour_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> image_;
  std::vector<bool> taken_;
  std::vector<bool> colour_used_;
};

}  // namespace

std::optional<std::vector<Vertex>> heterochromatic_embedding(const EdgeColouredGraph& g, const Tree& t) {
  const int nv = g.num_vertices();
  if (t.num_vertices() != nv) {
    throw InvalidInput("tree has " + std::to_string(t.num_vertices()) + " vertices, graph has " + std::to_string(nv));
  }
  if (g.num_edges() != static_cast<std::size_t>(nv) * static_cast<std::size_t>(nv - 1) / 2) {
    throw InvalidInput("embedding needs a complete host graph");
  }
  if (nv > kEmbeddingVertexLimit) {
    throw BudgetExceeded("embedding search limited to " + std::to_string(kEmbeddingVertexLimit) + " vertices", UINT64_MAX);
  }
  return EmbeddingSearch(g, t).run();
}

}  // namespace heterotree
