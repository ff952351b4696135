#include "heterotree/io.hpp"

#include <array>
#include <limits>
#include <set>
#include <sstream>

namespace heterotree::io {

namespace {

nlohmann::json parse_object(const std::string& text, const std::set<std::string>& allowed) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  for (const auto& item : j.items()) {
    if (!allowed.contains(item.key())) throw InvalidInput("unknown key \"" + item.key() + "\"");
  }
  return j;
}

int as_int(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidInput(what + " must be an integer");
  const auto value = j.get<std::int64_t>();
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
    throw InvalidInput(what + " out of range");
  }
  return static_cast<int>(value);
}

const nlohmann::json& array_field(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key)) throw InvalidInput("missing key \"" + key + "\"");
  const auto& field = j.at(key);
  if (!field.is_array()) throw InvalidInput("\"" + key + "\" must be an array");
  return field;
}

}  // namespace

EdgeColouredGraph parse_graph(const std::string& text) {
  const auto j = parse_object(text, {"vertices", "edges"});
  if (!j.contains("vertices")) throw InvalidInput("missing key \"vertices\"");
  const int vertices = as_int(j.at("vertices"), "vertices");
  std::vector<Edge> edges;
  for (const auto& item : array_field(j, "edges")) {
    if (!item.is_array() || item.size() != 3) throw InvalidInput("each edge must be [u, v, colour]");
    edges.push_back({as_int(item[0], "edge endpoint"), as_int(item[1], "edge endpoint"), as_int(item[2], "edge colour")});
  }
  return EdgeColouredGraph(vertices, std::move(edges));
}

Json graph_to_json(const EdgeColouredGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.colour});
  return Json{{"vertices", g.num_vertices()}, {"edges", std::move(edges)}};
}

Tree parse_tree(const std::string& text) {
  const auto j = parse_object(text, {"vertices", "tree_edges", "prufer"});
  if (j.contains("prufer")) {
    if (j.contains("tree_edges")) throw InvalidInput("give either \"prufer\" or \"tree_edges\", not both");
    std::vector<Vertex> sequence;
    for (const auto& x : array_field(j, "prufer")) sequence.push_back(as_int(x, "Prüfer entry"));
    Tree t = Tree::from_prufer(sequence);
    if (j.contains("vertices") && as_int(j.at("vertices"), "vertices") != t.num_vertices()) {
      throw InvalidInput("\"vertices\" disagrees with the Prüfer sequence length");
    }
    return t;
  }
  if (!j.contains("vertices")) throw InvalidInput("missing key \"vertices\"");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& item : array_field(j, "tree_edges")) {
    if (!item.is_array() || item.size() != 2) throw InvalidInput("each tree edge must be [u, v]");
    edges.emplace_back(as_int(item[0], "tree edge endpoint"), as_int(item[1], "tree edge endpoint"));
  }
  return Tree::from_edges(as_int(j.at("vertices"), "vertices"), std::move(edges));
}

Json tree_to_json(const Tree& t) {
  Json edges = Json::array();
  for (auto [a, b] : t.edges()) edges.push_back({a, b});
  return Json{{"vertices", t.num_vertices()}, {"tree_edges", std::move(edges)}};
}

Json edge_set_to_json(const EdgeSet& x) {
  Json ids = Json::array();
  for (EdgeId id : x) ids.push_back(id);
  return ids;
}

Json bipartition_to_json(const Bipartition& b) { return Json{{"V1", b.v1}, {"V2", b.v2}}; }

Json family_to_json(const TreeFamily& family) {
  Json trees = Json::array();
  for (const auto& tree : family.trees) trees.push_back(edge_set_to_json(tree));
  Json provenance = Json::array();
  for (const auto& p : family.provenance) {
    if (const auto* nice = std::get_if<NiceProvenance>(&p)) {
      provenance.push_back(Json{{"construction", "nice"},
                                {"pivot", nice->pivot},
                                {"group", nice->group},
                                {"step", nice->step},
                                {"kept_top", nice->kept_top}});
    } else {
      Json choice = Json::array();
      for (Side s : std::get<BeautifulProvenance>(p).choice) choice.push_back(s == Side::v1 ? "V1" : "V2");
      provenance.push_back(Json{{"construction", "beautiful"}, {"choice", std::move(choice)}});
    }
  }
  return Json{{"trees", std::move(trees)}, {"provenance", std::move(provenance)}};
}

Json report_to_json(const EnumerationReport& report) {
  Json trees = Json::array();
  for (const auto& tree : report.trees) trees.push_back(edge_set_to_json(tree));
  return Json{{"exact_count", report.exact_count},
              {"search_space", report.search_space},
              {"colour_subsets", report.colour_subsets},
              {"trees", std::move(trees)}};
}

std::string graph_to_dot(const EdgeColouredGraph& g) {
  static constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  std::ostringstream out;
  out << "graph heterotree {\n";
  out << "  // palette: color_index c uses entry (c - 1) mod " << kPalette.size() << " of";
  for (const char* hex : kPalette) out << ' ' << hex;
  out << "\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v << " [color_index=" << e.colour << ", color=\""
        << kPalette[static_cast<std::size_t>(e.colour - 1) % kPalette.size()] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace heterotree::io
