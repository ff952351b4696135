#pragma once

#include <string>

#include <json.hpp>

#include "heterotree/colourings.hpp"
#include "heterotree/constructions.hpp"
#include "heterotree/graph.hpp"
#include "heterotree/oracle.hpp"

namespace heterotree::io {

using Json = nlohmann::ordered_json;

// {"vertices": N, "edges": [[u, v, colour], ...]}. Unknown keys, u >= v and
// non-integer fields are rejected with InvalidInput.
EdgeColouredGraph parse_graph(const std::string& text);
Json graph_to_json(const EdgeColouredGraph& g);

// {"vertices": N, "tree_edges": [[u, v], ...]} or {"prufer": [...]}.
Tree parse_tree(const std::string& text);
Json tree_to_json(const Tree& t);

Json edge_set_to_json(const EdgeSet& x);
Json bipartition_to_json(const Bipartition& b);
Json family_to_json(const TreeFamily& family);
Json report_to_json(const EnumerationReport& report);

// Undirected DOT with a color_index attribute per edge and a fixed palette
// listed in a leading comment.
std::string graph_to_dot(const EdgeColouredGraph& g);

// Compact serialisation followed by a newline.
std::string dump(const Json& j);

}  // namespace heterotree::io
