#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "assoc/graph.hpp"
#include "assoc/search_tree.hpp"
#include "assoc/trivially_perfect.hpp"

namespace assoc {

inline constexpr const char* kToolVersion = "0.1.0";

// Text edge list: first line "n m", then one "u v" line per edge,
// 0-based. Lines starting with '#' are comments.
std::string graph_to_edge_list(const Graph& g);
Graph graph_from_edge_list(std::istream& in);
Graph graph_from_edge_list(const std::string& text);

// {"n": int, "edges": [[u,v], ...], "labels": {"0": "a1", ...}}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// "root; v:parent, v:parent, ..." with non-root vertices listed in
// ascending order
std::string tree_to_text(const SearchTree& t);
SearchTree tree_from_text(const Graph& g, const std::string& text);

// {"root": id, "parent": [ ... ]} with null at the root slot
nlohmann::json tree_to_json(const SearchTree& t);
SearchTree tree_from_json(const Graph& g, const nlohmann::json& j);

// parent -> child edges; uses vertex labels when present
std::string tree_to_dot(const SearchTree& t);

// {"nodes": [{"bag": [ids], "children": [indices]}, ...]}, root first
nlohmann::json ucd_to_json(const UniversalCliqueDecomposition& ucd);
UniversalCliqueDecomposition ucd_from_json(const nlohmann::json& j);

// Reads a graph from a family spec ("star:5"), a file path, or inline
// JSON starting with '{'.
Graph load_graph(const std::string& arg);

}  // namespace assoc
