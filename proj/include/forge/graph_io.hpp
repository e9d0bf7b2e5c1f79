#ifndef FORGE_GRAPH_IO_HPP
#define FORGE_GRAPH_IO_HPP

#include <string>

#include "json.hpp"

#include "forge/graph.hpp"

namespace forge {

using json = nlohmann::ordered_json;

/// {"n": int, "edges": [[u,v],...], "labels": [...]?}; edges sorted
/// lexicographically on write.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

std::string graph_to_dot(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

/// Accepts either a file path or an inline generator spec like "gen:k3".
Graph load_graph_spec(const std::string& spec);

}  // namespace forge

#endif
