#include "forge/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "forge/errors.hpp"
#include "forge/generators.hpp"

namespace forge {

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw input_error("graph json: expected object with 'n' and 'edges'");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw input_error("graph json: bad edge entry");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Graph g(n, std::move(edges));
    if (j.contains("labels")) g.set_labels(j.at("labels").get<std::vector<std::string>>());
    return g;
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  v" << v;
        if (g.has_labels()) out << " [label=\"" << g.labels()[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error("cannot parse graph file " + path + ": " + e.what());
    }
    return graph_from_json(j);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write graph file: " + path);
    out << graph_to_json(g).dump(2) << "\n";
}

Graph load_graph_spec(const std::string& spec) {
    if (spec.rfind("gen:", 0) == 0) return make_named_graph(spec.substr(4));
    return read_graph_file(spec);
}

}  // namespace forge
