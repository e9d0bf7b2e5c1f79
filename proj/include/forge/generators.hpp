#ifndef FORGE_GENERATORS_HPP
#define FORGE_GENERATORS_HPP

#include <string>

#include "forge/graph.hpp"

namespace forge {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph hypercube_graph(int r);

/// Line graph: one vertex per edge of g, adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

/// Named generators for CLI use: "k5", "c7", "p4", "k3,3", "q3", "petersen".
Graph make_named_graph(const std::string& name);

}  // namespace forge

#endif
