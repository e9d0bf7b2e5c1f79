#include "forge/generators.hpp"

#include <cctype>

#include "forge/errors.hpp"

namespace forge {

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw input_error("cycle_graph: need n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw input_error("path_graph: need n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw input_error("complete_bipartite: need positive part sizes");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);        // outer cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);              // spokes
    }
    return g;
}

Graph hypercube_graph(int r) {
    if (r < 0 || r > 20) throw input_error("hypercube_graph: need 0 <= r <= 20");
    int n = 1 << r;
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int d = 0; d < r; ++d)
            if (!(v & (1 << d))) g.add_edge(v, v | (1 << d));
    return g;
}

Graph line_graph(const Graph& g) {
    const auto& edges = g.edges();
    int m = static_cast<int>(edges.size());
    Graph lg(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) lg.add_edge(i, j);
        }
    return lg;
}

Graph make_named_graph(const std::string& name) {
    if (name.empty()) throw input_error("make_named_graph: empty name");
    if (name == "petersen") return petersen_graph();
    char kind = static_cast<char>(std::tolower(name[0]));
    std::string rest = name.substr(1);
    auto parse_int = [&](const std::string& s) {
        if (s.empty()) throw input_error("make_named_graph: bad name '" + name + "'");
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw input_error("make_named_graph: bad name '" + name + "'");
        return std::stoi(s);
    };
    auto comma = rest.find(',');
    if (kind == 'k' && comma != std::string::npos)
        return complete_bipartite(parse_int(rest.substr(0, comma)),
                                  parse_int(rest.substr(comma + 1)));
    switch (kind) {
        case 'k': return complete_graph(parse_int(rest));
        case 'c': return cycle_graph(parse_int(rest));
        case 'p': return path_graph(parse_int(rest));
        case 'q': return hypercube_graph(parse_int(rest));
        default: throw input_error("make_named_graph: unknown generator '" + name + "'");
    }
}

}  // namespace forge
