#ifndef FORGE_TESTS_TEST_UTIL_HPP
#define FORGE_TESTS_TEST_UTIL_HPP

#include <queue>
#include <random>
#include <vector>

#include "forge/graph.hpp"
#include "forge/graphon.hpp"

namespace forge::testutil {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unif(rng) < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline StepGraphon random_graphon(int m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    StepGraphon w = StepGraphon::constant(m, 0.0);
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            double x = unif(rng);
            w.values[a][b] = x;
            w.values[b][a] = x;
        }
    return w;
}

// Minimum number of vertices whose removal disconnects the graph or leaves at
// most one vertex, by exhaustive subset enumeration. Independent of the
// flow-based routine it cross-checks.
inline int brute_vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    auto adj = g.adjacency();
    int best = n - 1;
    for (int mask = 0; mask < (1 << n); ++mask) {
        int removed = __builtin_popcount(mask);
        if (removed >= best) continue;
        int start = -1, alive = 0;
        for (int v = 0; v < n; ++v)
            if (!(mask & (1 << v))) {
                alive++;
                start = v;
            }
        if (alive <= 1) {
            best = std::min(best, removed);
            continue;
        }
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        int reached = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj[x])
                if (!seen[y] && !(mask & (1 << y))) {
                    seen[y] = 1;
                    reached++;
                    q.push(y);
                }
        }
        if (reached < alive) best = std::min(best, removed);
    }
    return best;
}

// Shortest cycle length by enumerating simple cycles from their smallest
// vertex; 0 when acyclic.
inline int brute_girth(const Graph& g) {
    int n = g.vertex_count();
    auto adj = g.adjacency();
    int best = 0;
    std::vector<char> on_path(n, 0);
    std::vector<int> path;
    auto dfs = [&](auto&& self, int root, int v) -> void {
        for (int w : adj[v]) {
            if (w == root && path.size() >= 3) {
                if (best == 0 || static_cast<int>(path.size()) < best)
                    best = static_cast<int>(path.size());
            } else if (w > root && !on_path[w]) {
                if (best != 0 && static_cast<int>(path.size()) + 1 >= best) continue;
                on_path[w] = 1;
                path.push_back(w);
                self(self, root, w);
                path.pop_back();
                on_path[w] = 0;
            }
        }
    };
    for (int root = 0; root < n; ++root) {
        on_path.assign(n, 0);
        on_path[root] = 1;
        path = {root};
        dfs(dfs, root, root);
    }
    return best;
}

}  // namespace forge::testutil

#endif
