#include "forge/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>

#include "forge/errors.hpp"
#include "maxflow.hpp"

namespace forge {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw input_error("graph: negative vertex count");
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : Graph(n) {
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw input_error("graph: self-loop");
        if (u < 0 || v >= n_) throw input_error("graph: endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw input_error("graph: duplicate edge");
    edges_ = std::move(edges);
}

void Graph::add_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    if (u == v) throw input_error("graph: self-loop");
    if (u < 0 || v >= n_) throw input_error("graph: endpoint out of range");
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it != edges_.end() && *it == std::make_pair(u, v))
        throw input_error("graph: duplicate edge");
    edges_.insert(it, {u, v});
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n_);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (auto [u, v] : edges_) {
        deg[u]++;
        deg[v]++;
    }
    return deg;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw input_error("graph: label count must equal vertex count");
    labels_ = std::move(labels);
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (v < 0 || v >= g.vertex_count()) throw input_error("is_independent: vertex out of range");
    for (auto [u, v] : g.edges())
        if (std::binary_search(s.begin(), s.end(), u) && std::binary_search(s.begin(), s.end(), v))
            return false;
    return true;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    auto adj = g.adjacency();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                reached++;
                q.push(y);
            }
    }
    return reached == n;
}

namespace {

// Max number of internally vertex-disjoint s-t paths for non-adjacent s,t:
// split every vertex into in/out with unit capacity and run max-flow.
int vertex_disjoint_paths(const std::vector<std::vector<int>>& adj, int n, int s, int t,
                          int limit) {
    // node 2v = v_in, 2v+1 = v_out
    MaxFlow flow(2 * n);
    for (int v = 0; v < n; ++v)
        flow.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? limit : 1);
    for (int u = 0; u < n; ++u)
        for (int v : adj[u]) flow.add_arc(2 * u + 1, 2 * v, 1);
    return flow.run(2 * s + 1, 2 * t, limit);
}

}  // namespace

int vertex_connectivity(const Graph& g, int cutoff) {
    int n = g.vertex_count();
    if (n < 2) throw input_error("vertex_connectivity: need at least two vertices");
    auto adj = g.adjacency();
    // kappa <= best over all examined pairs; restricting sources to the closed
    // neighborhood of one vertex still meets a minimum cut: either v0 avoids
    // the cut (pair across it from v0) or v0 lies in it and has a neighbor on
    // each side.
    int v0 = 0;
    auto deg = g.degrees();
    for (int v = 1; v < n; ++v)
        if (deg[v] < deg[v0]) v0 = v;
    std::vector<int> sources = {v0};
    sources.insert(sources.end(), adj[v0].begin(), adj[v0].end());

    int best = std::min(cutoff, n - 1);
    for (int s : sources) {
        std::vector<char> is_nbr(n, 0);
        is_nbr[s] = 1;
        for (int y : adj[s]) is_nbr[y] = 1;
        for (int t = 0; t < n; ++t) {
            if (is_nbr[t]) continue;
            if (best == 0) return 0;
            best = std::min(best, vertex_disjoint_paths(adj, n, s, t, best));
        }
    }
    return best;  // no non-adjacent pair at all: complete graph, n-1
}

int vertex_connectivity(const Graph& g) {
    return vertex_connectivity(g, std::numeric_limits<int>::max());
}

namespace {

struct CliqueSearch {
    const std::vector<std::vector<char>>& mat;
    int best = 0;

    void expand(std::vector<int>& r, std::vector<int>& p, std::vector<int>& x) {
        if (p.empty() && x.empty()) {
            best = std::max(best, static_cast<int>(r.size()));
            return;
        }
        if (static_cast<int>(r.size() + p.size()) <= best) return;
        // pivot: vertex of p|x with most neighbors in p
        int pivot = -1, pivot_cnt = -1;
        for (int cand : p) count_pivot(cand, p, pivot, pivot_cnt);
        for (int cand : x) count_pivot(cand, p, pivot, pivot_cnt);
        std::vector<int> ext;
        for (int v : p)
            if (pivot < 0 || !mat[pivot][v]) ext.push_back(v);
        for (int v : ext) {
            std::vector<int> p2, x2;
            for (int w : p)
                if (mat[v][w]) p2.push_back(w);
            for (int w : x)
                if (mat[v][w]) x2.push_back(w);
            r.push_back(v);
            expand(r, p2, x2);
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    }

    void count_pivot(int cand, const std::vector<int>& p, int& pivot, int& pivot_cnt) {
        int c = 0;
        for (int w : p)
            if (mat[cand][w]) c++;
        if (c > pivot_cnt) {
            pivot_cnt = c;
            pivot = cand;
        }
    }
};

std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
    std::vector<std::vector<char>> mat(g.vertex_count(),
                                       std::vector<char>(g.vertex_count(), 0));
    for (auto [u, v] : g.edges()) {
        mat[u][v] = 1;
        mat[v][u] = 1;
    }
    return mat;
}

// DSATUR backtracking k-colorability over the adjacency matrix.
struct ColorSearch {
    const std::vector<std::vector<char>>& mat;
    int n;
    int k;
    std::vector<int> color;          // 0 = uncolored, else 1..k
    std::vector<std::vector<int>> nbr_colors;  // per vertex, count per color 1..k
    std::vector<int> sat;            // number of distinct colors among neighbors
    std::vector<int> deg;
    int max_used = 0;

    bool solve(int colored) {
        if (colored == n) return true;
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            if (pick < 0 || sat[v] > sat[pick] ||
                (sat[v] == sat[pick] && deg[v] > deg[pick]))
                pick = v;
        }
        int limit = std::min(k, max_used + 1);  // one fresh color at most
        for (int c = 1; c <= limit; ++c) {
            if (nbr_colors[pick][c] > 0) continue;
            int prev_max = max_used;
            assign(pick, c);
            max_used = std::max(max_used, c);
            if (solve(colored + 1)) return true;
            max_used = prev_max;
            unassign(pick, c);
        }
        return false;
    }

    void assign(int v, int c) {
        color[v] = c;
        for (int w = 0; w < n; ++w)
            if (mat[v][w] && !color[w]) {
                if (nbr_colors[w][c]++ == 0) sat[w]++;
            }
    }

    void unassign(int v, int c) {
        color[v] = 0;
        for (int w = 0; w < n; ++w)
            if (mat[v][w] && !color[w]) {
                if (--nbr_colors[w][c] == 0) sat[w]--;
            }
    }
};

}  // namespace

int max_clique_size(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    auto mat = adjacency_matrix(g);
    CliqueSearch search{mat};
    std::vector<int> r, p(g.vertex_count()), x;
    std::iota(p.begin(), p.end(), 0);
    search.expand(r, p, x);
    return search.best;
}

bool is_k_colorable(const Graph& g, int k) {
    int n = g.vertex_count();
    if (k < 0) throw input_error("is_k_colorable: negative k");
    if (n == 0) return true;
    if (k == 0) return false;
    auto mat = adjacency_matrix(g);
    ColorSearch search{mat,
                       n,
                       k,
                       std::vector<int>(n, 0),
                       std::vector<std::vector<int>>(n, std::vector<int>(k + 1, 0)),
                       std::vector<int>(n, 0),
                       g.degrees()};
    return search.solve(0);
}

int chromatic_number(const Graph& g, int max_vertices) {
    int n = g.vertex_count();
    if (n < 1) throw input_error("chromatic_number: empty graph");
    if (n > max_vertices)
        throw capacity_error("chromatic_number: instance above exact-search limit of " +
                             std::to_string(max_vertices) + " vertices");
    if (g.edge_count() == 0) return 1;
    int lower = max_clique_size(g);
    for (int k = lower; k < n; ++k)
        if (is_k_colorable(g, k)) return k;
    return n;
}

std::optional<int> girth(const Graph& g) {
    int n = g.vertex_count();
    auto adj = g.adjacency();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (2 * dist[x] >= best) break;
            for (int y : adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                } else if (y != parent[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

namespace {

// Joint color refinement; returns per-graph stable colors, or empty if the
// color histograms ever diverge.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& a, const Graph& b) {
    auto adj_a = a.adjacency();
    auto adj_b = b.adjacency();
    int na = a.vertex_count(), nb = b.vertex_count();
    std::vector<int> ca(na, 0), cb(nb, 0);
    int num_colors = 1;
    for (int round = 0; round < na + 1; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> next_id;
        auto signature = [&](int v, const std::vector<int>& colors,
                             const std::vector<std::vector<int>>& adj) {
            std::vector<int> nb_colors;
            for (int w : adj[v]) nb_colors.push_back(colors[w]);
            std::sort(nb_colors.begin(), nb_colors.end());
            return std::make_pair(colors[v], nb_colors);
        };
        std::vector<int> na_colors(na), nb_colors(nb);
        for (int v = 0; v < na; ++v) {
            auto sig = signature(v, ca, adj_a);
            auto it = next_id.find(sig);
            if (it == next_id.end()) it = next_id.emplace(sig, (int)next_id.size()).first;
            na_colors[v] = it->second;
        }
        for (int v = 0; v < nb; ++v) {
            auto sig = signature(v, cb, adj_b);
            auto it = next_id.find(sig);
            if (it == next_id.end()) return {{}, {}};  // color unseen in a
            nb_colors[v] = it->second;
        }
        int new_count = static_cast<int>(next_id.size());
        ca.swap(na_colors);
        cb.swap(nb_colors);
        if (new_count == num_colors) break;
        num_colors = new_count;
    }
    // histograms must agree
    std::vector<int> ha(num_colors + na, 0), hb(num_colors + na, 0);
    for (int c : ca) ha[c]++;
    for (int c : cb) hb[c]++;
    if (ha != hb) return {{}, {}};
    return {ca, cb};
}

struct IsoSearch {
    const std::vector<std::vector<char>>& ma;
    const std::vector<std::vector<char>>& mb;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    const std::vector<int>& order;  // vertices of a in assignment order
    std::vector<int> map_ab;
    std::vector<char> used_b;

    bool extend(std::size_t idx) {
        if (idx == order.size()) return true;
        int v = order[idx];
        int n = static_cast<int>(mb.size());
        for (int w = 0; w < n; ++w) {
            if (used_b[w] || cb[w] != ca[v]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < idx && ok; ++j) {
                int v2 = order[j];
                if (ma[v][v2] != mb[w][map_ab[v2]]) ok = false;
            }
            if (!ok) continue;
            map_ab[v] = w;
            used_b[w] = 1;
            if (extend(idx + 1)) return true;
            used_b[w] = 0;
        }
        return false;
    }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b, int max_vertices) {
    if (a.vertex_count() > max_vertices || b.vertex_count() > max_vertices)
        throw capacity_error("are_isomorphic: instance above search limit of " +
                             std::to_string(max_vertices) + " vertices");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    int n = a.vertex_count();
    if (n == 0) return true;
    auto [ca, cb] = refine_colors(a, b);
    if (ca.empty()) return false;

    auto ma = adjacency_matrix(a);
    auto mb = adjacency_matrix(b);
    // assign rare color classes first, neighbors of assigned vertices next
    std::vector<int> class_size(n + 1, 0);
    for (int c : ca) class_size[c]++;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (class_size[ca[x]] != class_size[ca[y]]) return class_size[ca[x]] < class_size[ca[y]];
        return x < y;
    });
    // connectivity-aware reorder: prefer vertices adjacent to already placed
    std::vector<int> placed;
    std::vector<char> taken(n, 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int best = -1;
        for (int v : order) {
            if (taken[v]) continue;
            bool touches = false;
            for (int w : placed)
                if (ma[v][w]) {
                    touches = true;
                    break;
                }
            if (touches) {
                best = v;
                break;
            }
        }
        if (best < 0)
            for (int v : order)
                if (!taken[v]) {
                    best = v;
                    break;
                }
        taken[best] = 1;
        placed.push_back(best);
    }
    IsoSearch search{ma, mb, ca, cb, placed, std::vector<int>(n, -1),
                     std::vector<char>(n, 0)};
    return search.extend(0);
}

}  // namespace forge
