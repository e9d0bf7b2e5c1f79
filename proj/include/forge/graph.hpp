#ifndef FORGE_GRAPH_HPP
#define FORGE_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace forge {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored as a sorted
/// list of pairs (u,v) with u < v; no loops, no multi-edges. Vertices may
/// carry string labels (either none or one per vertex).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;
};

/// True iff no edge of g joins two members of s.
bool is_independent(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);

/// Exact vertex connectivity, computed by unit-capacity vertex-split max-flow
/// over source/target pairs. kappa(K_n) = n-1 by convention. Requires n >= 2.
int vertex_connectivity(const Graph& g);

/// min(kappa(g), cutoff); cheaper when only a lower-bound certificate at
/// `cutoff` is needed.
int vertex_connectivity(const Graph& g, int cutoff);

/// Exact chromatic number via iterative k-colorability with a clique lower
/// bound and greedy upper bound. Instances above max_vertices raise
/// capacity_error rather than risk a wrong answer.
int chromatic_number(const Graph& g, int max_vertices = 40);

/// Size of a maximum clique (exact, Bron-Kerbosch with pivoting).
int max_clique_size(const Graph& g);

/// Exact k-colorability decision (DSATUR backtracking).
bool is_k_colorable(const Graph& g, int k);

/// Length of a shortest cycle; nullopt on forests.
std::optional<int> girth(const Graph& g);

/// Edge-preserving bijection test by backtracking with color-refinement
/// pruning. Both graphs must have at most max_vertices vertices.
bool are_isomorphic(const Graph& a, const Graph& b, int max_vertices = 64);

}  // namespace forge

#endif
