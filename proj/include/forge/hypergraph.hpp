#ifndef FORGE_HYPERGRAPH_HPP
#define FORGE_HYPERGRAPH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "forge/bookpile.hpp"
#include "forge/graph.hpp"

namespace forge {

/// The r-uniform linear hypergraph whose vertices are the wildcard r-tuples
/// over [q] and whose edges are all tuples of [q]^r; a vertex lies in an edge
/// iff substituting its wildcard by some value of [q] yields the edge. This is
/// exactly the hypergraph of standard copies of an r-vertex seed inside its
/// q-bookpile. Vertices and edges are addressed by dense ids; the incidence
/// structure is computed from the ids, nothing is materialized.
class BookpileHypergraph {
public:
    BookpileHypergraph(int q, int r, std::size_t max_vertices = 1000000);

    int q() const { return q_; }
    int r() const { return r_; }
    int vertex_count() const { return static_cast<int>(r_ * block_); }
    long long edge_count() const { return q_ * block_; }

    LabeledVertex vertex_label(int vid) const;
    int vertex_id(const LabeledVertex& v) const;
    std::vector<int> edge_tuple(long long eid) const;
    long long edge_id(const std::vector<int>& tuple) const;

    /// The r vertices of an edge, one per wildcard position, ascending by position.
    std::vector<int> edge_vertices(long long eid) const;
    /// The q edges through a vertex, ascending by substituted value.
    std::vector<long long> vertex_edges(int vid) const;
    bool incident(int vid, long long eid) const;

    // Slice structure along the last coordinate: W_i holds the vertices whose
    // last coordinate equals i; the U set holds those with wildcard last.
    bool in_ur(int vid) const;
    int slice_of_vertex(int vid) const;      // i for W_i members, 0 for U members
    int slice_of_edge(long long eid) const;  // last coordinate of the tuple
    std::vector<int> ur_vertices() const;
    std::vector<int> slice_vertices(int i) const;
    std::vector<long long> slice_edges(int i) const;

private:
    int q_, r_;
    long long block_;  // q^(r-1)
};

inline BookpileHypergraph build_hqr(int q, int r, std::size_t max_vertices = 1000000) {
    return BookpileHypergraph(q, r, max_vertices);
}

/// Number of common edges of two distinct vertices: 1 iff they agree on every
/// coordinate outside their two wildcard positions, else 0.
int codegree(const BookpileHypergraph& hg, int u, int v);

/// Alternating vertex/edge sequence; consecutive vertices share the edge
/// between them and non-consecutive edges are disjoint. A single vertex and
/// no edges is the trivial path.
struct HyperPath {
    std::vector<int> vertices;
    std::vector<long long> edges;
};

/// Smallest q for which the constructive k-connectivity argument runs at
/// uniformity r: k when r = 2, else the least multiple of 3 covering both the
/// (r-1)-level requirement and 3(k+1).
int threshold_q(int k, int r);

/// Graph on the wildcard-last vertices: two are adjacent iff they differ in
/// exactly one coordinate. Isomorphic to the Cartesian product of r-1 copies
/// of K_q, hence (r-1)(q-1)-connected. Requires r >= 3.
Graph aux_product_graph(int q, int r);

/// s pairwise vertex-disjoint U-V paths, the i-th lying inside slice i.
/// Requires r >= 3, (r-1)(q-1) >= q >= s, |U| >= s, |V| >= s, U,V inside the
/// wildcard-last set. Paths at shared U/V vertices are trivial and come first.
std::vector<HyperPath> uv_slice_paths(const BookpileHypergraph& hg, const std::vector<int>& U,
                                      const std::vector<int>& V, int s);

/// k internally vertex-disjoint u-v paths, built by the slice case analysis
/// and self-validated before returning. Requires q >= threshold_q(k, r).
std::vector<HyperPath> connect(const BookpileHypergraph& hg, int u, int v, int k);

/// Checks one path against the alternation/disjointness rules and its
/// endpoints; throws input_error with a diagnostic when malformed.
void validate_hyperpath(const BookpileHypergraph& hg, const HyperPath& p, int u, int v);

/// True iff every pair of paths meets the internal-disjointness conditions:
/// first edges intersect exactly in {u}, last edges exactly in {v}, all other
/// edge pairs are disjoint. Individual paths must already be valid u-v paths.
bool validate_disjoint(const BookpileHypergraph& hg, const std::vector<HyperPath>& paths,
                       int u, int v);

struct AuxCheck {
    bool ok = false;
    long long offending_copy = -1;
    std::string detail;
};

/// Interprets the standard copies as hyperedges via their coordinate labels
/// and reports whether that hypergraph coincides exactly with the (q,r)
/// structure above.
AuxCheck aux_hypergraph_of_copies(const std::vector<StandardCopy>& copies, int q, int r);

/// Translates internally disjoint hyperpaths into internally disjoint graph
/// paths in the bookpile, routing each hop through the standard copy of its
/// hyperedge. Requires h connected.
std::vector<std::vector<int>> lift_paths(const Graph& h, const BookpileResult& pile,
                                         const std::vector<HyperPath>& paths);

/// Graph-level companion check: simple u-v paths meeting pairwise exactly in
/// the two endpoints.
bool graph_paths_internally_disjoint(const Graph& g, const std::vector<std::vector<int>>& paths,
                                     int u, int v);

}  // namespace forge

#endif
