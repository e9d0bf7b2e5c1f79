#ifndef FORGE_BOOKPILE_HPP
#define FORGE_BOOKPILE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "forge/graph.hpp"

namespace forge {

/// Coordinate label of a bookpile vertex: an r-tuple over {1..q} with exactly
/// one wildcard entry (stored as 0, printed as a Greek alpha). The wildcard
/// position identifies which vertex of the seed graph the label clones.
struct LabeledVertex {
    std::vector<int> coords;  // 0 = wildcard, else 1..q

    int alpha_bit() const;
    bool valid(int q) const;
    std::string to_string() const;                       // "(2,α,1)"
    static LabeledVertex parse(const std::string& s);    // accepts α, 'a' or '*'

    bool operator==(const LabeledVertex& other) const { return coords == other.coords; }
    bool operator<(const LabeledVertex& other) const { return coords < other.coords; }
};

/// One of the q^r edge-disjoint seed-graph copies a bookpile decomposes into.
struct StandardCopy {
    std::vector<int> edge_coords;         // element of [q]^r
    std::vector<LabeledVertex> vertices;  // indexed by seed vertex; wildcard planted there
    std::vector<int> vertex_ids;          // matching vertex ids in the bookpile graph
};

/// q vertex-disjoint copies of h glued along the independent set iset.
/// The result has |iset| + q*(n-|iset|) vertices and q*e(h) edges; identified
/// vertices come first (ascending), then the copies in order.
Graph q_book(const Graph& h, const VertexSet& iset, int q);

struct BookpileResult {
    Graph graph;                      // labelled with coordinate strings
    std::vector<StandardCopy> copies; // indexed consistently with [q]^r enumeration
    int q = 1;
};

/// Iterated q-book: one gluing step per vertex of h, in ascending id order.
/// Produces r*q^(r-1) vertices and q^r*e(h) edges plus all standard copies.
BookpileResult bookpile(const Graph& h, int q, std::size_t max_vertices = 1000000);

/// True iff mapping every labelled vertex of hq to its wildcard position is a
/// graph homomorphism onto h. Together with the embedded seed copies this
/// certifies that the bookpile preserves the chromatic number.
bool verify_clone_coloring(const Graph& h, const Graph& hq);

}  // namespace forge

#endif
