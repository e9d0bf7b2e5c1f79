#ifndef FORGE_GRAPHON_HPP
#define FORGE_GRAPHON_HPP

#include <vector>

#include "json.hpp"

#include "forge/graph.hpp"

namespace forge {

/// Symmetric step function on [0,1]^2 with m equal-measure blocks; entry
/// values[a][b] is the edge density between blocks a and b.
struct StepGraphon {
    int m = 1;
    std::vector<std::vector<double>> values;

    static StepGraphon constant(int m, double p);
    static StepGraphon identity_blocks(int m);  // 1 on the diagonal, 0 elsewhere

    void validate() const;  // symmetry and [0,1] range
};

/// Entrywise 1 - values; an involution.
StepGraphon complement(const StepGraphon& w);

/// Homomorphism density t(h, w): average over all m^|V(h)| block maps of the
/// product of w over the edges. Exact for step functions. Raises
/// capacity_error when m^|V(h)| exceeds max_maps.
double hom_density(const Graph& h, const StepGraphon& w,
                   unsigned long long max_maps = 100000000ULL);

struct DensityReport {
    double t_w = 0;
    double t_comp = 0;
    double deficit = 0;  // t_w + t_comp - 2^(1-e(h))
};

/// Densities of h in w and its complement plus the commonality slack; a
/// negative deficit witnesses that h is not common.
DensityReport commonality_deficit(const Graph& h, const StepGraphon& w,
                                  unsigned long long max_maps = 100000000ULL);

struct JensenReport {
    double lhs = 0;  // t(book, w)
    double rhs = 0;  // t(h, w)^q
    bool ok = false;
};

/// Verifies t(h_I^q, w) >= t(h, w)^q up to 1e-12, the convexity inequality
/// behind commonality of glued books.
JensenReport jensen_check(const Graph& h, const VertexSet& iset, int q, const StepGraphon& w);

/// Partial derivatives of hom_density with respect to the upper-triangular
/// block values; off-diagonal cells aggregate both mirrored positions and the
/// returned matrix is symmetric.
std::vector<std::vector<double>> density_gradient(const Graph& h, const StepGraphon& w,
                                                  unsigned long long max_maps = 10000000ULL);

using json = nlohmann::ordered_json;

json graphon_to_json(const StepGraphon& w);
/// Validates symmetry within 1e-12 and symmetrizes.
StepGraphon graphon_from_json(const json& j);
StepGraphon read_graphon_file(const std::string& path);

}  // namespace forge

#endif
