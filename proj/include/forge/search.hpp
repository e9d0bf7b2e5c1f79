#ifndef FORGE_SEARCH_HPP
#define FORGE_SEARCH_HPP

#include <string>
#include <vector>

#include "forge/graph.hpp"
#include "forge/graphon.hpp"

namespace forge {

struct SearchConfig {
    int m = 4;                 // block count of the iterates
    int starts = 10;           // random restarts, on top of the two canonical starts
    int max_iters = 500;
    double init_step = 0.5;
    double shrink = 0.5;       // backtracking factor, in (0,1)
    double tol = 1e-10;        // projected-gradient norm stopping threshold
    unsigned long long seed = 0;

    void validate() const;
};

enum class SearchVerdict { negative_deficit_found, nonnegative_minimum, iteration_limit };

std::string to_string(SearchVerdict v);

struct TrajectoryPoint {
    int start;
    int iter;
    double deficit;
};

struct SearchResult {
    StepGraphon best;
    double best_deficit = 0.0;
    int best_start = -1;
    SearchVerdict verdict = SearchVerdict::iteration_limit;
    std::vector<TrajectoryPoint> trajectory;
};

/// Projected gradient descent with backtracking on t(h,W) + t(h,1-W) over the
/// box of symmetric block matrices, multi-start (constant 1/2, block identity,
/// then seeded random symmetric starts). The objective never increases along
/// accepted steps; the reported best deficit is re-evaluated from scratch.
SearchResult search_min_deficit(const Graph& h, const SearchConfig& cfg);

struct WitnessReport {
    double deficit = 0.0;
    bool witness = false;  // deficit < -1e-9: h is certifiably not common
};

/// Re-evaluates the deficit with fixed-order exhaustive summation and decides
/// whether w certifies uncommonness of h.
WitnessReport certify_witness(const Graph& h, const StepGraphon& w);

}  // namespace forge

#endif
