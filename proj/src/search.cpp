#include "forge/search.hpp"

#include <cmath>
#include <random>

#include "forge/errors.hpp"

namespace forge {

void SearchConfig::validate() const {
    if (m < 1) throw input_error("search: need m >= 1");
    if (starts < 0) throw input_error("search: need starts >= 0");
    if (max_iters < 1) throw input_error("search: need max_iters >= 1");
    if (!(init_step > 0)) throw input_error("search: need init_step > 0");
    if (!(shrink > 0 && shrink < 1)) throw input_error("search: need shrink in (0,1)");
    if (!(tol > 0)) throw input_error("search: need tol > 0");
}

std::string to_string(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::negative_deficit_found: return "negative-deficit-found";
        case SearchVerdict::nonnegative_minimum: return "nonnegative-minimum";
        case SearchVerdict::iteration_limit: return "iteration-limit";
    }
    return "unknown";
}

namespace {

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

StepGraphon clamp_graphon(const StepGraphon& w) {
    StepGraphon out = w;
    for (int a = 0; a < w.m; ++a)
        for (int b = 0; b < w.m; ++b) out.values[a][b] = clamp01(w.values[a][b]);
    return out;
}

double objective(const Graph& h, const StepGraphon& w) {
    return hom_density(h, w) + hom_density(h, complement(w));
}

// gradient of the objective in the upper-triangular parameterization,
// mirrored into a full symmetric matrix
std::vector<std::vector<double>> objective_gradient(const Graph& h, const StepGraphon& w) {
    auto g1 = density_gradient(h, w);
    auto g2 = density_gradient(h, complement(w));
    for (int a = 0; a < w.m; ++a)
        for (int b = 0; b < w.m; ++b) g1[a][b] -= g2[a][b];
    return g1;
}

// step from w along -step*grad, projected onto the box, acting on the
// upper-triangular parameters only
StepGraphon project_step(const StepGraphon& w, const std::vector<std::vector<double>>& grad,
                         double step) {
    StepGraphon out = w;
    for (int a = 0; a < w.m; ++a)
        for (int b = a; b < w.m; ++b) {
            double x = clamp01(w.values[a][b] - step * grad[a][b]);
            out.values[a][b] = x;
            out.values[b][a] = x;
        }
    return out;
}

double param_distance_sq(const StepGraphon& x, const StepGraphon& y) {
    double s = 0;
    for (int a = 0; a < x.m; ++a)
        for (int b = a; b < x.m; ++b) {
            double d = x.values[a][b] - y.values[a][b];
            s += d * d;
        }
    return s;
}

StepGraphon random_start(int m, std::mt19937_64& rng) {
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

}  // namespace

SearchResult search_min_deficit(const Graph& h, const SearchConfig& cfg) {
    cfg.validate();
    if (h.edge_count() > 60) throw capacity_error("search: requires e(h) <= 60");
    double target = std::ldexp(1.0, 1 - h.edge_count());

    std::vector<StepGraphon> starts;
    starts.push_back(StepGraphon::constant(cfg.m, 0.5));
    starts.push_back(StepGraphon::identity_blocks(cfg.m));
    for (int j = 0; j < cfg.starts; ++j) {
        std::mt19937_64 rng(cfg.seed + static_cast<unsigned long long>(j) + 1);
        starts.push_back(random_start(cfg.m, rng));
    }

    SearchResult result;
    bool have_best = false;
    bool best_converged = false;

    for (int si = 0; si < static_cast<int>(starts.size()); ++si) {
        StepGraphon w = clamp_graphon(starts[si]);
        double f = objective(h, w);
        bool converged = false;
        result.trajectory.push_back({si, 0, f - target});

        for (int iter = 1; iter <= cfg.max_iters; ++iter) {
            auto grad = objective_gradient(h, w);
            StepGraphon probe = project_step(w, grad, 1.0);
            double pg_norm = std::sqrt(param_distance_sq(probe, w));
            if (pg_norm < cfg.tol) {
                converged = true;
                break;
            }
            double step = cfg.init_step;
            bool accepted = false;
            while (step >= 1e-12) {
                StepGraphon cand = project_step(w, grad, step);
                double fc = objective(h, cand);
                double dist = param_distance_sq(cand, w);
                if (fc <= f - 1e-4 * dist / step) {
                    w = std::move(cand);
                    f = fc;
                    accepted = true;
                    break;
                }
                step *= cfg.shrink;
            }
            if (!accepted) {
                converged = true;  // no descent direction at working precision
                break;
            }
            result.trajectory.push_back({si, iter, f - target});
        }

        double deficit = f - target;
        if (!have_best || deficit < result.best_deficit) {
            have_best = true;
            result.best = w;
            result.best_deficit = deficit;
            result.best_start = si;
            best_converged = converged;
        }
    }

    // fresh evaluation of the reported optimum
    DensityReport rep = commonality_deficit(h, result.best);
    result.best_deficit = rep.deficit;

    if (result.best_deficit < -1e-9)
        result.verdict = SearchVerdict::negative_deficit_found;
    else if (best_converged)
        result.verdict = SearchVerdict::nonnegative_minimum;
    else
        result.verdict = SearchVerdict::iteration_limit;
    return result;
}

WitnessReport certify_witness(const Graph& h, const StepGraphon& w) {
    WitnessReport rep;
    rep.deficit = commonality_deficit(h, w).deficit;
    rep.witness = rep.deficit < -1e-9;
    return rep;
}

}  // namespace forge
