#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "forge/bookpile.hpp"
#include "forge/errors.hpp"
#include "forge/generators.hpp"
#include "forge/graphon.hpp"
#include "test_util.hpp"

using namespace forge;

namespace {

// central finite differences over the upper-triangular parameters, mirroring
// the symmetric perturbation; callers keep entries away from the box walls
std::vector<std::vector<double>> fd_gradient(const Graph& h, const StepGraphon& w, double eps) {
    std::vector<std::vector<double>> g(w.m, std::vector<double>(w.m, 0.0));
    for (int a = 0; a < w.m; ++a)
        for (int b = a; b < w.m; ++b) {
            StepGraphon up = w, down = w;
            up.values[a][b] += eps;
            up.values[b][a] = up.values[a][b];
            down.values[a][b] -= eps;
            down.values[b][a] = down.values[a][b];
            double d = (hom_density(h, up) - hom_density(h, down)) / (2 * eps);
            g[a][b] = d;
            g[b][a] = d;
        }
    return g;
}

}  // namespace

TEST_CASE("densities of simple shapes") {
    Graph k2 = complete_graph(2);
    for (double p : {0.0, 0.25, 0.5, 1.0})
        CHECK(hom_density(k2, StepGraphon::constant(3, p)) == doctest::Approx(p).epsilon(1e-14));

    CHECK(hom_density(cycle_graph(4), StepGraphon::constant(2, 0.5)) ==
          doctest::Approx(0.0625).epsilon(1e-14));

    CHECK(hom_density(complete_graph(3), StepGraphon::identity_blocks(2)) ==
          doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("density of a constant graphon is p^e") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        Graph h = testutil::random_graph(2 + static_cast<int>(rng() % 5), 0.5, rng);
        double p = unif(rng);
        int m = 1 + static_cast<int>(rng() % 4);
        CHECK(hom_density(h, StepGraphon::constant(m, p)) ==
              doctest::Approx(std::pow(p, h.edge_count())).epsilon(1e-12));
    }
}

TEST_CASE("density is multiplicative over disjoint unions") {
    std::mt19937_64 rng(405);
    for (int trial = 0; trial < 20; ++trial) {
        Graph h1 = testutil::random_graph(2 + static_cast<int>(rng() % 3), 0.6, rng);
        Graph h2 = testutil::random_graph(2 + static_cast<int>(rng() % 3), 0.6, rng);
        std::vector<std::pair<int, int>> edges = h1.edges();
        for (auto [u, v] : h2.edges())
            edges.emplace_back(u + h1.vertex_count(), v + h1.vertex_count());
        Graph both(h1.vertex_count() + h2.vertex_count(), edges);
        StepGraphon w = testutil::random_graphon(3, rng);
        CHECK(hom_density(both, w) ==
              doctest::Approx(hom_density(h1, w) * hom_density(h2, w)).epsilon(1e-12));
    }
}

TEST_CASE("density is monotone in the entries") {
    std::mt19937_64 rng(406);
    for (int trial = 0; trial < 20; ++trial) {
        Graph h = testutil::random_graph(4, 0.6, rng);
        StepGraphon w = testutil::random_graphon(3, rng);
        double before = hom_density(h, w);
        int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
        StepGraphon up = w;
        up.values[a][b] = std::min(1.0, up.values[a][b] + 0.2);
        up.values[b][a] = up.values[a][b];
        CHECK(hom_density(h, up) >= before - 1e-13);
    }
}

TEST_CASE("block refinement leaves the density unchanged") {
    std::mt19937_64 rng(407);
    for (int trial = 0; trial < 10; ++trial) {
        int m = 2 + static_cast<int>(rng() % 2);
        StepGraphon w = testutil::random_graphon(m, rng);
        StepGraphon fine = StepGraphon::constant(2 * m, 0.0);
        for (int a = 0; a < 2 * m; ++a)
            for (int b = 0; b < 2 * m; ++b) fine.values[a][b] = w.values[a / 2][b / 2];
        Graph h = testutil::random_graph(4, 0.5, rng);
        CHECK(hom_density(h, fine) == doctest::Approx(hom_density(h, w)).epsilon(1e-12));
    }
}

TEST_CASE("complement is an involution and fixes the half graphon") {
    StepGraphon half = StepGraphon::constant(2, 0.5);
    CHECK(complement(half).values == half.values);
    StepGraphon id2 = StepGraphon::identity_blocks(2);
    CHECK(complement(id2).values[0][0] == 0.0);
    CHECK(complement(id2).values[0][1] == 1.0);
    std::mt19937_64 rng(408);
    for (int trial = 0; trial < 100; ++trial) {
        StepGraphon w = testutil::random_graphon(1 + static_cast<int>(rng() % 5), rng);
        StepGraphon back = complement(complement(w));
        for (int a = 0; a < w.m; ++a)
            for (int b = 0; b < w.m; ++b)
                CHECK(back.values[a][b] == doctest::Approx(w.values[a][b]).epsilon(1e-15));
    }
}

TEST_CASE("commonality deficit on landmark cases") {
    Graph k3 = complete_graph(3);
    auto rep = commonality_deficit(k3, StepGraphon::constant(2, 0.5));
    CHECK(rep.deficit == doctest::Approx(0.0).epsilon(1e-14));

    std::mt19937_64 rng(409);
    for (int trial = 0; trial < 25; ++trial) {
        StepGraphon w = testutil::random_graphon(2 + static_cast<int>(rng() % 3), rng);
        auto edge_rep = commonality_deficit(complete_graph(2), w);
        CHECK(edge_rep.deficit == doctest::Approx(0.0).epsilon(1e-12));
    }

    auto id_rep = commonality_deficit(k3, StepGraphon::identity_blocks(2));
    CHECK(id_rep.t_w == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(id_rep.t_comp == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(id_rep.deficit == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("triangles keep a nonnegative deficit over random graphons") {
    std::mt19937_64 rng(410);
    Graph k3 = complete_graph(3);
    for (int trial = 0; trial < 1000; ++trial) {
        int m = 1 + static_cast<int>(rng() % 8);
        StepGraphon w = testutil::random_graphon(m, rng);
        CHECK(commonality_deficit(k3, w).deficit >= -1e-9);
    }
}

TEST_CASE("jensen examples") {
    StepGraphon id2 = StepGraphon::identity_blocks(2);
    auto rep = jensen_check(complete_graph(2), {0}, 2, id2);
    CHECK(rep.lhs == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(rep.rhs == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(rep.ok);

    std::mt19937_64 rng(411);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        double p = unif(rng);
        StepGraphon w = StepGraphon::constant(3, p);
        Graph h = complete_graph(3);
        auto r2 = jensen_check(h, {1}, 2, w);
        CHECK(r2.lhs == doctest::Approx(std::pow(p, 6)).epsilon(1e-12));
        CHECK(r2.rhs == doctest::Approx(std::pow(p, 6)).epsilon(1e-12));
        CHECK(r2.ok);
    }

    for (int trial = 0; trial < 50; ++trial) {
        StepGraphon w = testutil::random_graphon(2 + static_cast<int>(rng() % 2), rng);
        CHECK(jensen_check(complete_graph(3), {2}, 2, w).ok);
    }
}

TEST_CASE("gradient on the edge graph matches the closed form") {
    std::mt19937_64 rng(412);
    StepGraphon w = testutil::random_graphon(2, rng);
    auto g = density_gradient(complete_graph(2), w);
    CHECK(g[0][0] == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(g[0][1] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(g[1][0] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(g[1][1] == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("gradient of an edgeless graph vanishes") {
    Graph empty(4);
    std::mt19937_64 rng(413);
    StepGraphon w = testutil::random_graphon(3, rng);
    auto g = density_gradient(empty, w);
    for (const auto& row : g)
        for (double x : row) CHECK(x == 0.0);
    CHECK(hom_density(empty, w) == 1.0);
}

TEST_CASE("gradient matches central finite differences") {
    std::mt19937_64 rng(414);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);  // up to 5 vertices
        Graph h = testutil::random_graph(n, 0.6, rng);
        int m = 2 + static_cast<int>(rng() % 3);  // up to 4 blocks
        StepGraphon w = testutil::random_graphon(m, rng);
        // keep entries off the box walls so the symmetric perturbation stays inside
        for (auto& row : w.values)
            for (double& x : row) x = 0.05 + 0.9 * x;
        auto analytic = density_gradient(h, w);
        auto numeric = fd_gradient(h, w, 1e-6);
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b) {
                double scale = std::max({1.0, std::fabs(analytic[a][b]), std::fabs(numeric[a][b])});
                CAPTURE(trial);
                CHECK(std::fabs(analytic[a][b] - numeric[a][b]) / scale <= 1e-6);
            }
    }
}

TEST_CASE("graphon io validates and symmetrizes") {
    json j;
    j["m"] = 2;
    j["values"] = {{0.5, 0.30000000000001}, {0.3, 0.25}};
    StepGraphon w = graphon_from_json(j);
    CHECK(w.values[0][1] == w.values[1][0]);

    json bad = j;
    bad["values"] = {{0.5, 0.9}, {0.3, 0.25}};
    CHECK_THROWS_AS(graphon_from_json(bad), input_error);

    json out = graphon_to_json(w);
    StepGraphon back = graphon_from_json(out);
    CHECK(back.values == w.values);

    CHECK_THROWS_AS(StepGraphon::constant(2, 1.5), input_error);
}

TEST_CASE("capacity guard on the map count") {
    Graph big = complete_graph(12);
    StepGraphon w = StepGraphon::constant(6, 0.5);
    CHECK_THROWS_AS(hom_density(big, w, 1000000ULL), capacity_error);
}
