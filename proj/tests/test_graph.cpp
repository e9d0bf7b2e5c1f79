#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "forge/errors.hpp"
#include "forge/generators.hpp"
#include "forge/graph.hpp"
#include "forge/graph_io.hpp"
#include "test_util.hpp"

using namespace forge;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), input_error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), input_error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), input_error);
    Graph g(4, {{2, 1}, {0, 1}});
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(g.edges()[0] == std::make_pair(0, 1));
}

TEST_CASE("is_independent") {
    Graph k3 = complete_graph(3);
    CHECK_FALSE(is_independent(k3, {0, 1}));
    Graph c4 = cycle_graph(4);
    CHECK(is_independent(c4, {0, 2}));
    CHECK(is_independent(c4, {}));
    CHECK_THROWS_AS(is_independent(c4, {5}), input_error);
}

TEST_CASE("vertex connectivity on standard graphs") {
    CHECK(vertex_connectivity(complete_bipartite(3, 3)) == 3);
    CHECK(vertex_connectivity(path_graph(4)) == 1);
    CHECK(vertex_connectivity(complete_graph(5)) == 4);
    CHECK(vertex_connectivity(cycle_graph(6)) == 2);
    Graph two_parts(5, {{0, 1}, {2, 3}, {3, 4}});
    CHECK(vertex_connectivity(two_parts) == 0);
    CHECK_THROWS_AS(vertex_connectivity(Graph(1)), input_error);

    for (int a = 2; a <= 5; ++a)
        for (int b = 2; b <= 5; ++b)
            CHECK(vertex_connectivity(complete_bipartite(a, b)) == std::min(a, b));
}

TEST_CASE("petersen connectivity agrees with the exhaustive oracle") {
    Graph p = petersen_graph();
    int oracle = testutil::brute_vertex_connectivity(p);
    CHECK(oracle == 3);
    CHECK(vertex_connectivity(p) == oracle);
}

TEST_CASE("flow connectivity equals brute force on random graphs") {
    std::mt19937_64 rng(20240517);
    std::uniform_real_distribution<double> dens(0.15, 0.8);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);  // up to 10 vertices
        Graph g = testutil::random_graph(n, dens(rng), rng);
        CAPTURE(trial);
        CHECK(vertex_connectivity(g) == testutil::brute_vertex_connectivity(g));
    }
}

TEST_CASE("chromatic number basics") {
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
    CHECK(chromatic_number(path_graph(1)) == 1);
    CHECK(chromatic_number(petersen_graph()) == 3);
    CHECK_THROWS_AS(chromatic_number(complete_graph(41)), capacity_error);
    CHECK(chromatic_number(complete_graph(41), 64) == 41);
}

TEST_CASE("chromatic number of the line graph of the 3-cube") {
    Graph q3 = hypercube_graph(3);
    Graph lg = line_graph(q3);
    CHECK(lg.vertex_count() == 12);
    // every cube vertex has three incident edges: a triangle in the line graph
    CHECK(max_clique_size(lg) >= 3);
    // dimension classes 3-color the line graph: edges across the same
    // dimension never share an endpoint
    std::vector<int> dim_color;
    for (auto [u, v] : q3.edges()) dim_color.push_back(__builtin_ctz(u ^ v));
    for (auto [e, f] : lg.edges()) CHECK(dim_color[e] != dim_color[f]);
    CHECK(chromatic_number(lg) == 3);
}

TEST_CASE("chromatic number is monotone under subgraphs") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7);
        Graph g = testutil::random_graph(n, 0.5, rng);
        // random subgraph: drop some edges
        std::vector<std::pair<int, int>> kept;
        for (auto e : g.edges())
            if (rng() % 3) kept.push_back(e);
        Graph h(n, kept);
        CHECK(chromatic_number(h) <= chromatic_number(g));
    }
}

TEST_CASE("girth basics") {
    CHECK(girth(cycle_graph(5)) == 5);
    CHECK_FALSE(girth(path_graph(6)).has_value());
    CHECK(girth(petersen_graph()) == 5);
    CHECK(girth(complete_bipartite(2, 2)) == 4);
    CHECK_FALSE(girth(Graph(3)).has_value());
}

TEST_CASE("bfs girth equals cycle enumeration on random graphs") {
    std::mt19937_64 rng(991);
    std::uniform_real_distribution<double> dens(0.1, 0.6);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 10);  // up to 12 vertices
        Graph g = testutil::random_graph(n, dens(rng), rng);
        int oracle = testutil::brute_girth(g);
        auto fast = girth(g);
        CAPTURE(trial);
        if (oracle == 0)
            CHECK_FALSE(fast.has_value());
        else
            CHECK(fast == oracle);
    }
}

TEST_CASE("isomorphism") {
    CHECK(are_isomorphic(complete_graph(3), cycle_graph(3)));
    CHECK_FALSE(are_isomorphic(complete_bipartite(1, 3), path_graph(4)));
    // same degree sequence, different structure: C6 vs two triangles
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(are_isomorphic(cycle_graph(6), two_triangles));
    // relabelled petersen
    std::mt19937_64 rng(5);
    Graph p = petersen_graph();
    std::vector<int> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : p.edges()) edges.emplace_back(perm[u], perm[v]);
    CHECK(are_isomorphic(p, Graph(10, edges)));
    CHECK_THROWS_AS(are_isomorphic(testutil::random_graph(70, 0.5, rng),
                                   testutil::random_graph(70, 0.5, rng)),
                    capacity_error);
}

TEST_CASE("graph json round trip and dot") {
    Graph g = petersen_graph();
    g.set_labels(std::vector<std::string>(10, "x"));
    json j = graph_to_json(g);
    Graph back = graph_from_json(j);
    CHECK(back == g);
    CHECK(back.labels() == g.labels());
    CHECK(graph_to_dot(g).find("v0 -- v1") != std::string::npos);
    CHECK_THROWS_AS(graph_from_json(json::parse("{\"n\": 2}")), input_error);
}

TEST_CASE("named generators") {
    CHECK(make_named_graph("k4").edge_count() == 6);
    CHECK(make_named_graph("c7").vertex_count() == 7);
    CHECK(make_named_graph("p3").edge_count() == 2);
    CHECK(make_named_graph("k3,4").edge_count() == 12);
    CHECK(make_named_graph("petersen").vertex_count() == 10);
    CHECK(make_named_graph("q3").edge_count() == 12);
    CHECK_THROWS_AS(make_named_graph("z9"), input_error);
}
