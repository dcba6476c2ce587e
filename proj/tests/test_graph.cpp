#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "hypercenter/errors.hpp"
#include "hypercenter/graph.hpp"
#include "test_util.hpp"

using namespace hypercenter;

TEST_CASE("from_edges rejects malformed input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(4, {{0, 1}, {2, 3}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(0, {}), InputError);
}

TEST_CASE("neighbors are sorted and degrees add up") {
    Graph g = Graph::from_edges(4, {{2, 0}, {0, 1}, {3, 0}, {1, 2}});
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 4);
    auto nb = g.neighbors(0);
    REQUIRE(nb.size() == 3);
    CHECK(nb[0] == 1);
    CHECK(nb[1] == 2);
    CHECK(nb[2] == 3);
    CHECK(g.degree(3) == 1);
}

TEST_CASE("edge list loader remaps labels in first-appearance order") {
    std::istringstream in(
        "# comment\n"
        "a b\n"
        "\n"
        "b c\n"
        "c a\n"
        "a a\n"
        "b a\n");
    LoadResult lr = load_edge_list(in);
    CHECK(lr.graph.num_vertices() == 3);
    CHECK(lr.graph.num_edges() == 3);
    REQUIRE(lr.labels.size() == 3);
    CHECK(lr.labels[0] == "a");
    CHECK(lr.labels[1] == "b");
    CHECK(lr.labels[2] == "c");
    CHECK(lr.self_loops_dropped == 1);
    CHECK(lr.duplicate_edges_dropped == 1);
    CHECK(lr.component_count == 1);
}

TEST_CASE("disconnected input errors unless the largest component is kept") {
    const char* text = "a b\nb c\nc a\nx y\n";
    {
        std::istringstream in(text);
        CHECK_THROWS_AS(load_edge_list(in), InputError);
    }
    std::istringstream in(text);
    LoadResult lr = load_edge_list(in, true);
    CHECK(lr.graph.num_vertices() == 3);
    CHECK(lr.labels == std::vector<std::string>{"a", "b", "c"});
    CHECK(lr.vertices_dropped == 2);
    CHECK(lr.edges_dropped == 1);
    CHECK(lr.component_count == 2);
}

TEST_CASE("loader rejects garbage lines and empty input") {
    {
        std::istringstream in("a\n");
        CHECK_THROWS_AS(load_edge_list(in), InputError);
    }
    {
        std::istringstream in("# nothing\n");
        CHECK_THROWS_AS(load_edge_list(in), InputError);
    }
}

TEST_CASE("bfs distances, parents and sources") {
    Graph p5 = Graph::from_edges(5, testutil::path_edges(5));
    DistanceField f = bfs(p5, 0);
    CHECK(f.source == 0);
    CHECK(f.dist == std::vector<Dist>{0, 1, 2, 3, 4});
    CHECK(f.parent[0] == kNoVertex);
    CHECK(f.parent[4] == 3);

    // Two equally near parents: the smaller id wins.
    Graph diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    DistanceField fd = bfs(diamond, 0);
    CHECK(fd.dist[3] == 2);
    CHECK(fd.parent[3] == 1);

    DistanceField fm = bfs_multi(p5, std::vector<Vertex>{0, 4});
    CHECK(fm.dist == std::vector<Dist>{0, 1, 2, 1, 0});
    CHECK(fm.parent[0] == kNoVertex);
    CHECK(fm.parent[4] == kNoVertex);
}

TEST_CASE("farthest_set lists every attaining vertex in ascending order") {
    Graph p5 = Graph::from_edges(5, testutil::path_edges(5));
    auto [ecc, who] = farthest_set(p5, 2);
    CHECK(ecc == 2);
    CHECK(who == std::vector<Vertex>{0, 4});
}

TEST_CASE("canonical geodesics and points along them") {
    Graph c4 = Graph::from_edges(4, testutil::cycle_edges(4));
    CHECK(geodesic(c4, 0, 2) == std::vector<Vertex>{0, 1, 2});

    Graph p5 = Graph::from_edges(5, testutil::path_edges(5));
    CHECK(point_along(p5, 0, 4, 0) == 0);
    CHECK(point_along(p5, 0, 4, 2) == 2);
    CHECK(point_along(p5, 0, 4, 4) == 4);
    CHECK_THROWS_AS(point_along(p5, 0, 4, 5), std::out_of_range);

    DistanceField f = bfs(p5, 0);
    CHECK(point_along(f, 4, 3) == 3);
}

TEST_CASE("evaluate_radius returns the smallest witness") {
    Graph p5 = Graph::from_edges(5, testutil::path_edges(5));
    auto [r1, w1] = evaluate_radius(p5, std::vector<Vertex>{2});
    CHECK(r1 == 2);
    CHECK(w1 == 0);
    auto [r2, w2] = evaluate_radius(p5, std::vector<Vertex>{0, 4});
    CHECK(r2 == 2);
    CHECK(w2 == 2);
}

TEST_CASE("all_pairs_distances agrees with Floyd-Warshall on random graphs") {
    std::mt19937_64 rng(12021);
    for (int it = 0; it < 25; ++it) {
        Vertex n = 2 + static_cast<Vertex>(rng() % 29);
        testutil::EdgeList e = testutil::random_connected(n, rng() % 20, rng);
        Graph g = testutil::build(e);
        auto lib = all_pairs_distances(g);
        auto ref = testutil::floyd_warshall(n, e.edges);
        REQUIRE(lib.size() == n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) CHECK(lib[u][v] == ref[u][v]);
    }
}

TEST_CASE("geodesic endpoints and step sizes hold on random graphs") {
    std::mt19937_64 rng(777);
    for (int it = 0; it < 10; ++it) {
        Vertex n = 4 + static_cast<Vertex>(rng() % 20);
        testutil::EdgeList e = testutil::random_connected(n, rng() % 12, rng);
        Graph g = testutil::build(e);
        auto ref = testutil::floyd_warshall(n, e.edges);
        Vertex u = static_cast<Vertex>(rng() % n);
        Vertex v = static_cast<Vertex>(rng() % n);
        auto path = geodesic(g, u, v);
        REQUIRE(static_cast<Dist>(path.size()) == ref[u][v] + 1);
        CHECK(path.front() == u);
        CHECK(path.back() == v);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            CHECK(ref[path[i]][path[i + 1]] == 1);
    }
}
