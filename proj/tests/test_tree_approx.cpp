#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hypercenter/graph.hpp"
#include "hypercenter/tree_approx.hpp"
#include "test_util.hpp"

using namespace hypercenter;

namespace {

// Independent layering reference: same-depth vertices share a cluster exactly
// when they connect inside the subgraph induced by vertices at least that
// deep. Components found by plain BFS over the raw edge list.
struct RefLayering {
    std::vector<Dist> depth;
    std::vector<int> comp;  // cluster key per vertex
};

RefLayering reference_layering(const testutil::EdgeList& e, Vertex root) {
    const Vertex n = e.n;
    auto d = testutil::floyd_warshall(n, e.edges);
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [a, b] : e.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    RefLayering ref;
    ref.depth.resize(n);
    Dist maxd = 0;
    for (Vertex v = 0; v < n; ++v) {
        ref.depth[v] = d[root][v];
        maxd = std::max(maxd, ref.depth[v]);
    }
    ref.comp.assign(n, -1);
    int next = 0;
    for (Dist layer = 0; layer <= maxd; ++layer) {
        // Components of the subgraph induced by depth >= layer; a cluster is
        // such a component cut down to the layer itself.
        std::vector<int> mark(n, -1);
        for (Vertex s = 0; s < n; ++s) {
            if (ref.depth[s] != layer || ref.comp[s] != -1) continue;
            std::vector<Vertex> queue{s};
            mark[s] = next;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                Vertex u = queue[head];
                for (Vertex w : adj[u]) {
                    if (ref.depth[w] >= layer && mark[w] == -1) {
                        mark[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            for (Vertex v = 0; v < n; ++v)
                if (mark[v] == next && ref.depth[v] == layer) ref.comp[v] = next;
            ++next;
        }
    }
    return ref;
}

}  // namespace

TEST_CASE("layering a path gives singleton clusters in depth order") {
    Graph p7 = Graph::from_edges(7, testutil::path_edges(7));
    ApproxTree at = layering_partition(p7, 0);
    CHECK(at.cluster_count == 7);
    for (Cluster c = 0; c < 7; ++c) {
        CHECK(at.cluster_depth[c] == static_cast<Dist>(c));
        CHECK(at.cluster_min_vertex[c] == c);
        CHECK(at.cluster_size[c] == 1);
        CHECK(at.cluster_parent[c] == (c == 0 ? kNoCluster : c - 1));
    }
    CHECK(tree_distance(at, 1, 5) == 4);
}

TEST_CASE("opposite cycle branches merge into one cluster") {
    Graph c4 = Graph::from_edges(4, testutil::cycle_edges(4));
    ApproxTree at = layering_partition(c4, 0);
    REQUIRE(at.cluster_count == 3);
    CHECK(at.vertex_cluster[1] == at.vertex_cluster[3]);
    CHECK(at.cluster_size[1] == 2);
    CHECK(at.cluster_parent[1] == 0);
    CHECK(at.cluster_parent[2] == 1);
    CHECK(tree_distance(at, 1, 3) == 0);
    CHECK(tree_distance(at, 0, 2) == 2);
}

TEST_CASE("on a tree the cluster tree reproduces the graph metric") {
    std::mt19937_64 rng(88);
    for (int it = 0; it < 10; ++it) {
        testutil::TreeInstance t = testutil::random_tree(3 + rng() % 26, rng);
        Graph g = testutil::build(t);
        Vertex root = static_cast<Vertex>(rng() % t.n);
        ApproxTree at = layering_partition(g, root);
        CHECK(at.cluster_count == t.n);
        auto d = testutil::floyd_warshall(t.n, t.edges);
        for (Vertex u = 0; u < t.n; ++u)
            for (Vertex v = 0; v < t.n; ++v) CHECK(tree_distance(at, u, v) == d[u][v]);
    }
}

TEST_CASE("layering partition matches the induced-subgraph reference") {
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 30; ++it) {
        Vertex n = 3 + static_cast<Vertex>(rng() % 38);
        testutil::EdgeList e = testutil::random_connected(n, rng() % 30, rng);
        Graph g = testutil::build(e);
        Vertex root = static_cast<Vertex>(rng() % n);
        ApproxTree at = layering_partition(g, root);
        RefLayering ref = reference_layering(e, root);

        std::vector<std::vector<Vertex>> adj(n);
        for (auto [a, b] : e.edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (Vertex u = 0; u < n; ++u) {
            CHECK(at.cluster_depth[at.vertex_cluster[u]] == ref.depth[u]);
            for (Vertex v = 0; v < n; ++v) {
                bool together = at.vertex_cluster[u] == at.vertex_cluster[v];
                bool ref_together = ref.comp[u] == ref.comp[v];
                CHECK(together == ref_together);
            }
        }
        // Parent clusters absorb every up-edge of every member.
        for (Vertex u = 0; u < n; ++u) {
            Cluster c = at.vertex_cluster[u];
            for (Vertex w : adj[u])
                if (ref.depth[w] == ref.depth[u] - 1)
                    CHECK(at.vertex_cluster[w] == at.cluster_parent[c]);
        }
        // Numbering is strictly increasing in (depth, min member).
        std::size_t total = 0;
        for (Cluster c = 0; c < at.cluster_count; ++c) {
            total += at.cluster_size[c];
            if (c > 0) {
                auto prev = std::pair(at.cluster_depth[c - 1], at.cluster_min_vertex[c - 1]);
                auto cur = std::pair(at.cluster_depth[c], at.cluster_min_vertex[c]);
                CHECK(prev < cur);
            }
        }
        CHECK(total == n);
    }
}

TEST_CASE("parent arrays are validated before building a rooted tree") {
    CHECK_THROWS_AS(RootedTree::from_parents(0, {0u}), std::invalid_argument);
    CHECK_THROWS_AS(RootedTree::from_parents(0, {kNoNode, 2u, 1u}), std::invalid_argument);
    CHECK_THROWS_AS(RootedTree::from_parents(0, {kNoNode, 5u}), std::invalid_argument);
    RootedTree t = RootedTree::from_parents(1, {1u, kNoNode, 1u, 0u});
    CHECK(t.depth == std::vector<Dist>{1, 0, 1, 2});
}

TEST_CASE("deepest-first dispersion on a path") {
    RootedTree t = RootedTree::from_parents(0, {kNoNode, 0u, 1u, 2u, 3u});
    CHECK(tree_dispersion(t, 2) == std::vector<std::uint32_t>{4, 2, 0});
    CHECK(tree_dispersion(t, 5) == std::vector<std::uint32_t>{4});
    CHECK(tree_dispersion(t, 1).size() == 5);
    CHECK(tree_p_diameter(t, 2) == 4);
    CHECK(tree_p_diameter(t, 3) == 2);
    CHECK(tree_p_diameter(t, 5) == 1);
    CHECK_THROWS_AS(tree_p_diameter(t, 1), std::invalid_argument);
    CHECK_THROWS_AS(tree_p_diameter(t, 6), std::invalid_argument);
}

TEST_CASE("dispersion sizes match the subset oracle on random trees") {
    std::mt19937_64 rng(606);
    for (int it = 0; it < 15; ++it) {
        testutil::TreeInstance ti = testutil::random_tree(2 + rng() % 11, rng);
        RootedTree t = RootedTree::from_parents(0, ti.parent);
        auto d = testutil::floyd_warshall(ti.n, ti.edges);
        Dist diam = 0;
        for (Vertex u = 0; u < ti.n; ++u)
            for (Vertex v = 0; v < ti.n; ++v) diam = std::max(diam, d[u][v]);
        for (Dist k = 0; k <= diam + 1; ++k) {
            std::vector<std::uint32_t> sel = tree_dispersion(t, k);
            for (std::size_t i = 0; i < sel.size(); ++i)
                for (std::size_t j = i + 1; j < sel.size(); ++j)
                    CHECK(d[sel[i]][sel[j]] >= k);
            CHECK(sel.size() == testutil::oracle_max_packing_size(d, k));
        }
    }
}

TEST_CASE("tree p-centers are exact") {
    RootedTree p5 = RootedTree::from_parents(0, {kNoNode, 0u, 1u, 2u, 3u});
    auto [r1, c1] = tree_vertex_p_center(p5, 1);
    CHECK(r1 == 2);
    CHECK(c1 == std::vector<std::uint32_t>{2});
    auto [r2, c2] = tree_vertex_p_center(p5, 2);
    CHECK(r2 == 1);
    CHECK(c2.size() == 2);
    auto [r9, c9] = tree_vertex_p_center(p5, 9);
    CHECK(r9 == 0);
    CHECK(c9.size() == 5);

    std::mt19937_64 rng(9090);
    for (int it = 0; it < 15; ++it) {
        testutil::TreeInstance ti = testutil::random_tree(2 + rng() % 11, rng);
        RootedTree t = RootedTree::from_parents(0, ti.parent);
        auto d = testutil::floyd_warshall(ti.n, ti.edges);
        for (int p = 1; p <= 3; ++p) {
            auto [radius, centers] = tree_vertex_p_center(t, p);
            CHECK(radius == testutil::oracle_pcenter_radius(d, std::min<int>(p, ti.n)));
            CHECK(radius == testutil::oracle_tree_pcenter_radius(ti, d, p));
            CHECK(static_cast<int>(centers.size()) <= std::max<int>(p, 1));
            std::vector<Vertex> as_vertices(centers.begin(), centers.end());
            CHECK(testutil::cover_radius(d, as_vertices) <= radius);
        }
    }
}

TEST_CASE("initial packings spread over the cluster tree") {
    Graph p7 = Graph::from_edges(7, testutil::path_edges(7));
    CHECK(initial_packing(p7, 2, 0) == std::vector<Vertex>{6, 3, 0});
    CHECK_THROWS_AS(initial_packing(p7, 7, 0), std::invalid_argument);

    Graph k5 = Graph::from_edges(
        5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    // Two clusters only ({0} and {1,2,3,4}), so the threshold degenerates and
    // the deeper cluster fills the packing in ascending id order.
    std::vector<Vertex> pk = initial_packing(k5, 2, 0);
    REQUIRE(pk.size() == 3);
    std::sort(pk.begin(), pk.end());
    CHECK(pk == std::vector<Vertex>{1, 2, 3});

    std::mt19937_64 rng(511);
    for (int it = 0; it < 20; ++it) {
        Vertex n = 4 + static_cast<Vertex>(rng() % 30);
        testutil::EdgeList e = testutil::random_connected(n, rng() % 18, rng);
        Graph g = testutil::build(e);
        int p = 1 + static_cast<int>(rng() % 3);
        if (static_cast<Vertex>(p) + 1 > n) continue;
        std::vector<Vertex> pack = initial_packing(g, p, static_cast<Vertex>(rng() % n));
        CHECK(pack.size() == static_cast<std::size_t>(p) + 1);
        std::vector<Vertex> dedup = pack;
        std::sort(dedup.begin(), dedup.end());
        dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
        CHECK(dedup.size() == pack.size());
    }
}
