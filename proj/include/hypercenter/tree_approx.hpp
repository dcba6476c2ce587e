#pragma once

#include <cstdint>
#include <vector>

#include "hypercenter/graph.hpp"

namespace hypercenter {

using Cluster = std::uint32_t;
inline constexpr Cluster kNoCluster = static_cast<Cluster>(-1);

// Layering partition of a graph: clusters are the connected components of
// each BFS layer within the subgraph induced by vertices at that distance or
// farther from the root. Every cluster's members share one layer, and all
// their neighbors one layer up share a single parent cluster, so the
// clusters form a rooted tree whose hop distance approximates the graph
// metric. Cluster ids are ordered by (depth, smallest member id); the root
// cluster is {root_vertex} with id 0.
struct ApproxTree {
    Vertex root_vertex = 0;
    Cluster cluster_count = 0;
    std::vector<Cluster> cluster_parent;      // kNoCluster for the root
    std::vector<Dist> cluster_depth;
    std::vector<Cluster> vertex_cluster;      // indexed by graph vertex
    std::vector<Vertex> cluster_min_vertex;   // representative member
    std::vector<std::uint32_t> cluster_size;
};

// Rooted tree with unit edges in parent-array form plus a children CSR.
struct RootedTree {
    std::uint32_t node_count = 0;
    std::uint32_t root = 0;
    std::vector<std::uint32_t> parent;  // parent[root] == UINT32_MAX
    std::vector<Dist> depth;
    std::vector<std::uint64_t> child_offsets;
    std::vector<std::uint32_t> children;

    static RootedTree from_parents(std::uint32_t root,
                                   const std::vector<std::uint32_t>& parent);
};

inline constexpr std::uint32_t kNoNode = static_cast<std::uint32_t>(-1);

ApproxTree layering_partition(const Graph& g, Vertex root = 0);

// Hop distance between the clusters of u and v (depth-ascending LCA walk).
Dist tree_distance(const ApproxTree& t, Vertex u, Vertex v);

// The cluster tree as a plain rooted tree (nodes are cluster ids).
RootedTree cluster_tree(const ApproxTree& t);

// Maximum set of tree nodes with pairwise distance >= k, greedily: nodes in
// decreasing depth (ties: smaller id) are selected whenever their distance to
// the nearest selected node is still >= k, tracked by truncated radius-(k-1)
// BFS relaxations. Deepest-first selection is exact on trees. Returned in
// selection order. k <= 1 selects everything.
std::vector<std::uint32_t> tree_dispersion(const RootedTree& t, Dist k);

// Largest k such that at least q nodes are pairwise >= k apart, by binary
// search over k in [0, 2*max_depth]. Requires 2 <= q <= node_count.
Dist tree_p_diameter(const RootedTree& t, std::uint32_t q);

// Exact vertex p-center on a rooted tree: the radius comes from packing
// duality (ceil of half the (p+1)-dispersion threshold), the centers from the
// deepest-first covering greedy at that radius. Returns (radius, centers).
std::pair<Dist, std::vector<std::uint32_t>> tree_vertex_p_center(const RootedTree& t, int p);

// A (p+1)-packing of G seeded from the cluster tree: runs the dispersion
// greedy at threshold tree_p_diameter(clusters, p+1) and maps each selected
// cluster to its smallest member. When the tree has fewer than p+1 clusters
// the threshold is zero and clusters contribute additional members (ascending
// ids) until p+1 vertices are collected. Requires p >= 1 and p+1 <= n.
std::vector<Vertex> initial_packing(const Graph& g, int p, Vertex root = 0);

}  // namespace hypercenter
