#include "hypercenter/tree_approx.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "hypercenter/errors.hpp"

namespace hypercenter {

namespace {

struct Dsu {
    std::vector<std::uint32_t> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

ApproxTree layering_partition(const Graph& g, Vertex root) {
    const Vertex n = g.num_vertices();
    if (root >= n) throw std::invalid_argument("layering root out of range");
    DistanceField f = bfs(g, root);
    Dist max_layer = 0;
    for (Dist d : f.dist) max_layer = std::max(max_layer, d);

    std::vector<std::vector<Vertex>> layer(static_cast<std::size_t>(max_layer) + 1);
    for (Vertex v = 0; v < n; ++v) layer[f.dist[v]].push_back(v);  // ascending ids

    // Activate layers deepest first; two same-layer vertices fall into one
    // cluster exactly when they connect through vertices at least that deep.
    Dsu dsu(n);
    ApproxTree t;
    t.root_vertex = root;
    t.vertex_cluster.assign(n, kNoCluster);
    std::vector<std::pair<Dist, Vertex>> groups;  // (depth, min member) per cluster
    std::vector<std::vector<Vertex>> group_members;

    std::vector<Vertex> rep_of_root(n, kNoVertex);  // dsu root -> group index + 1 marker
    std::vector<std::uint32_t> scratch;
    for (Dist depth = max_layer; depth >= 0; --depth) {
        for (Vertex v : layer[depth])
            for (Vertex w : g.neighbors(v))
                if (f.dist[w] >= depth) dsu.unite(v, w);
        scratch.clear();
        for (Vertex v : layer[depth]) {
            std::uint32_t r = dsu.find(v);
            if (rep_of_root[r] == kNoVertex) {
                rep_of_root[r] = static_cast<Vertex>(groups.size());
                groups.emplace_back(depth, v);
                group_members.emplace_back();
                scratch.push_back(r);
            }
            group_members[rep_of_root[r]].push_back(v);
        }
        for (std::uint32_t r : scratch) rep_of_root[r] = kNoVertex;
    }

    // Number clusters by (depth, min member id); members were collected in
    // ascending id order within each group.
    const Cluster cc = static_cast<Cluster>(groups.size());
    std::vector<Cluster> order(cc);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Cluster a, Cluster b) {
        return groups[a] < groups[b];
    });
    t.cluster_count = cc;
    t.cluster_parent.assign(cc, kNoCluster);
    t.cluster_depth.resize(cc);
    t.cluster_min_vertex.resize(cc);
    t.cluster_size.resize(cc);
    for (Cluster rank = 0; rank < cc; ++rank) {
        Cluster old = order[rank];
        t.cluster_depth[rank] = groups[old].first;
        t.cluster_min_vertex[rank] = groups[old].second;
        t.cluster_size[rank] = static_cast<std::uint32_t>(group_members[old].size());
        for (Vertex v : group_members[old]) t.vertex_cluster[v] = rank;
    }
    for (Cluster c = 1; c < cc; ++c) {
        Vertex rep = t.cluster_min_vertex[c];
        t.cluster_parent[c] = t.vertex_cluster[f.parent[rep]];
    }
    return t;
}

Dist tree_distance(const ApproxTree& t, Vertex u, Vertex v) {
    Cluster a = t.vertex_cluster.at(u);
    Cluster b = t.vertex_cluster.at(v);
    Dist steps = 0;
    while (a != b) {
        if (t.cluster_depth[a] >= t.cluster_depth[b])
            a = t.cluster_parent[a];
        else
            b = t.cluster_parent[b];
        ++steps;
    }
    return steps;
}

RootedTree RootedTree::from_parents(std::uint32_t root,
                                    const std::vector<std::uint32_t>& parent) {
    RootedTree t;
    t.node_count = static_cast<std::uint32_t>(parent.size());
    t.root = root;
    t.parent = parent;
    if (root >= t.node_count || parent[root] != kNoNode)
        throw std::invalid_argument("root must carry the no-parent sentinel");
    std::vector<std::uint32_t> deg(t.node_count, 0);
    for (std::uint32_t v = 0; v < t.node_count; ++v)
        if (v != root) {
            if (parent[v] >= t.node_count) throw std::invalid_argument("parent out of range");
            ++deg[parent[v]];
        }
    t.child_offsets.assign(t.node_count + 1, 0);
    for (std::uint32_t v = 0; v < t.node_count; ++v)
        t.child_offsets[v + 1] = t.child_offsets[v] + deg[v];
    t.children.resize(t.node_count - 1);
    std::vector<std::uint64_t> fill(t.child_offsets.begin(), t.child_offsets.end() - 1);
    for (std::uint32_t v = 0; v < t.node_count; ++v)
        if (v != root) t.children[fill[parent[v]]++] = v;

    // Depths top-down; fails on cycles, which a parent array could smuggle in.
    t.depth.assign(t.node_count, -1);
    t.depth[root] = 0;
    std::vector<std::uint32_t> queue{root};
    queue.reserve(t.node_count);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t u = queue[head];
        for (std::uint64_t i = t.child_offsets[u]; i < t.child_offsets[u + 1]; ++i) {
            std::uint32_t w = t.children[i];
            t.depth[w] = t.depth[u] + 1;
            queue.push_back(w);
        }
    }
    if (queue.size() != t.node_count)
        throw std::invalid_argument("parent array does not describe one tree");
    return t;
}

RootedTree cluster_tree(const ApproxTree& t) {
    std::vector<std::uint32_t> parent(t.cluster_count);
    for (Cluster c = 0; c < t.cluster_count; ++c)
        parent[c] = (t.cluster_parent[c] == kNoCluster) ? kNoNode : t.cluster_parent[c];
    return RootedTree::from_parents(0, parent);
}

namespace {

// Relax dist-to-selected within radius limit of v, improving entries only.
void relax_from(const RootedTree& t, std::uint32_t v, Dist limit, std::vector<Dist>& dist,
                std::vector<std::pair<std::uint32_t, Dist>>& queue) {
    queue.clear();
    dist[v] = 0;
    queue.emplace_back(v, 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t u = queue[head].first;
        const Dist du = queue[head].second;
        if (du >= limit) continue;
        auto push = [&](std::uint32_t w) {
            if (du + 1 < dist[w]) {
                dist[w] = du + 1;
                queue.emplace_back(w, du + 1);
            }
        };
        if (t.parent[u] != kNoNode) push(t.parent[u]);
        for (std::uint64_t i = t.child_offsets[u]; i < t.child_offsets[u + 1]; ++i)
            push(t.children[i]);
    }
}

}  // namespace

std::vector<std::uint32_t> tree_dispersion(const RootedTree& t, Dist k) {
    const std::uint32_t n = t.node_count;
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return t.depth[a] > t.depth[b];
    });

    constexpr Dist kFar = std::numeric_limits<Dist>::max();
    std::vector<Dist> dist(n, kFar);
    std::vector<std::pair<std::uint32_t, Dist>> queue;
    std::vector<std::uint32_t> selected;
    for (std::uint32_t v : order) {
        if (dist[v] >= k) {
            selected.push_back(v);
            relax_from(t, v, k - 1, dist, queue);
        }
    }
    return selected;
}

Dist tree_p_diameter(const RootedTree& t, std::uint32_t q) {
    if (q < 2 || q > t.node_count) throw std::invalid_argument("q out of range");
    Dist max_depth = 0;
    for (Dist d : t.depth) max_depth = std::max(max_depth, d);
    Dist lo = 0;                  // everything qualifies
    Dist hi = 2 * max_depth + 1;  // beyond any pairwise distance
    while (lo + 1 < hi) {
        Dist mid = lo + (hi - lo) / 2;
        if (tree_dispersion(t, mid).size() >= q)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::pair<Dist, std::vector<std::uint32_t>> tree_vertex_p_center(const RootedTree& t, int p) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    const std::uint32_t n = t.node_count;
    if (static_cast<std::uint32_t>(p) >= n) {
        std::vector<std::uint32_t> all(n);
        std::iota(all.begin(), all.end(), 0);
        return {0, all};
    }
    Dist spread = tree_p_diameter(t, static_cast<std::uint32_t>(p) + 1);
    Dist radius = (spread + 1) / 2;

    // Deepest-first covering: an uncovered node frets exactly when the walk
    // reaches it, and the best place for its center is `radius` steps up.
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return t.depth[a] > t.depth[b];
    });
    constexpr Dist kFar = std::numeric_limits<Dist>::max();
    std::vector<Dist> dist(n, kFar);
    std::vector<std::pair<std::uint32_t, Dist>> queue;
    std::vector<std::uint32_t> centers;
    for (std::uint32_t v : order) {
        if (dist[v] <= radius) continue;
        std::uint32_t c = v;
        for (Dist up = 0; up < radius && t.parent[c] != kNoNode; ++up) c = t.parent[c];
        centers.push_back(c);
        relax_from(t, c, radius, dist, queue);
    }
    assert(static_cast<int>(centers.size()) <= p);
    return {radius, centers};
}

std::vector<Vertex> initial_packing(const Graph& g, int p, Vertex root) {
    const Vertex n = g.num_vertices();
    if (p < 1) throw std::invalid_argument("p must be positive");
    const std::uint32_t need = static_cast<std::uint32_t>(p) + 1;
    if (need > n) throw std::invalid_argument("packing larger than the graph");

    ApproxTree at = layering_partition(g, root);
    RootedTree ct = cluster_tree(at);

    if (at.cluster_count >= need) {
        Dist threshold = tree_p_diameter(ct, need);
        if (threshold >= 1) {
            std::vector<std::uint32_t> picked = tree_dispersion(ct, threshold);
            std::vector<Vertex> out;
            out.reserve(need);
            for (std::uint32_t c : picked) {
                out.push_back(at.cluster_min_vertex[c]);
                if (out.size() == need) break;
            }
            return out;
        }
    }
    // Degenerate threshold: fewer clusters than members wanted. Walk clusters
    // in dispersion order and let each contribute members in ascending id
    // order until the packing is full.
    std::vector<std::vector<Vertex>> members(at.cluster_count);
    for (Vertex v = 0; v < n; ++v) members[at.vertex_cluster[v]].push_back(v);
    std::vector<Vertex> out;
    out.reserve(need);
    for (std::uint32_t c : tree_dispersion(ct, 0)) {
        for (Vertex v : members[c]) {
            out.push_back(v);
            if (out.size() == need) return out;
        }
    }
    return out;  // unreachable given need <= n
}

}  // namespace hypercenter
