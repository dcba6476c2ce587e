#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "hypercenter/graph.hpp"

// Seeded generators and exhaustive oracles. Deliberately independent of the
// library's code paths: distances come from Floyd-Warshall over the raw edge
// list, optima from subset enumeration or the classic tree-cover greedy.
namespace testutil {

using hypercenter::Dist;
using hypercenter::Graph;
using hypercenter::Vertex;

constexpr Dist kUnreached = 1 << 28;  // summed pairs stay below Dist overflow

struct EdgeList {
    Vertex n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
};

struct TreeInstance {
    Vertex n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> parent;  // parent[0] == kNoVertex, parent[v] < v
    std::vector<Dist> depth;     // rooted at vertex 0
};

inline TreeInstance random_tree(Vertex n, std::mt19937_64& rng) {
    TreeInstance t;
    t.n = n;
    t.parent.assign(n, hypercenter::kNoVertex);
    t.depth.assign(n, 0);
    for (Vertex v = 1; v < n; ++v) {
        Vertex p = static_cast<Vertex>(rng() % v);
        t.parent[v] = p;
        t.depth[v] = t.depth[p] + 1;
        t.edges.emplace_back(p, v);
    }
    return t;
}

// Random spanning tree plus up to `extra` distinct chords.
inline EdgeList random_connected(Vertex n, std::size_t extra, std::mt19937_64& rng) {
    EdgeList e;
    e.n = n;
    std::vector<std::vector<char>> have(n, std::vector<char>(n, 0));
    for (Vertex v = 1; v < n; ++v) {
        Vertex p = static_cast<Vertex>(rng() % v);
        e.edges.emplace_back(p, v);
        have[p][v] = have[v][p] = 1;
    }
    std::size_t added = 0;
    for (std::size_t tries = 0; tries < 4 * extra && added < extra; ++tries) {
        Vertex a = static_cast<Vertex>(rng() % n);
        Vertex b = static_cast<Vertex>(rng() % n);
        if (a == b || have[a][b]) continue;
        have[a][b] = have[b][a] = 1;
        e.edges.emplace_back(std::min(a, b), std::max(a, b));
        ++added;
    }
    return e;
}

inline std::vector<std::pair<Vertex, Vertex>> path_edges(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
    return e;
}

inline std::vector<std::pair<Vertex, Vertex>> cycle_edges(Vertex n) {
    auto e = path_edges(n);
    e.emplace_back(n - 1, 0);
    return e;
}

inline std::vector<std::vector<Dist>> floyd_warshall(
    Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<std::vector<Dist>> d(n, std::vector<Dist>(n, kUnreached));
    for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [a, b] : edges) d[a][b] = d[b][a] = 1;
    for (Vertex k = 0; k < n; ++k)
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline Dist cover_radius(const std::vector<std::vector<Dist>>& d,
                         const std::vector<Vertex>& centers) {
    const Vertex n = static_cast<Vertex>(d.size());
    Dist r = 0;
    for (Vertex v = 0; v < n; ++v) {
        Dist nearest = kUnreached;
        for (Vertex c : centers) nearest = std::min(nearest, d[c][v]);
        r = std::max(r, nearest);
    }
    return r;
}

// Exact p-center radius by subset enumeration.
inline Dist oracle_pcenter_radius(const std::vector<std::vector<Dist>>& d, int p) {
    const Vertex n = static_cast<Vertex>(d.size());
    Dist best = kUnreached;
    auto rec = [&](auto&& self, Vertex start, int depth, std::vector<Dist> mind) -> void {
        if (depth == p) {
            Dist r = 0;
            for (Vertex v = 0; v < n; ++v) r = std::max(r, mind[v]);
            best = std::min(best, r);
            return;
        }
        for (Vertex c = start; c + static_cast<Vertex>(p - depth) <= n; ++c) {
            std::vector<Dist> next(n);
            for (Vertex v = 0; v < n; ++v) next[v] = std::min(mind[v], d[c][v]);
            self(self, c + 1, depth + 1, std::move(next));
        }
    };
    rec(rec, 0, 0, std::vector<Dist>(n, kUnreached));
    return best;
}

// Exact q-dispersion: max over q-subsets of the minimum pairwise distance.
inline Dist oracle_dispersion(const std::vector<std::vector<Dist>>& d, int q) {
    const Vertex n = static_cast<Vertex>(d.size());
    Dist best = -1;
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, Vertex start, Dist curmin) -> void {
        if (static_cast<int>(cur.size()) == q) {
            best = std::max(best, curmin);
            return;
        }
        for (Vertex v = start; v + static_cast<Vertex>(q - cur.size()) <= n; ++v) {
            Dist nm = curmin;
            for (Vertex u : cur) nm = std::min(nm, d[u][v]);
            if (nm <= best) continue;
            cur.push_back(v);
            self(self, v + 1, nm);
            cur.pop_back();
        }
    };
    rec(rec, 0, kUnreached);
    return best;
}

// Largest set with pairwise distance >= k, by branch and bound.
inline std::size_t oracle_max_packing_size(const std::vector<std::vector<Dist>>& d, Dist k) {
    const Vertex n = static_cast<Vertex>(d.size());
    if (k <= 1) return n;
    std::size_t best = 0;
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, Vertex start) -> void {
        best = std::max(best, cur.size());
        for (Vertex v = start; v < n; ++v) {
            if (cur.size() + (n - v) <= best) return;
            bool ok = true;
            for (Vertex u : cur) ok = ok && d[u][v] >= k;
            if (!ok) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

// Greedy r-cover on a rooted tree: take the deepest uncovered vertex, place a
// center min(r, depth) steps up, repeat. Uses at most p centers iff a p-set
// of radius r exists (the classic exchange argument).
inline bool tree_cover_feasible(const TreeInstance& t, const std::vector<std::vector<Dist>>& d,
                                int p, Dist r) {
    std::vector<Vertex> by_depth(t.n);
    std::iota(by_depth.begin(), by_depth.end(), 0);
    std::stable_sort(by_depth.begin(), by_depth.end(),
                     [&](Vertex a, Vertex b) { return t.depth[a] > t.depth[b]; });
    std::vector<char> covered(t.n, 0);
    int used = 0;
    for (Vertex v : by_depth) {
        if (covered[v]) continue;
        Vertex c = v;
        const Dist up = std::min(r, t.depth[v]);
        for (Dist step = 0; step < up; ++step) c = t.parent[c];
        if (++used > p) return false;
        for (Vertex u = 0; u < t.n; ++u)
            if (d[c][u] <= r) covered[u] = 1;
    }
    return true;
}

inline Dist oracle_tree_pcenter_radius(const TreeInstance& t,
                                       const std::vector<std::vector<Dist>>& d, int p) {
    Dist lo = 0, hi = 0;
    for (Vertex v = 0; v < t.n; ++v)
        for (Vertex u = 0; u < t.n; ++u) hi = std::max(hi, d[v][u]);
    while (lo < hi) {
        Dist mid = lo + (hi - lo) / 2;
        if (tree_cover_feasible(t, d, p, mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

inline Graph build(const EdgeList& e) { return Graph::from_edges(e.n, e.edges); }
inline Graph build(const TreeInstance& t) { return Graph::from_edges(t.n, t.edges); }

}  // namespace testutil
