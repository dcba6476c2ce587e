#include "hypercenter/diametric.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hypercenter {

namespace {

// Smallest-id vertex attaining the maximum of a distance field.
std::pair<Vertex, Dist> min_id_farthest(const DistanceField& f) {
    Dist ecc = 0;
    Vertex who = 0;
    for (Vertex v = 0; v < f.dist.size(); ++v) {
        if (f.dist[v] > ecc) {
            ecc = f.dist[v];
            who = v;
        }
    }
    return {who, ecc};
}

}  // namespace

PairSearch locally_diametrical_pair(const Graph& g, Vertex start) {
    const Vertex n = g.num_vertices();
    if (start >= n) throw std::invalid_argument("start vertex out of range");

    DistanceField f0 = bfs(g, start);
    int bfs_count = 1;
    Vertex a = min_id_farthest(f0).first;

    DistanceField fa = bfs(g, a);
    ++bfs_count;
    auto [b, dab] = min_id_farthest(fa);

    // Eccentricities along the walk never decrease; equality means the
    // previous pair already attains both eccentricities.
    for (Vertex iter = 0; iter <= n; ++iter) {
        DistanceField fb = bfs(g, b);
        ++bfs_count;
        auto [c, dbc] = min_id_farthest(fb);
        if (dbc == dab) {
            PairSearch res;
            res.pair = {a, b, dab, bfs_count};
            res.from_u = std::move(fa);
            res.from_v = std::move(fb);
            return res;
        }
        a = b;
        fa = std::move(fb);
        b = c;
        dab = dbc;
    }
    throw std::logic_error("farthest-pair iteration failed to stabilize within n rounds");
}

CenterSolution one_center(const Graph& g, Vertex start) {
    PairSearch ps = locally_diametrical_pair(g, start);
    const Dist d = ps.pair.distance;
    const Dist t_lo = d / 2;
    const Dist t_hi = d - t_lo;

    CenterSolution sol;
    sol.p = 1;
    sol.kappa = d;
    sol.lower_bound = (d + 1) / 2;
    sol.bfs_total = ps.pair.bfs_count;

    Vertex c_lo = point_along(ps.from_u, ps.pair.v, t_lo);
    auto [r_lo, w_lo] = farthest_set(g, c_lo);
    ++sol.bfs_total;
    sol.centers = {c_lo};
    sol.radius = r_lo;
    sol.witness = w_lo.front();

    if (t_hi != t_lo) {
        Vertex c_hi = point_along(ps.from_u, ps.pair.v, t_hi);
        auto [r_hi, w_hi] = farthest_set(g, c_hi);
        ++sol.bfs_total;
        if (r_hi < r_lo) {
            sol.centers = {c_hi};
            sol.radius = r_hi;
            sol.witness = w_hi.front();
        }
    }
    return sol;
}

CenterSolution two_center(const Graph& g, Vertex start) {
    const Vertex n = g.num_vertices();
    if (n < 2) throw std::invalid_argument("two_center needs at least two vertices");

    PairSearch ps = locally_diametrical_pair(g, start);
    const Vertex x = ps.pair.u, y = ps.pair.v;

    // Third packing member: maximize the distance to the nearer pair member.
    Vertex z = 0;
    Dist best = -1;
    for (Vertex v = 0; v < n; ++v) {
        Dist m = std::min(ps.from_u.dist[v], ps.from_v.dist[v]);
        if (m > best) {
            best = m;
            z = v;
        }
    }
    const Dist kappa = std::min({ps.pair.distance, ps.from_u.dist[z], ps.from_v.dist[z]});

    CenterSolution sol;
    sol.p = 2;
    sol.kappa = kappa;
    sol.lower_bound = (kappa + 1) / 2;
    sol.bfs_total = ps.pair.bfs_count;
    sol.radius = -1;

    const Dist t_lo = kappa / 2;
    const Dist t_hi = kappa - t_lo;
    const Dist ts[2] = {t_lo, t_hi};
    const int variants = (t_lo == t_hi) ? 1 : 2;
    for (int i = 0; i < variants; ++i) {
        for (int j = 0; j < variants; ++j) {
            Vertex c1 = point_along(ps.from_u, y, ts[i]);
            Vertex c2 = point_along(ps.from_v, x, ts[j]);
            Vertex centers[2] = {c1, c2};
            auto [r, w] = evaluate_radius(g, centers);
            ++sol.bfs_total;
            if (sol.radius < 0 || r < sol.radius) {
                sol.radius = r;
                sol.witness = w;
                if (c1 == c2)
                    sol.centers = {c1};
                else
                    sol.centers = {c1, c2};
            }
        }
    }
    return sol;
}

}  // namespace hypercenter
