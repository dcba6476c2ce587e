#include "hypercenter/hyperbolicity.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <memory>
#include <random>
#include <unordered_map>

#include "hypercenter/errors.hpp"

namespace hypercenter {

namespace {

// Gap between the largest and second-largest of the three pairwise sums.
inline Dist four_point_gap(Dist dxy, Dist dzw, Dist dxz, Dist dyw, Dist dxw, Dist dyz) {
    Dist s1 = dxy + dzw;
    Dist s2 = dxz + dyw;
    Dist s3 = dxw + dyz;
    Dist hi = std::max({s1, s2, s3});
    Dist lo = std::min({s1, s2, s3});
    Dist mid = s1 + s2 + s3 - hi - lo;
    return hi - mid;
}

}  // namespace

HyperbolicityReport delta_four_point_exact(const Graph& g, Vertex max_n) {
    const Vertex n = g.num_vertices();
    if (n > max_n) {
        throw LimitError("exact four-point scan refused: " + std::to_string(n) +
                         " vertices exceed the cap of " + std::to_string(max_n));
    }
    HyperbolicityReport rep;
    rep.exact = true;
    auto d = all_pairs_distances(g);
    Dist best = 0;
    std::array<Vertex, 4> wit{0, 0, 0, 0};
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
            for (Vertex z = y + 1; z < n; ++z) {
                const Dist dxy = d[x][y], dxz = d[x][z], dyz = d[y][z];
                for (Vertex w = z + 1; w < n; ++w) {
                    Dist gap = four_point_gap(dxy, d[z][w], dxz, d[y][w], d[x][w], dyz);
                    if (gap > best) {
                        best = gap;
                        wit = {x, y, z, w};
                    }
                }
            }
    rep.delta_four_point = HalfInt::from_doubled(best);
    rep.witness_quadruple = wit;
    rep.lambda_n = lambda_n(rep.delta_four_point, n);
    return rep;
}

HyperbolicityReport delta_four_point_sampled(const Graph& g, std::uint64_t samples,
                                             std::uint64_t seed) {
    const Vertex n = g.num_vertices();
    HyperbolicityReport rep;
    rep.exact = false;
    rep.samples_used = samples;

    // Bounded FIFO cache of BFS rows keyed by vertex; three rows resolve all
    // six distances of a quadruple. Rows are shared-owned so an eviction
    // cannot free a row the current quadruple still holds.
    const std::size_t cache_cap = 64;
    std::unordered_map<Vertex, std::shared_ptr<const std::vector<Dist>>> cache;
    std::deque<Vertex> order;
    auto row = [&](Vertex v) -> std::shared_ptr<const std::vector<Dist>> {
        auto it = cache.find(v);
        if (it != cache.end()) return it->second;
        if (cache.size() >= cache_cap) {
            cache.erase(order.front());
            order.pop_front();
        }
        order.push_back(v);
        auto fresh = std::make_shared<const std::vector<Dist>>(bfs(g, v).dist);
        cache.emplace(v, fresh);
        return fresh;
    };

    std::mt19937_64 rng(seed);
    auto draw = [&]() -> Vertex { return static_cast<Vertex>(rng() % n); };

    Dist best = 0;
    std::array<Vertex, 4> wit{0, 0, 0, 0};
    for (std::uint64_t s = 0; s < samples; ++s) {
        Vertex x = draw(), y = draw(), z = draw(), w = draw();
        auto rx = row(x);
        auto ry = row(y);
        auto rz = row(z);
        Dist gap = four_point_gap((*rx)[y], (*rz)[w], (*rx)[z], (*ry)[w], (*rx)[w], (*ry)[z]);
        if (gap > best) {
            best = gap;
            wit = {x, y, z, w};
        }
    }
    rep.delta_four_point = HalfInt::from_doubled(best);
    rep.witness_quadruple = wit;
    rep.lambda_n = lambda_n(rep.delta_four_point, n);
    return rep;
}

namespace {

// A geodesic with an orientation. at(i) is the i-th vertex along the walk.
struct PathView {
    const std::vector<Vertex>* path;
    bool reversed;
    std::size_t length() const { return path->size() - 1; }  // edges
    Vertex at(std::size_t i) const {
        return reversed ? (*path)[path->size() - 1 - i] : (*path)[i];
    }
};

// Distance between the points at quarter-position q1 on a and q2 on b, in
// quarter units (positions and result both scaled by 4). Points are either
// vertices (q % 4 == 0) or interior points of an edge.
std::int64_t dist_quarter(const PathView& a, std::int64_t q1, const PathView& b,
                          std::int64_t q2, const std::vector<std::vector<Dist>>& d) {
    const std::int64_t k1 = q1 / 4, r1 = q1 % 4;
    const std::int64_t k2 = q2 / 4, r2 = q2 % 4;
    if (r1 == 0 && r2 == 0) return 4LL * d[a.at(k1)][b.at(k2)];
    if (r1 == 0) {
        Vertex u = a.at(k1), c = b.at(k2), e = b.at(k2 + 1);
        return std::min(4LL * d[u][c] + r2, 4LL * d[u][e] + (4 - r2));
    }
    if (r2 == 0) {
        Vertex u = b.at(k2), c = a.at(k1), e = a.at(k1 + 1);
        return std::min(4LL * d[u][c] + r1, 4LL * d[u][e] + (4 - r1));
    }
    Vertex p = a.at(k1), pq = a.at(k1 + 1);
    Vertex s = b.at(k2), se = b.at(k2 + 1);
    if (p == s && pq == se) return std::llabs(r1 - r2);
    if (p == se && pq == s) return std::llabs(r1 + r2 - 4);
    return std::min({r1 + 4LL * d[p][s] + r2, r1 + 4LL * d[p][se] + (4 - r2),
                     (4 - r1) + 4LL * d[pq][s] + r2, (4 - r1) + 4LL * d[pq][se] + (4 - r2)});
}

// Max over the internal segment [0, alpha] (alpha doubled) of the distance
// between same-parameter points on two geodesics leaving a common corner.
// The distance along the segment is piecewise linear with breakpoints at
// quarter-integer parameters, so scanning the quarter grid is exact.
std::int64_t corner_insize_doubled(const PathView& a, const PathView& b,
                                   std::int64_t alpha_doubled,
                                   const std::vector<std::vector<Dist>>& d) {
    std::int64_t best4 = 0;
    for (std::int64_t q = 0; q <= 2 * alpha_doubled; ++q)
        best4 = std::max(best4, dist_quarter(a, q, b, q, d));
    assert(best4 % 2 == 0);  // same-parameter point pairs have half-integer distances
    return best4 / 2;
}

// All geodesics from u to v as vertex sequences, lexicographically ordered by
// the successor choices. Count is pre-checked against the cap.
std::vector<std::vector<Vertex>> enumerate_geodesics(const Graph& g, Vertex u, Vertex v,
                                                     const std::vector<std::vector<Dist>>& d,
                                                     std::uint64_t cap) {
    const Dist duv = d[u][v];
    // Saturating continuation counts from each vertex on some u-v geodesic.
    std::unordered_map<Vertex, std::uint64_t> count;
    auto ways = [&](auto&& self, Vertex w) -> std::uint64_t {
        if (w == v) return 1;
        auto it = count.find(w);
        if (it != count.end()) return it->second;
        std::uint64_t total = 0;
        for (Vertex x : g.neighbors(w)) {
            if (d[u][x] == d[u][w] + 1 && d[u][x] + d[x][v] == duv) {
                total += self(self, x);
                if (total > cap) {
                    total = cap + 1;
                    break;
                }
            }
        }
        count.emplace(w, total);
        return total;
    };
    if (ways(ways, u) > cap) {
        throw LimitError("geodesic enumeration aborted: more than " + std::to_string(cap) +
                         " geodesics between one vertex pair");
    }
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur{u};
    auto walk = [&](auto&& self, Vertex w) -> void {
        if (w == v) {
            out.push_back(cur);
            return;
        }
        for (Vertex x : g.neighbors(w)) {
            if (d[u][x] == d[u][w] + 1 && d[u][x] + d[x][v] == duv) {
                cur.push_back(x);
                self(self, x);
                cur.pop_back();
            }
        }
    };
    walk(walk, u);
    return out;
}

}  // namespace

HalfInt delta_insize_exact(const Graph& g, Vertex max_n, std::uint64_t geodesic_cap) {
    const Vertex n = g.num_vertices();
    if (n > max_n) {
        throw LimitError("exact insize scan refused: " + std::to_string(n) +
                         " vertices exceed the cap of " + std::to_string(max_n));
    }
    auto d = all_pairs_distances(g);

    // Geodesics for every unordered pair, stored u -> v with u < v.
    std::vector<std::vector<std::vector<std::vector<Vertex>>>> geos(n);
    for (Vertex u = 0; u < n; ++u) {
        geos[u].resize(n);
        for (Vertex v = u + 1; v < n; ++v)
            geos[u][v] = enumerate_geodesics(g, u, v, d, geodesic_cap);
    }
    auto view = [&](Vertex from, Vertex to) {
        // Orientation of the stored (min, max) sequence.
        bool rev = from > to;
        const auto& bank = rev ? geos[to][from] : geos[from][to];
        return std::make_pair(&bank, rev);
    };

    std::int64_t best2 = 0;
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            for (Vertex z = y + 1; z < n; ++z) {
                const std::int64_t dxy = d[x][y], dxz = d[x][z], dyz = d[y][z];
                const std::int64_t ax = dxy + dxz - dyz;  // doubled internal lengths
                const std::int64_t ay = dxy + dyz - dxz;
                const std::int64_t az = dxz + dyz - dxy;
                auto [pxy, rxy] = view(x, y);
                auto [pxz, rxz] = view(x, z);
                auto [pyz, ryz] = view(y, z);
                for (const auto& gxy : *pxy) {
                    PathView xy{&gxy, rxy}, yx{&gxy, !rxy};
                    for (const auto& gxz : *pxz) {
                        PathView xz{&gxz, rxz}, zx{&gxz, !rxz};
                        for (const auto& gyz : *pyz) {
                            PathView yz{&gyz, ryz}, zy{&gyz, !ryz};
                            best2 = std::max(best2, corner_insize_doubled(xy, xz, ax, d));
                            best2 = std::max(best2, corner_insize_doubled(yx, yz, ay, d));
                            best2 = std::max(best2, corner_insize_doubled(zx, zy, az, d));
                        }
                    }
                }
            }
        }
    }
    return HalfInt::from_doubled(best2);
}

}  // namespace hypercenter
