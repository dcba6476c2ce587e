#include "hypercenter/pcenter.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "hypercenter/diametric.hpp"
#include "hypercenter/errors.hpp"
#include "hypercenter/hyperbolicity.hpp"
#include "hypercenter/tree_approx.hpp"

namespace hypercenter {

namespace {

constexpr Dist kFar = std::numeric_limits<Dist>::max();

void refresh_metrics(PackingState& s) {
    const std::size_t m = s.members.size();
    Dist kappa = kFar;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            kappa = std::min(kappa, s.rows[i].dist[s.members[j]]);
    int eta = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (j != i && s.rows[i].dist[s.members[j]] == kappa) {
                ++eta;
                break;
            }
    s.kappa = kappa;
    s.eta = eta;
    s.phi = static_cast<std::int64_t>(m) * (kappa + 1) - eta;
}

std::vector<char> attaining_members(const PackingState& s) {
    const std::size_t m = s.members.size();
    std::vector<char> attains(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (j != i && s.rows[i].dist[s.members[j]] == s.kappa) {
                attains[i] = 1;
                break;
            }
    return attains;
}

// Smallest-id vertex whose distance to every member but one exceeds kappa,
// that one being a kappa-attaining member (or any member if the vertex is
// farther than kappa from all of them). Such a vertex falsifies the
// saturation property and makes the packing improvable.
Vertex saturation_violation(const Graph& g, const PackingState& s) {
    const Vertex n = g.num_vertices();
    const std::size_t m = s.members.size();
    std::vector<char> attains = attaining_members(s);
    for (Vertex w = 0; w < n; ++w) {
        Dist min1 = kFar, min2 = kFar;
        std::size_t arg1 = 0;
        for (std::size_t j = 0; j < m; ++j) {
            Dist d = s.rows[j].dist[w];
            if (d < min1) {
                min2 = min1;
                min1 = d;
                arg1 = j;
            } else if (d < min2) {
                min2 = d;
            }
        }
        if (min1 > s.kappa) return w;
        if (min2 > s.kappa && attains[arg1]) return w;
    }
    return kNoVertex;
}

// Labelling order: index of v0 (first element of the lexicographically
// smallest kappa-attaining vertex pair) first, the rest by nondecreasing
// distance from v0, ties by vertex id.
std::vector<std::size_t> relabel_order(const PackingState& s) {
    const std::size_t m = s.members.size();
    Vertex bu = kNoVertex, bv = kNoVertex;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (s.rows[i].dist[s.members[j]] != s.kappa) continue;
            Vertex u = std::min(s.members[i], s.members[j]);
            Vertex v = std::max(s.members[i], s.members[j]);
            if (bu == kNoVertex || std::pair(u, v) < std::pair(bu, bv)) {
                bu = u;
                bv = v;
            }
        }
    assert(bu != kNoVertex);

    std::size_t i0 = 0;
    while (s.members[i0] != bu) ++i0;
    const std::vector<Dist>& d0 = s.rows[i0].dist;
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::swap(order[0], order[i0]);
    std::sort(order.begin() + 1, order.end(), [&](std::size_t a, std::size_t b) {
        return std::pair(d0[s.members[a]], s.members[a]) <
               std::pair(d0[s.members[b]], s.members[b]);
    });
    return order;
}

void relabel_state(PackingState& s) {
    std::vector<std::size_t> order = relabel_order(s);
    const std::size_t m = order.size();
    std::vector<Vertex> members(m);
    std::vector<DistanceField> rows(m);
    for (std::size_t r = 0; r < m; ++r) {
        members[r] = s.members[order[r]];
        rows[r] = std::move(s.rows[order[r]]);
    }
    s.members = std::move(members);
    s.rows = std::move(rows);
}

}  // namespace

PackingState recompute_state(const Graph& g, std::vector<Vertex> members,
                             std::int64_t* bfs_counter) {
    if (members.size() < 2) throw std::invalid_argument("packing needs at least two members");
    for (Vertex v : members)
        if (v >= g.num_vertices()) throw std::invalid_argument("packing member out of range");
    std::vector<Vertex> check = members;
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end())
        throw std::invalid_argument("packing members must be distinct");

    PackingState s;
    s.members = std::move(members);
    s.rows.reserve(s.members.size());
    for (Vertex v : s.members) {
        s.rows.push_back(bfs(g, v));
        if (bfs_counter) ++*bfs_counter;
    }
    refresh_metrics(s);
    return s;
}

int improve_b(const Graph& g, PackingState& state, std::int64_t* bfs_counter) {
    const Vertex n = g.num_vertices();
    const std::size_t m = state.members.size();
    std::vector<char> in_p(n, 0);
    for (Vertex v : state.members) in_p[v] = 1;

    int replaced = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < m; ++i) {
            bool attains = false;
            for (std::size_t j = 0; j < m && !attains; ++j)
                attains = j != i && state.rows[i].dist[state.members[j]] == state.kappa;
            if (!attains) continue;

            // Farthest escape from the other members; only a strict win over
            // kappa justifies the swap.
            Vertex best = kNoVertex;
            Dist best_min = state.kappa;
            for (Vertex w = 0; w < n; ++w) {
                if (in_p[w]) continue;
                Dist mn = kFar;
                for (std::size_t j = 0; j < m; ++j) {
                    if (j == i) continue;
                    mn = std::min(mn, state.rows[j].dist[w]);
                    if (mn <= best_min) break;
                }
                if (mn > best_min) {
                    best_min = mn;
                    best = w;
                }
            }
            if (best == kNoVertex) continue;

            in_p[state.members[i]] = 0;
            in_p[best] = 1;
            state.members[i] = best;
            state.rows[i] = bfs(g, best);
            if (bfs_counter) ++*bfs_counter;
            refresh_metrics(state);
            ++replaced;
            changed = true;
        }
    }
    return replaced;
}

int improve_c(const Graph& g, PackingState& state, std::int64_t* bfs_counter) {
    if (saturation_violation(g, state) != kNoVertex)
        throw std::logic_error("improve_c requires an improve_b fixed point");

    relabel_state(state);
    const Vertex n = g.num_vertices();
    const std::size_t m = state.members.size();
    const Dist kappa = state.kappa;  // admissibility compares against entry kappa
    std::vector<char> in_p(n, 0);
    for (Vertex v : state.members) in_p[v] = 1;
    const std::vector<Dist>& d0 = state.rows[0].dist;  // v0 keeps its slot

    int replaced = 0;
    for (std::size_t i = 1; i < m; ++i) {
        Vertex best = kNoVertex;
        Dist best_d = d0[state.members[i]];
        for (Vertex w = 0; w < n; ++w) {
            if (in_p[w] || d0[w] <= best_d) continue;
            if (state.rows[i].dist[w] > kappa) continue;
            bool apart = true;
            for (std::size_t j = 0; j < m && apart; ++j)
                apart = j == i || state.rows[j].dist[w] > kappa;
            if (apart) {
                best = w;
                best_d = d0[w];
            }
        }
        if (best == kNoVertex) continue;

        in_p[state.members[i]] = 0;
        in_p[best] = 1;
        state.members[i] = best;
        state.rows[i] = bfs(g, best);
        if (bfs_counter) ++*bfs_counter;
        ++replaced;
    }
    refresh_metrics(state);
    return replaced;
}

OptimizeResult optimize_packing(const Graph& g, int p, std::vector<Vertex> initial,
                                HalfInt delta_for_cap) {
    if (static_cast<int>(initial.size()) != p + 1)
        throw std::invalid_argument("initial packing must have p+1 members");

    OptimizeResult out;
    PackingState state = recompute_state(g, std::move(initial), &out.bfs_used);
    improve_b(g, state, &out.bfs_used);
    out.phi_history.push_back(state.phi);

    const long cap = 10L * (p + 1) * lambda_n(delta_for_cap, g.num_vertices());
    for (;;) {
        std::int64_t before = state.phi;
        improve_c(g, state, &out.bfs_used);
        improve_b(g, state, &out.bfs_used);
        ++out.rounds;
        out.phi_history.push_back(state.phi);
        if (state.phi == before) break;
        if (out.rounds > cap) {
            std::ostringstream msg;
            msg << "improvement did not settle within " << cap << " rounds; phi history:";
            for (std::int64_t v : out.phi_history) msg << ' ' << v;
            throw LimitError(msg.str());
        }
    }

    relabel_state(state);
    PropertyReport rep = check_properties(g, state, delta_for_cap);
    if (!rep.a || !rep.b) throw std::logic_error("optimized packing failed its structural audit");
    out.state = std::move(state);
    return out;
}

PropertyReport check_properties(const Graph& g, const PackingState& state, HalfInt delta) {
    const std::size_t m = state.members.size();
    PropertyReport rep;
    rep.v0 = state.members[0];

    std::vector<char> attains = attaining_members(state);
    rep.a = attains[0] != 0;

    Vertex bw = saturation_violation(g, state);
    rep.b = bw == kNoVertex;
    rep.b_witness = bw;

    const Vertex n = g.num_vertices();
    const std::vector<Dist>& d0 = state.rows[0].dist;
    for (std::size_t i = 1; i < m && rep.c; ++i) {
        std::int64_t gate = static_cast<std::int64_t>(d0[state.members[i]]) + delta.doubled;
        for (Vertex v = 0; v < n; ++v) {
            if (static_cast<std::int64_t>(d0[v]) <= gate) continue;
            if (state.rows[i].dist[v] > state.kappa) continue;
            bool apart = true;
            for (std::size_t j = 0; j < m && apart; ++j)
                apart = j == i || state.rows[j].dist[v] > state.kappa;
            if (apart) {
                rep.c = false;
                rep.c_index = static_cast<int>(i);
                rep.c_witness = v;
                break;
            }
        }
    }
    return rep;
}

CenterSolution extract_centers(const Graph& g, const PackingState& state,
                               std::int64_t* bfs_counter) {
    const std::size_t m = state.members.size();
    std::vector<std::size_t> order = relabel_order(state);
    const Vertex v0 = state.members[order[0]];
    const Dist kappa = state.kappa;
    const Dist t_lo = kappa / 2;
    const Dist t_hi = kappa - t_lo;

    auto centers_at = [&](Dist t) {
        std::vector<Vertex> centers;
        centers.reserve(m - 1);
        for (std::size_t r = 1; r < m; ++r) {
            Vertex c = point_along(state.rows[order[r]], v0, t);
            if (std::find(centers.begin(), centers.end(), c) == centers.end())
                centers.push_back(c);
        }
        return centers;
    };

    std::vector<Vertex> centers = centers_at(t_lo);
    auto [radius, witness] = evaluate_radius(g, centers);
    if (bfs_counter) ++*bfs_counter;
    if (t_hi != t_lo) {
        std::vector<Vertex> ceil_centers = centers_at(t_hi);
        auto [ceil_radius, ceil_witness] = evaluate_radius(g, ceil_centers);
        if (bfs_counter) ++*bfs_counter;
        if (ceil_radius < radius) {
            centers = std::move(ceil_centers);
            radius = ceil_radius;
            witness = ceil_witness;
        }
    }

    CenterSolution sol;
    sol.p = static_cast<int>(m) - 1;
    sol.centers = std::move(centers);
    sol.radius = radius;
    sol.witness = witness;
    sol.kappa = kappa;
    sol.lower_bound = (kappa + 1) / 2;
    return sol;
}

Algo algo_from_string(const std::string& name) {
    if (name == "auto") return Algo::kAuto;
    if (name == "general") return Algo::kGeneral;
    if (name == "tree") return Algo::kTree;
    if (name == "chepoi1") return Algo::kChepoi1;
    if (name == "brute") return Algo::kBrute;
    throw std::invalid_argument("unknown algorithm: " + name);
}

std::string to_string(Algo a) {
    switch (a) {
        case Algo::kAuto: return "auto";
        case Algo::kGeneral: return "general";
        case Algo::kTree: return "tree";
        case Algo::kChepoi1: return "chepoi1";
        case Algo::kBrute: return "brute";
    }
    return "auto";
}

namespace {

HalfInt cap_delta(const Graph& g, const SolveOptions& options) {
    if (options.delta) return *options.delta;
    HalfInt est = delta_four_point_sampled(g, 64, options.seed).delta_four_point;
    HalfInt one = HalfInt::from_int(1);  // floor keeps the cap generous on near-trees
    return est < one ? one : est;
}

CenterSolution solve_general(const Graph& g, int p, const SolveOptions& options) {
    std::int64_t bfs_total = 1;  // the layering BFS
    std::vector<Vertex> init = initial_packing(g, p, options.root);
    OptimizeResult opt = optimize_packing(g, p, std::move(init), cap_delta(g, options));
    bfs_total += opt.bfs_used;
    CenterSolution sol = extract_centers(g, opt.state, &bfs_total);
    sol.rounds = opt.rounds;
    sol.phi_history = std::move(opt.phi_history);
    sol.bfs_total = bfs_total;
    return sol;
}

CenterSolution solve_tree(const Graph& g, int p, const SolveOptions& options) {
    std::int64_t bfs_total = 1;
    ApproxTree at = layering_partition(g, options.root);
    RootedTree ct = cluster_tree(at);
    auto [tree_radius, tree_centers] = tree_vertex_p_center(ct, p);
    (void)tree_radius;

    std::vector<Vertex> centers;
    centers.reserve(tree_centers.size());
    for (std::uint32_t c : tree_centers) centers.push_back(at.cluster_min_vertex[c]);
    auto [radius, witness] = evaluate_radius(g, centers);
    ++bfs_total;

    // Certificate: the tree-derived packing, measured back in g.
    ++bfs_total;  // initial_packing repeats the layering
    PackingState cert = recompute_state(g, initial_packing(g, p, options.root), &bfs_total);

    CenterSolution sol;
    sol.p = p;
    sol.centers = std::move(centers);
    sol.radius = radius;
    sol.witness = witness;
    sol.kappa = cert.kappa;
    sol.lower_bound = (cert.kappa + 1) / 2;
    sol.bfs_total = bfs_total;
    return sol;
}

CenterSolution solve_chepoi1(const Graph& g, const SolveOptions& options) {
    DistanceField f0 = bfs(g, options.start);
    Vertex x = 0;
    for (Vertex v = 1; v < g.num_vertices(); ++v)
        if (f0.dist[v] > f0.dist[x]) x = v;
    DistanceField fx = bfs(g, x);
    Vertex y = 0;
    for (Vertex v = 1; v < g.num_vertices(); ++v)
        if (fx.dist[v] > fx.dist[y]) y = v;
    Dist d = fx.dist[y];
    std::int64_t bfs_total = 2;

    Dist t_lo = d / 2;
    Dist t_hi = d - t_lo;
    Vertex center = point_along(fx, y, t_lo);
    auto [radius, witness] = evaluate_radius(g, std::vector<Vertex>{center});
    ++bfs_total;
    if (t_hi != t_lo) {
        Vertex c_hi = point_along(fx, y, t_hi);
        auto [r_hi, w_hi] = evaluate_radius(g, std::vector<Vertex>{c_hi});
        ++bfs_total;
        if (r_hi < radius) {
            center = c_hi;
            radius = r_hi;
            witness = w_hi;
        }
    }

    CenterSolution sol;
    sol.p = 1;
    sol.centers = {center};
    sol.radius = radius;
    sol.witness = witness;
    sol.kappa = d;
    sol.lower_bound = (d + 1) / 2;
    sol.bfs_total = bfs_total;
    return sol;
}

CenterSolution solve_brute(const Graph& g, int p, const SolveOptions& options) {
    auto [radius, centers] = brute_pcenter(g, p, options.brute_caps);
    auto [dq, pack] = brute_dispersion(g, p + 1, options.brute_caps);
    (void)pack;
    auto [check_radius, witness] = evaluate_radius(g, centers);
    assert(check_radius == radius);

    CenterSolution sol;
    sol.p = p;
    sol.centers = std::move(centers);
    sol.radius = check_radius;
    sol.witness = witness;
    sol.kappa = dq;
    sol.lower_bound = (dq + 1) / 2;
    sol.bfs_total = 2 * static_cast<std::int64_t>(g.num_vertices()) + 1;
    return sol;
}

}  // namespace

CenterSolution solve(const Graph& g, int p, const SolveOptions& options) {
    const Vertex n = g.num_vertices();
    if (p < 1 || static_cast<Vertex>(p) > n)
        throw std::invalid_argument("p must lie between 1 and the vertex count");
    if (options.start >= n) throw std::invalid_argument("start vertex out of range");
    if (options.root >= n) throw std::invalid_argument("root vertex out of range");

    if (static_cast<Vertex>(p) == n) {
        CenterSolution sol;
        sol.p = p;
        sol.centers.resize(n);
        std::iota(sol.centers.begin(), sol.centers.end(), 0);
        sol.radius = 0;
        sol.witness = 0;
        return sol;
    }

    switch (options.algo) {
        case Algo::kAuto:
            if (p == 1) return one_center(g, options.start);
            if (p == 2) return two_center(g, options.start);
            return solve_general(g, p, options);
        case Algo::kGeneral:
            return solve_general(g, p, options);
        case Algo::kTree:
            return solve_tree(g, p, options);
        case Algo::kChepoi1:
            if (p != 1) throw std::invalid_argument("chepoi1 is a 1-center baseline");
            return solve_chepoi1(g, options);
        case Algo::kBrute:
            return solve_brute(g, p, options);
    }
    throw std::logic_error("unhandled algorithm");
}

std::pair<Dist, std::vector<Vertex>> brute_pcenter(const Graph& g, int p, BruteCaps caps) {
    const Vertex n = g.num_vertices();
    if (p < 1 || static_cast<Vertex>(p) > n) throw std::invalid_argument("p out of range");
    if (n > caps.max_n || p > caps.max_p) {
        std::ostringstream msg;
        msg << "brute-force p-center capped at n <= " << caps.max_n << ", p <= " << caps.max_p;
        throw LimitError(msg.str());
    }
    std::vector<std::vector<Dist>> dm = all_pairs_distances(g);

    std::vector<Vertex> cur(p), best_set;
    Dist best = kFar;
    std::vector<std::vector<Dist>> dmin_stack(p + 1, std::vector<Dist>(n, kFar));

    auto recurse = [&](auto&& self, Vertex start, int depth) -> void {
        if (depth == p) {
            const std::vector<Dist>& dmin = dmin_stack[depth];
            Dist r = 0;
            for (Vertex v = 0; v < n; ++v) {
                if (dmin[v] >= best) return;  // cannot strictly beat the incumbent
                r = std::max(r, dmin[v]);
            }
            best = r;
            best_set = cur;
            return;
        }
        for (Vertex v = start; v + static_cast<Vertex>(p - depth) <= n; ++v) {
            const std::vector<Dist>& above = dmin_stack[depth];
            std::vector<Dist>& mine = dmin_stack[depth + 1];
            for (Vertex u = 0; u < n; ++u) mine[u] = std::min(above[u], dm[v][u]);
            cur[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    recurse(recurse, 0, 0);
    return {best, best_set};
}

std::pair<Dist, std::vector<Vertex>> brute_dispersion(const Graph& g, int q, BruteCaps caps) {
    const Vertex n = g.num_vertices();
    if (q < 2 || static_cast<Vertex>(q) > n) throw std::invalid_argument("q out of range");
    if (n > caps.max_n || q > caps.max_p + 1) {
        std::ostringstream msg;
        msg << "brute-force dispersion capped at n <= " << caps.max_n << ", q <= "
            << caps.max_p + 1;
        throw LimitError(msg.str());
    }
    std::vector<std::vector<Dist>> dm = all_pairs_distances(g);

    std::vector<Vertex> cur(q), best_set;
    Dist best = -1;
    auto recurse = [&](auto&& self, Vertex start, int depth, Dist curmin) -> void {
        if (curmin <= best) return;  // extending only shrinks the minimum
        if (depth == q) {
            best = curmin;
            best_set = cur;
            return;
        }
        for (Vertex v = start; v + static_cast<Vertex>(q - depth) <= n; ++v) {
            Dist nm = curmin;
            for (int t = 0; t < depth; ++t) nm = std::min(nm, dm[cur[t]][v]);
            cur[depth] = v;
            self(self, v + 1, depth + 1, nm);
        }
    };
    recurse(recurse, 0, 0, kFar);
    return {best, best_set};
}

}  // namespace hypercenter
