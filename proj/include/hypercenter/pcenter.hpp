#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercenter/graph.hpp"
#include "hypercenter/halfint.hpp"
#include "hypercenter/solution.hpp"

namespace hypercenter {

// A (p+1)-packing under optimization. kappa is the smallest pairwise
// distance, eta the number of members at distance exactly kappa from some
// other member, phi = (p+1)*(kappa+1) - eta the potential that strictly
// increases with every improvement step.
struct PackingState {
    std::vector<Vertex> members;       // p+1 distinct vertices
    std::vector<DistanceField> rows;   // bfs(g, members[i])
    Dist kappa = 0;
    int eta = 0;
    std::int64_t phi = 0;
};

struct PropertyReport {
    bool a = true;
    bool b = true;
    bool c = true;
    Vertex v0 = kNoVertex;       // anchor used for the labelling
    Vertex b_witness = kNoVertex;
    int c_index = -1;
    Vertex c_witness = kNoVertex;
};

struct BruteCaps {
    Vertex max_n = 40;
    int max_p = 4;
};

// Runs one BFS per member and fills kappa/eta/phi. Throws
// std::invalid_argument on duplicate members or fewer than two of them.
// bfs_counter, when given, is incremented per BFS.
PackingState recompute_state(const Graph& g, std::vector<Vertex> members,
                             std::int64_t* bfs_counter = nullptr);

// Sweeps members in index order: a member at distance kappa from another is
// replaced by the non-member maximizing the minimum distance to the rest
// (min-id ties) whenever that maximum exceeds kappa. State is refreshed after
// every replacement; sweeping repeats until a full pass changes nothing.
// Each replacement strictly increases phi. Returns the replacement count.
int improve_b(const Graph& g, PackingState& state, std::int64_t* bfs_counter = nullptr);

// Relabels members as v0..vp (v0 = first element of the lexicographically
// smallest pair attaining kappa; the rest sorted by nondecreasing distance
// from v0, min-id ties), then for i = 1..p replaces v_i by the admissible
// vertex farthest from v0 when one lies strictly farther than v_i.
// Admissible: within kappa of v_i and farther than kappa from every other
// member. Distances compare against kappa at entry; kappa/eta/phi are
// refreshed at the end. Throws std::logic_error if the improve_b fixed-point
// precondition fails. Returns the replacement count.
int improve_c(const Graph& g, PackingState& state, std::int64_t* bfs_counter = nullptr);

struct OptimizeResult {
    PackingState state;
    int rounds = 0;
    std::vector<std::int64_t> phi_history;
    std::int64_t bfs_used = 0;
};

// improve_b once, then rounds of {improve_c; improve_b} until a full round
// leaves phi unchanged. phi_history holds the value after the initial
// improve_b and after each round, so it increases strictly and ends with one
// repeat. delta_for_cap sizes the runaway guard: more than
// 10*(p+1)*lambda_n(delta, n) rounds throws LimitError with the history
// attached.
OptimizeResult optimize_packing(const Graph& g, int p, std::vector<Vertex> initial,
                                HalfInt delta_for_cap);

// Audits the three structural properties of an optimized packing: (a) some
// pair attains kappa, (b) no outside vertex is farther than kappa from all
// members but one, (c) no outside vertex sits more than 2*delta farther from
// v0 than the member v_i it could replace (within kappa of v_i, farther than
// kappa from the rest). Witnesses are filled for whichever checks fail.
PropertyReport check_properties(const Graph& g, const PackingState& state, HalfInt delta);

// Reads p centers out of an optimized (p+1)-packing: with the members
// relabelled as in improve_c and lambda = kappa/2, center i sits at distance
// floor(lambda) or ceil(lambda) from v_i on the canonical geodesic toward v0.
// One rounding is applied uniformly; both are evaluated and the smaller
// radius wins (ties: floor). Duplicates collapse. No BFS beyond the
// evaluation passes: geodesic points reuse the stored member fields.
CenterSolution extract_centers(const Graph& g, const PackingState& state,
                               std::int64_t* bfs_counter = nullptr);

enum class Algo { kAuto, kGeneral, kTree, kChepoi1, kBrute };

Algo algo_from_string(const std::string& name);  // std::invalid_argument on unknown names
std::string to_string(Algo a);

struct SolveOptions {
    Algo algo = Algo::kAuto;
    Vertex start = 0;              // pair-search start (p = 1, 2)
    Vertex root = 0;               // layering root (general / tree paths)
    std::optional<HalfInt> delta;  // round-cap delta; sampled estimate when absent
    std::uint64_t seed = 0;        // seeds the sampled estimate
    BruteCaps brute_caps{};
};

// Dispatch: auto picks the dedicated p=1/p=2 routines and the packing
// pipeline for p >= 3; general forces the pipeline for any p; tree solves
// exactly on the cluster tree and maps representatives back; chepoi1 is the
// two-BFS p=1 baseline; brute enumerates (small instances only). p == n
// short-circuits to radius 0. Requires 1 <= p <= n.
CenterSolution solve(const Graph& g, int p, const SolveOptions& options = {});

// Exact vertex p-center by subset enumeration, lexicographically first
// optimum. Guarded by caps (LimitError).
std::pair<Dist, std::vector<Vertex>> brute_pcenter(const Graph& g, int p,
                                                   BruteCaps caps = {});

// Exact q-dispersion (max over q-subsets of the min pairwise distance),
// lexicographically first optimum. Guarded by caps: n <= max_n, q <= max_p+1.
std::pair<Dist, std::vector<Vertex>> brute_dispersion(const Graph& g, int q,
                                                      BruteCaps caps = {});

}  // namespace hypercenter
