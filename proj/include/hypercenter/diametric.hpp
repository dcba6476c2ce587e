#pragma once

#include "hypercenter/graph.hpp"
#include "hypercenter/solution.hpp"

namespace hypercenter {

// A pair (u, v) with v farthest from u and u farthest from v.
struct DiametricalPair {
    Vertex u = kNoVertex;
    Vertex v = kNoVertex;
    Dist distance = 0;
    int bfs_count = 0;
};

struct PairSearch {
    DiametricalPair pair;
    DistanceField from_u;  // bfs(g, pair.u)
    DistanceField from_v;  // bfs(g, pair.v)
};

// Iterated farthest-vertex search: v1 farthest from start, v2 farthest from
// v1, ... (min-id tie-breaks) until consecutive distances stop increasing;
// the pair attaining the stabilized distance is returned together with its
// two BFS fields. The distance sequence is strictly increasing until the
// final repeat, so the loop ends; a safety cap of n iterations throws
// std::logic_error since hitting it means the distance routine is broken.
PairSearch locally_diametrical_pair(const Graph& g, Vertex start = 0);

// 1-center from a locally diametrical pair (x, y): candidates are the
// midpoint roundings on the canonical x-y geodesic, the one with the smaller
// eccentricity wins (ties: the floor candidate). Certificate kappa = d(x, y).
CenterSolution one_center(const Graph& g, Vertex start = 0);

// 2-center: extends the pair with z maximizing min(d(z,x), d(z,y)) (min-id
// ties), takes 2*lambda = min pairwise distance of {x, y, z}, and places
// centers lambda into the x->y and y->x geodesics. All four rounding
// combinations are evaluated; the smallest radius wins, earliest combination
// (floor first) on ties. Certificate kappa = min pairwise distance.
// Requires n >= 2.
CenterSolution two_center(const Graph& g, Vertex start = 0);

}  // namespace hypercenter
