#pragma once

#include <cstdint>
#include <vector>

#include "hypercenter/graph.hpp"

namespace hypercenter {

// A p-center answer with its quality certificate. kappa is the smallest
// pairwise distance of a (p+1)-packing found along the way, so
// ceil(kappa/2) <= optimal radius <= radius always holds; the gap bounds how
// far the answer can be from optimal.
struct CenterSolution {
    int p = 0;
    std::vector<Vertex> centers;
    Dist radius = 0;
    Vertex witness = kNoVertex;  // min-id vertex attaining the radius
    Dist kappa = 0;
    Dist lower_bound = 0;  // ceil(kappa/2)
    int rounds = 0;
    std::vector<std::int64_t> phi_history;
    std::int64_t bfs_total = 0;
};

}  // namespace hypercenter
