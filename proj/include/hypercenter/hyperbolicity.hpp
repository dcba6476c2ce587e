#pragma once

#include <array>
#include <cstdint>

#include "hypercenter/graph.hpp"
#include "hypercenter/halfint.hpp"

namespace hypercenter {

struct HyperbolicityReport {
    HalfInt delta_four_point;
    bool exact = false;
    std::uint64_t samples_used = 0;
    std::array<Vertex, 4> witness_quadruple{0, 0, 0, 0};
    int lambda_n = 0;  // computed from delta_four_point and n
};

// Four-point condition over every vertex quadruple: half the maximum gap
// between the largest and second-largest of the three pairwise distance sums.
// Quadratic memory (full distance matrix) and quartic time, so refuses
// graphs with more than max_n vertices (LimitError).
HyperbolicityReport delta_four_point_exact(const Graph& g, Vertex max_n = 512);

// Monte Carlo lower bound on the four-point value: `samples` quadruples drawn
// uniformly (with replacement) from a fixed seeded stream, so a longer run
// extends a shorter one and the result never decreases as samples grow.
// BFS fields are cached per sampled vertex with bounded eviction.
HyperbolicityReport delta_four_point_sampled(const Graph& g, std::uint64_t samples,
                                             std::uint64_t seed);

// Exact thin-triangle value: for every vertex triple and every choice of the
// three geodesics, the maximum distance between same-parameter points within
// the triangle's internal segments. Evaluation walks quarter-integer
// parameters with integer arithmetic; resulting values are half-integers.
// Exponential in spirit, so refuses graphs with more than max_n vertices, and
// aborts if a single pair carries more than geodesic_cap geodesics
// (LimitError either way).
HalfInt delta_insize_exact(const Graph& g, Vertex max_n = 16,
                           std::uint64_t geodesic_cap = 1'000'000);

}  // namespace hypercenter
