#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "hypercenter/graph.hpp"

namespace hypercenter {

// Half-integer (multiple of 1/2) stored as a doubled integer so comparisons
// and arithmetic stay exact.
struct HalfInt {
    std::int64_t doubled = 0;

    static HalfInt from_int(std::int64_t v) { return HalfInt{2 * v}; }
    static HalfInt from_doubled(std::int64_t d) { return HalfInt{d}; }

    double value() const { return static_cast<double>(doubled) / 2.0; }
    bool is_integral() const { return doubled % 2 == 0; }

    auto operator<=>(const HalfInt&) const = default;
};

// "3" for whole values, "1.5" otherwise.
std::string to_string(HalfInt h);

// ceil(4 + 3*delta + 2*delta*log2(n)). The additive distance bound a cluster
// tree carries for an n-vertex graph of hyperbolicity delta; also the unit in
// which optimization round caps are expressed.
int lambda_n(HalfInt delta, Vertex n);

}  // namespace hypercenter
