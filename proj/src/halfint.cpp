#include "hypercenter/halfint.hpp"

#include <cmath>
#include <stdexcept>

namespace hypercenter {

std::string to_string(HalfInt h) {
    if (h.is_integral()) return std::to_string(h.doubled / 2);
    std::int64_t whole = h.doubled / 2;
    if (h.doubled < 0 && h.doubled % 2 != 0) --whole;  // floor for negatives
    return std::to_string(whole) + ".5";
}

int lambda_n(HalfInt delta, Vertex n) {
    if (n == 0) throw std::invalid_argument("lambda_n needs a nonempty graph");
    if (delta.doubled < 0) throw std::invalid_argument("negative delta");
    // 3*delta = 1.5 * doubled, 2*delta*log2(n) = doubled * log2(n).
    long double v = 4.0L + 1.5L * static_cast<long double>(delta.doubled) +
                    static_cast<long double>(delta.doubled) * std::log2(static_cast<long double>(n));
    long double nearest = std::round(v);
    if (std::fabs(v - nearest) < 1e-9L) return static_cast<int>(nearest);
    return static_cast<int>(std::ceil(v));
}

}  // namespace hypercenter
