#pragma once

#include <stdexcept>

namespace hypercenter {

// Problems in user-supplied data: unreadable files, malformed lines,
// disconnected inputs, unknown vertex labels.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap was exceeded (exact-mode size limits,
// brute-force instance caps, enumeration guards, iteration guards).
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hypercenter
