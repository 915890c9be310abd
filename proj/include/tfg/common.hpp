#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>

namespace tfg {

using Int = std::int64_t;

// Thrown when a desk-scale search guard is exceeded (CLI exit code 4).
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int gcd_of(std::span<const Int> xs, Int seed = 0) {
    Int g = seed;
    for (Int x : xs) g = std::gcd(g, x);
    return g;
}

} // namespace tfg
