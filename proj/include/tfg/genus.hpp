#pragma once

#include <optional>

#include "tfg/divisor.hpp"

namespace tfg {

struct GenusReport {
    Int rm = 0, rn = 0, r = 0, m = 0, n = 0;
    Int arithmetic_genus = 0;
    Int delta0 = 0;
    Int delta_inf = 0;
    Int delta_max = 0;
    // Defined only for genus-zero base curves.
    std::optional<Int> defect0;
    std::optional<Int> defect_inf;
    Int geometric_genus = 0;
};

// rm*genus_D + rn*genus_C + (rm-1)(rn-1).
Int arithmetic_genus(const SurfaceConfig& cfg);

// arithmetic_genus - delta_pairsum(zeros) - delta_pairsum(poles). Signed:
// configurations that fail validation can drive it negative, which is a
// useful reducibility diagnostic.
Int geometric_genus(const SurfaceConfig& cfg);

// (r^2*m*n - r*m - r*n + r) / 2, the maximum pair-delta total over all
// partition pairs of the bidegree (rm, rn). Requires gcd(m, n) = 1; the
// numerator is then even and the division exact.
Int delta_max(Int r, Int m, Int n);

GenusReport genus_report(const SurfaceConfig& cfg);

} // namespace tfg
