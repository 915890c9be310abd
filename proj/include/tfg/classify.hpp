#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tfg/genus.hpp"

namespace tfg {

// A canonical genus-one configuration of one bidegree (rm <= rn).
struct GenusOneClass {
    Int rm = 0, rn = 0, r = 0, m = 0, n = 0;
    Partition zeros_f, zeros_g, poles_f, poles_g;
    Int delta0 = 0, delta_inf = 0, delta_max = 0;
    Int defect0 = 0, defect_inf = 0; // defect0 <= defect_inf

    Int k() const { return zeros_f.size(); }
    Int l() const { return zeros_g.size(); }
    Int k_poles() const { return poles_f.size(); }
    Int l_poles() const { return poles_g.size(); }
    std::array<Int, 4> shape() const { return {k(), l(), k_poles(), l_poles()}; }
    bool one_zero_one_pole() const { return k() == 1 && k_poles() == 1; }
    bool balanced() const { return delta0 == delta_inf; }

    SurfaceConfig config() const;
    bool operator==(const GenusOneClass&) const = default;
    // Orders by (zeros_f, poles_f, zeros_g, poles_g); canonical classes of a
    // bidegree are listed in this order.
    bool operator<(const GenusOneClass& o) const;
};

struct EnumerateOptions {
    // Require gcd(side parts, r) = 1 on every side not attaining the
    // maximal pair delta.
    bool side_gcd_filter = false;
    // Restrict the delta split to {(max, max-r), (max-r/2, max-r/2)}. Must
    // agree with the default exhaustive split.
    bool fast_defect_mode = false;
    // OpenMP worker count; <= 0 uses the runtime default.
    int jobs = 0;
};

// Canonical representative of cfg under the symmetry group generated by the
// simultaneous zero/pole swap on f and g, and the exchange of f and g when
// the degrees agree. Orients deg f <= deg g and delta0 >= deltaInf, then
// picks the least (zeros_f, poles_f, zeros_g, poles_g) tuple. Idempotent.
// Requires genus_C = genus_D = 0.
SurfaceConfig canonicalize(const SurfaceConfig& cfg);

// Canonical class record of cfg (rational base curves required).
GenusOneClass classify_config(const SurfaceConfig& cfg);

// All canonical genus-one classes of bidegree (rm, rn), deterministic order.
// Strategy: bucket partition pairs of each side by their pair-delta total
// and join buckets whose totals sum to arithmetic_genus - 1.
std::vector<GenusOneClass> enumerate_genus_one(Int rm, Int rn, const EnumerateOptions& opts = {});

// Exhaustive maximum of delta_pairsum over all partition pairs of the
// bidegree (r*m, r*n); the independent check of the closed form delta_max.
// Guard: r*m, r*n <= 30.
Int brute_delta_max(Int r, Int m, Int n, int jobs = 0);
Int brute_delta_max_serial(Int r, Int m, Int n);

// Bidegrees rm <= rn <= max_rn admitting a genus-one class whose canonical
// representative has more than one zero or pole of f. Guard: max_rn <= 30.
std::vector<std::pair<Int, Int>> exceptional_bidegrees(Int max_rn, int jobs = 0);

// Number of (ordered) validated configurations of bidegree (rm, rn) over
// base curves of the given genera whose geometric genus equals `genus`.
Int count_configs_with_genus(Int rm, Int rn, Int genus_C, Int genus_D, Int genus, int jobs = 0);

// -- family matching ---------------------------------------------------

enum class FamilySource {
    Prop2_4_2_2n,
    Families2_14_2n,
    Families2_14_3n,
    Families2_14_4n,
    Families2_14_6n,
    Prop2_15_2_2n,
    Prop2_15_3_3n,
    Prop2_15_4_4n,
    Prop2_15_6_6n,
    Prop2_15_6_6s2,
    Prop2_15_6_6s3,
    Prop2_15_6_6s4,
    Prop2_15_4_4s2,
    Exceptional2_16,
    Unmatched,
};

struct FamilyTag {
    FamilySource source = FamilySource::Unmatched;
    int row = 0;            // exceptional catalog row 1..9, otherwise 0
    std::string parameters; // residue/shape data, empty for Unmatched

    bool operator==(const FamilyTag&) const = default;
};

std::string to_string(const FamilyTag& tag);
std::string to_string(FamilySource source);

// First matching parametric pattern, in priority order: exceptional rows,
// then r > 1 families, then r = 1 families; Unmatched otherwise. Exceptional
// matching keys on bidegree plus the class having k > 1 or k' > 1.
FamilyTag match_family(const GenusOneClass& cls);

// The nine bidegrees carrying exceptional families, in table order.
std::span<const std::pair<Int, Int>> exceptional_table_bidegrees();

// -- data-parallel kernels (serial reference kept for testing) ----------

// Maximum delta_pairsum over ps x qs.
Int max_pair_delta(std::span<const Partition> ps, std::span<const Partition> qs, int jobs = 0);
Int max_pair_delta_serial(std::span<const Partition> ps, std::span<const Partition> qs);

struct DeltaPair {
    Int pi, qi, delta;
    bool operator==(const DeltaPair&) const = default;
};

// Index pairs with delta_pairsum >= min_delta, sorted by (pi, qi).
std::vector<DeltaPair> collect_pairs_with_min_delta(std::span<const Partition> ps,
                                                    std::span<const Partition> qs, Int min_delta,
                                                    int jobs = 0);
std::vector<DeltaPair> collect_pairs_with_min_delta_serial(std::span<const Partition> ps,
                                                           std::span<const Partition> qs,
                                                           Int min_delta);

} // namespace tfg
