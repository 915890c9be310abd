#include "tfg/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tfg {

SurfaceConfig GenusOneClass::config() const {
    SurfaceConfig cfg;
    cfg.f = FunctionDatum{zeros_f, poles_f};
    cfg.g = FunctionDatum{zeros_g, poles_g};
    return cfg;
}

bool GenusOneClass::operator<(const GenusOneClass& o) const {
    auto key = [](const GenusOneClass& c) {
        return std::tie(c.rm, c.rn, c.zeros_f, c.poles_f, c.zeros_g, c.poles_g);
    };
    return key(*this) < key(o);
}

// -- canonicalization ----------------------------------------------------

namespace {

SurfaceConfig swap_zeros_poles(const SurfaceConfig& cfg) {
    SurfaceConfig out = cfg;
    std::swap(out.f.zeros, out.f.poles);
    std::swap(out.g.zeros, out.g.poles);
    return out;
}

SurfaceConfig swap_f_g(const SurfaceConfig& cfg) {
    SurfaceConfig out = cfg;
    std::swap(out.f, out.g);
    std::swap(out.genus_C, out.genus_D);
    return out;
}

auto canonical_key(const SurfaceConfig& c) {
    return std::tie(c.f.zeros, c.f.poles, c.g.zeros, c.g.poles);
}

} // namespace

SurfaceConfig canonicalize(const SurfaceConfig& cfg) {
    if (cfg.genus_C != 0 || cfg.genus_D != 0)
        throw std::invalid_argument("canonicalize: base curves must be rational");
    std::vector<SurfaceConfig> orbit;
    for (bool fg : {false, true}) {
        SurfaceConfig a = fg ? swap_f_g(cfg) : cfg;
        if (a.rm() > a.rn()) continue; // orient deg f <= deg g
        orbit.push_back(a);
        orbit.push_back(swap_zeros_poles(a));
    }
    const SurfaceConfig* best = nullptr;
    for (const SurfaceConfig& c : orbit) {
        if (delta_pairsum(c.f.zeros, c.g.zeros) < delta_pairsum(c.f.poles, c.g.poles)) continue;
        if (!best || canonical_key(c) < canonical_key(*best)) best = &c;
    }
    assert(best != nullptr);
    return *best;
}

// -- kernels ---------------------------------------------------------------

Int max_pair_delta_serial(std::span<const Partition> ps, std::span<const Partition> qs) {
    Int best = 0;
    for (const Partition& p : ps)
        for (const Partition& q : qs) best = std::max(best, delta_pairsum(p, q));
    return best;
}

Int max_pair_delta(std::span<const Partition> ps, std::span<const Partition> qs, int jobs) {
    const Int np = static_cast<Int>(ps.size()), nq = static_cast<Int>(qs.size());
    Int best = 0;
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#pragma omp parallel for reduction(max : best) schedule(static)
#endif
    for (Int i = 0; i < np; ++i) {
        for (Int j = 0; j < nq; ++j) best = std::max(best, delta_pairsum(ps[i], qs[j]));
    }
    (void)jobs;
    return best;
}

std::vector<DeltaPair> collect_pairs_with_min_delta_serial(std::span<const Partition> ps,
                                                           std::span<const Partition> qs,
                                                           Int min_delta) {
    std::vector<DeltaPair> out;
    for (Int i = 0; i < static_cast<Int>(ps.size()); ++i)
        for (Int j = 0; j < static_cast<Int>(qs.size()); ++j) {
            Int d = delta_pairsum(ps[i], qs[j]);
            if (d >= min_delta) out.push_back({i, j, d});
        }
    return out;
}

std::vector<DeltaPair> collect_pairs_with_min_delta(std::span<const Partition> ps,
                                                    std::span<const Partition> qs, Int min_delta,
                                                    int jobs) {
    const Int np = static_cast<Int>(ps.size());
    std::vector<DeltaPair> out;
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#pragma omp parallel
    {
        std::vector<DeltaPair> local;
#pragma omp for schedule(static) nowait
        for (Int i = 0; i < np; ++i) {
            for (Int j = 0; j < static_cast<Int>(qs.size()); ++j) {
                Int d = delta_pairsum(ps[i], qs[j]);
                if (d >= min_delta) local.push_back({i, j, d});
            }
        }
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
    // Merge order is schedule-dependent; restore the canonical order.
    std::sort(out.begin(), out.end(), [](const DeltaPair& a, const DeltaPair& b) {
        return std::tie(a.pi, a.qi) < std::tie(b.pi, b.qi);
    });
#else
    (void)jobs;
    out = collect_pairs_with_min_delta_serial(ps, qs, min_delta);
#endif
    return out;
}

// -- genus-one enumeration ---------------------------------------------

GenusOneClass classify_config(const SurfaceConfig& cfg) {
    SurfaceConfig canonical = canonicalize(cfg);
    GenusOneClass cls;
    cls.rm = canonical.rm();
    cls.rn = canonical.rn();
    cls.r = canonical.r();
    cls.m = canonical.m();
    cls.n = canonical.n();
    cls.zeros_f = canonical.f.zeros;
    cls.zeros_g = canonical.g.zeros;
    cls.poles_f = canonical.f.poles;
    cls.poles_g = canonical.g.poles;
    cls.delta0 = delta_pairsum(cls.zeros_f, cls.zeros_g);
    cls.delta_inf = delta_pairsum(cls.poles_f, cls.poles_g);
    cls.delta_max = delta_max(cls.r, cls.m, cls.n);
    cls.defect0 = cls.delta_max - cls.delta0;
    cls.defect_inf = cls.delta_max - cls.delta_inf;
    return cls;
}

namespace {

constexpr Int kBruteDegreeGuard = 30;
constexpr Int kEnumerateDegreeGuard = 64;
constexpr Int kEnumeratePairGuard = 200'000'000;
constexpr Int kEnumerateJoinGuard = 5'000'000;

} // namespace

std::vector<GenusOneClass> enumerate_genus_one(Int rm, Int rn, const EnumerateOptions& opts) {
    if (rm < 1 || rm > rn) throw std::invalid_argument("enumerate_genus_one: need 1 <= rm <= rn");
    if (rn > kEnumerateDegreeGuard || partition_count(rm) * partition_count(rn) > kEnumeratePairGuard)
        throw GuardExceeded("enumerate_genus_one: bidegree too large for desk-scale search");

    const Int target = (rm - 1) * (rn - 1) - 1; // delta total forcing genus one
    if (target < 0) return {};

    const std::vector<Partition> ps = partitions_of(rm);
    const std::vector<Partition> qs = partitions_of(rn);
    const Int r = std::gcd(rm, rn);

    const Int max_delta = max_pair_delta(ps, qs, opts.jobs);
    if (target > 2 * max_delta) return {};
    const Int lo = std::max<Int>(0, target - max_delta);
    const std::vector<DeltaPair> pairs = collect_pairs_with_min_delta(ps, qs, lo, opts.jobs);

    std::map<Int, std::vector<const DeltaPair*>> buckets;
    for (const DeltaPair& p : pairs) buckets[p.delta].push_back(&p);

    Int join_size = 0;
    for (const auto& [dz, zero_side] : buckets) {
        auto it = buckets.find(target - dz);
        if (it != buckets.end())
            join_size += static_cast<Int>(zero_side.size()) * static_cast<Int>(it->second.size());
    }
    if (join_size > kEnumerateJoinGuard)
        throw GuardExceeded("enumerate_genus_one: class join too large for desk-scale output");

    std::set<GenusOneClass> classes;
    for (const auto& [dz, zero_side] : buckets) {
        if (opts.fast_defect_mode) {
            bool allowed = dz == max_delta || dz == max_delta - r ||
                           (r % 2 == 0 && dz == max_delta - r / 2);
            if (!allowed) continue;
        }
        auto it = buckets.find(target - dz);
        if (it == buckets.end()) continue;
        for (const DeltaPair* zp : zero_side) {
            for (const DeltaPair* pp : it->second) {
                SurfaceConfig cfg;
                cfg.f = FunctionDatum{ps[zp->pi], ps[pp->pi]};
                cfg.g = FunctionDatum{qs[zp->qi], qs[pp->qi]};
                if (global_parts_gcd(cfg) != 1) continue;
                if (opts.side_gcd_filter) {
                    if (zp->delta < max_delta && side_gcd(cfg.f.zeros, cfg.g.zeros, r) != 1)
                        continue;
                    if (pp->delta < max_delta && side_gcd(cfg.f.poles, cfg.g.poles, r) != 1)
                        continue;
                }
                GenusOneClass cls = classify_config(cfg);
                if (geometric_genus(cls.config()) != 1)
                    throw std::logic_error("enumerate_genus_one: genus recheck failed");
                classes.insert(std::move(cls));
            }
        }
    }
    return {classes.begin(), classes.end()};
}

Int brute_delta_max_serial(Int r, Int m, Int n) {
    if (r < 1 || m < 1 || n < 1 || std::gcd(m, n) != 1)
        throw std::invalid_argument("brute_delta_max: need r,m,n >= 1 with gcd(m,n) = 1");
    if (r * m > kBruteDegreeGuard || r * n > kBruteDegreeGuard)
        throw GuardExceeded("brute_delta_max: bidegree exceeds the search guard");
    const std::vector<Partition> ps = partitions_of(r * m);
    const std::vector<Partition> qs = partitions_of(r * n);
    return max_pair_delta_serial(ps, qs);
}

Int brute_delta_max(Int r, Int m, Int n, int jobs) {
    if (r < 1 || m < 1 || n < 1 || std::gcd(m, n) != 1)
        throw std::invalid_argument("brute_delta_max: need r,m,n >= 1 with gcd(m,n) = 1");
    if (r * m > kBruteDegreeGuard || r * n > kBruteDegreeGuard)
        throw GuardExceeded("brute_delta_max: bidegree exceeds the search guard");
    const std::vector<Partition> ps = partitions_of(r * m);
    const std::vector<Partition> qs = partitions_of(r * n);
    return max_pair_delta(ps, qs, jobs);
}

std::vector<std::pair<Int, Int>> exceptional_bidegrees(Int max_rn, int jobs) {
    if (max_rn < 1) throw std::invalid_argument("exceptional_bidegrees: max_rn must be >= 1");
    if (max_rn > kBruteDegreeGuard)
        throw GuardExceeded("exceptional_bidegrees: max_rn exceeds the search guard");
    EnumerateOptions opts;
    opts.side_gcd_filter = true;
    opts.jobs = jobs;
    std::vector<std::pair<Int, Int>> out;
    for (Int rm = 1; rm <= max_rn; ++rm)
        for (Int rn = rm; rn <= max_rn; ++rn) {
            for (const GenusOneClass& cls : enumerate_genus_one(rm, rn, opts)) {
                if (!cls.one_zero_one_pole()) {
                    out.emplace_back(rm, rn);
                    break;
                }
            }
        }
    return out;
}

Int count_configs_with_genus(Int rm, Int rn, Int genus_C, Int genus_D, Int genus, int jobs) {
    if (rm < 1 || rn < 1) throw std::invalid_argument("count_configs_with_genus: degrees >= 1");
    if (rm > kBruteDegreeGuard || rn > kBruteDegreeGuard)
        throw GuardExceeded("count_configs_with_genus: bidegree exceeds the search guard");
    const Int ga = rm * genus_D + rn * genus_C + (rm - 1) * (rn - 1);
    const Int target = ga - genus;
    if (target < 0) return 0;

    const std::vector<Partition> ps = partitions_of(rm);
    const std::vector<Partition> qs = partitions_of(rn);
    const Int max_delta = max_pair_delta(ps, qs, jobs);
    if (target > 2 * max_delta) return 0;
    const Int lo = std::max<Int>(0, target - max_delta);
    const std::vector<DeltaPair> pairs = collect_pairs_with_min_delta(ps, qs, lo, jobs);

    std::map<Int, std::vector<const DeltaPair*>> buckets;
    for (const DeltaPair& p : pairs) buckets[p.delta].push_back(&p);

    Int count = 0;
    for (const auto& [dz, zero_side] : buckets) {
        auto it = buckets.find(target - dz);
        if (it == buckets.end()) continue;
        for (const DeltaPair* zp : zero_side)
            for (const DeltaPair* pp : it->second) {
                SurfaceConfig cfg;
                cfg.f = FunctionDatum{ps[zp->pi], ps[pp->pi]};
                cfg.g = FunctionDatum{qs[zp->qi], qs[pp->qi]};
                cfg.genus_C = genus_C;
                cfg.genus_D = genus_D;
                if (!validate_config(cfg)) ++count;
            }
    }
    return count;
}

// -- family matching -----------------------------------------------------

namespace {

constexpr std::pair<Int, Int> kExceptionalBidegrees[] = {
    {2, 2}, {2, 4}, {2, 3}, {3, 3}, {3, 4}, {3, 6}, {4, 4}, {4, 6}, {5, 6},
};

// Part counts by residue behaviour modulo `mod`.
struct ResidueProfile {
    Int total = 0;
    std::map<Int, Int> by_residue;

    Int count(Int residue) const {
        auto it = by_residue.find(residue);
        return it == by_residue.end() ? 0 : it->second;
    }
    Int zero_mod() const { return count(0); }
};

ResidueProfile profile(const Partition& p, Int mod) {
    ResidueProfile pr;
    pr.total = p.size();
    for (Int x : p.parts()) ++pr.by_residue[x % mod];
    return pr;
}

bool only_residues(const ResidueProfile& pr, std::initializer_list<std::pair<Int, Int>> counts) {
    Int listed = 0;
    for (auto [res, cnt] : counts) {
        if (pr.count(res) != cnt) return false;
        if (res != 0) listed += cnt;
    }
    // everything else must sit in residue 0
    return pr.zero_mod() == pr.total - listed;
}

Int odd_count(const Partition& p) {
    Int c = 0;
    for (Int x : p.parts()) c += x % 2;
    return c;
}

std::string shape_string(const GenusOneClass& cls) {
    std::ostringstream os;
    auto s = cls.shape();
    os << "shape=(" << s[0] << "," << s[1] << "," << s[2] << "," << s[3] << ")";
    return os.str();
}

FamilyTag tag_of(FamilySource src, const std::string& params, int row = 0) {
    return FamilyTag{src, row, params};
}

// r = 1 patterns, one per (rm, rn mod rm) residue row.
FamilyTag match_r1(const GenusOneClass& cls) {
    const Int n = cls.rn;
    std::ostringstream params;
    switch (cls.rm) {
        case 2: {
            if (n % 2 == 1 && odd_count(cls.zeros_g) == 1 && odd_count(cls.poles_g) == 3) {
                params << "n=" << n << ", n mod 2 = 1";
                return tag_of(FamilySource::Families2_14_2n, params.str());
            }
            break;
        }
        case 3: {
            const Int res = n % 3; // 1 or 2 when r = 1
            const Int pole_res = res == 1 ? 2 : 1;
            if (only_residues(profile(cls.zeros_g, 3), {{res, 1}}) &&
                only_residues(profile(cls.poles_g, 3), {{pole_res, 2}})) {
                params << "n=" << n << ", n mod 3 = " << res;
                return tag_of(FamilySource::Families2_14_3n, params.str());
            }
            break;
        }
        case 4: {
            const Int res = n % 4; // 1 or 3
            const Int pole_res = res == 1 ? 3 : 1;
            if (only_residues(profile(cls.zeros_g, 4), {{res, 1}}) &&
                only_residues(profile(cls.poles_g, 4), {{pole_res, 1}, {2, 1}})) {
                params << "n=" << n << ", n mod 4 = " << res;
                return tag_of(FamilySource::Families2_14_4n, params.str());
            }
            break;
        }
        case 6: {
            const Int res = n % 6; // 1 or 5
            const Int pole_even = res == 1 ? 4 : 2;
            if (only_residues(profile(cls.zeros_g, 6), {{res, 1}}) &&
                only_residues(profile(cls.poles_g, 6), {{3, 1}, {pole_even, 1}})) {
                params << "n=" << n << ", n mod 6 = " << res;
                return tag_of(FamilySource::Families2_14_6n, params.str());
            }
            break;
        }
        default: break;
    }
    return tag_of(FamilySource::Unmatched, "");
}

FamilyTag match_r_big(const GenusOneClass& cls) {
    std::ostringstream params;
    if (cls.rm == 2 && cls.r == 2) {
        if (cls.balanced() && odd_count(cls.zeros_g) == 2 && odd_count(cls.poles_g) == 2) {
            params << "n=" << cls.rn / 2;
            return tag_of(FamilySource::Prop2_4_2_2n, params.str());
        }
        if (odd_count(cls.zeros_g) == 0 && odd_count(cls.poles_g) == 4) {
            params << "n=" << cls.rn / 2;
            return tag_of(FamilySource::Prop2_15_2_2n, params.str());
        }
    }
    if (cls.rm == 3 && cls.r == 3) {
        if (only_residues(profile(cls.zeros_g, 3), {}) &&
            only_residues(profile(cls.poles_g, 3), {{1, 3}})) {
            params << "n=" << cls.rn / 3;
            return tag_of(FamilySource::Prop2_15_3_3n, params.str());
        }
    }
    if (cls.rm == 4 && cls.r == 4) {
        // gp: one part 2 mod 4 and two odd parts (1 or 3 mod 4), rest 0 mod 4
        auto gp = profile(cls.poles_g, 4);
        if (only_residues(profile(cls.zeros_g, 4), {}) && gp.count(2) == 1 &&
            gp.count(1) + gp.count(3) == 2 && gp.zero_mod() == cls.poles_g.size() - 3) {
            params << "n=" << cls.rn / 4;
            return tag_of(FamilySource::Prop2_15_4_4n, params.str());
        }
    }
    if (cls.rm == 6 && cls.r == 6) {
        if (only_residues(profile(cls.zeros_g, 6), {}) &&
            only_residues(profile(cls.poles_g, 6), {{3, 1}, {2, 1}, {1, 1}})) {
            params << "n=" << cls.rn / 6;
            return tag_of(FamilySource::Prop2_15_6_6n, params.str());
        }
    }
    if (cls.rm == 6 && cls.r == 2 && cls.rn % 6 == 2) {
        if (only_residues(profile(cls.zeros_g, 6), {{2, 1}}) &&
            only_residues(profile(cls.poles_g, 6), {{3, 1}, {5, 1}})) {
            params << "s=" << (cls.rn - 2) / 6;
            return tag_of(FamilySource::Prop2_15_6_6s2, params.str());
        }
    }
    if (cls.rm == 6 && cls.r == 2 && cls.rn % 6 == 4) {
        if (only_residues(profile(cls.zeros_g, 6), {{4, 1}}) &&
            only_residues(profile(cls.poles_g, 6), {{3, 1}, {1, 1}})) {
            params << "s=" << (cls.rn - 4) / 6;
            return tag_of(FamilySource::Prop2_15_6_6s4, params.str());
        }
    }
    if (cls.rm == 6 && cls.r == 3 && cls.rn % 6 == 3) {
        if (only_residues(profile(cls.zeros_g, 6), {{3, 1}}) &&
            only_residues(profile(cls.poles_g, 6), {{2, 1}, {1, 1}})) {
            params << "s=" << (cls.rn - 3) / 6;
            return tag_of(FamilySource::Prop2_15_6_6s3, params.str());
        }
    }
    if (cls.rm == 4 && cls.r == 2 && cls.rn % 4 == 2) {
        if (only_residues(profile(cls.zeros_g, 4), {{2, 1}}) && odd_count(cls.poles_g) == 2 &&
            profile(cls.poles_g, 4).zero_mod() == cls.poles_g.size() - 2) {
            params << "s=" << (cls.rn - 2) / 4;
            return tag_of(FamilySource::Prop2_15_4_4s2, params.str());
        }
    }
    return tag_of(FamilySource::Unmatched, "");
}

} // namespace

std::span<const std::pair<Int, Int>> exceptional_table_bidegrees() {
    return kExceptionalBidegrees;
}

FamilyTag match_family(const GenusOneClass& cls) {
    if (!cls.one_zero_one_pole()) {
        auto table = exceptional_table_bidegrees();
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (table[i] == std::pair{cls.rm, cls.rn})
                return tag_of(FamilySource::Exceptional2_16, shape_string(cls),
                              static_cast<int>(i) + 1);
        }
        return tag_of(FamilySource::Unmatched, "");
    }
    if (cls.r > 1) {
        if (FamilyTag t = match_r_big(cls); t.source != FamilySource::Unmatched) return t;
        return tag_of(FamilySource::Unmatched, "");
    }
    return match_r1(cls);
}

std::string to_string(FamilySource source) {
    switch (source) {
        case FamilySource::Prop2_4_2_2n: return "prop2.4-(2,2n)";
        case FamilySource::Families2_14_2n: return "families2.14-(2,n)";
        case FamilySource::Families2_14_3n: return "families2.14-(3,n)";
        case FamilySource::Families2_14_4n: return "families2.14-(4,n)";
        case FamilySource::Families2_14_6n: return "families2.14-(6,n)";
        case FamilySource::Prop2_15_2_2n: return "prop2.15-(2,2n)";
        case FamilySource::Prop2_15_3_3n: return "prop2.15-(3,3n)";
        case FamilySource::Prop2_15_4_4n: return "prop2.15-(4,4n)";
        case FamilySource::Prop2_15_6_6n: return "prop2.15-(6,6n)";
        case FamilySource::Prop2_15_6_6s2: return "prop2.15-(6,6s+2)";
        case FamilySource::Prop2_15_6_6s3: return "prop2.15-(6,6s+3)";
        case FamilySource::Prop2_15_6_6s4: return "prop2.15-(6,6s+4)";
        case FamilySource::Prop2_15_4_4s2: return "prop2.15-(4,4s+2)";
        case FamilySource::Exceptional2_16: return "exceptional2.16";
        case FamilySource::Unmatched: return "unmatched";
    }
    return "?";
}

std::string to_string(const FamilyTag& tag) {
    std::string s = to_string(tag.source);
    if (tag.source == FamilySource::Exceptional2_16) s += "-row-" + std::to_string(tag.row);
    return s;
}

} // namespace tfg
