#include "tfg/rank.hpp"

#include <sstream>

#include "tfg/genus.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tfg {

std::string to_string(KnownState s) {
    return s == KnownState::KnownZero ? "known" : "unknown";
}

Int component_count(Int d, const FunctionDatum& fd) {
    if (d < 1) throw std::invalid_argument("component_count: d must be >= 1");
    return gcd_of(fd.zeros.parts(), gcd_of(fd.poles.parts(), d));
}

namespace {

void check_tower_preconditions(const SurfaceConfig& cfg, Int d) {
    if (d < 1) throw std::invalid_argument("tower invariants are defined for d >= 1");
    if (cfg.genus_C != 0 || cfg.genus_D != 0)
        throw std::invalid_argument("tower invariants require rational base curves");
    if (cfg.characteristic > 0 && std::gcd(d, cfg.characteristic) != 1)
        throw std::invalid_argument("d must be coprime to the characteristic");
}

Int gcd3(Int a, Int b, Int c) { return std::gcd(a, std::gcd(b, c)); }

Int cross_gcd_sum(const Partition& p, const Partition& q, Int d) {
    Int s = 0;
    for (Int a : p.parts())
        for (Int b : q.parts()) s += gcd3(a, b, d);
    return s;
}

Int side_gcd_sum(const Partition& p, Int e) {
    Int s = 0;
    for (Int a : p.parts()) s += std::gcd(a, e);
    return s;
}

} // namespace

Int c2_general(const SurfaceConfig& cfg, Int d) {
    check_tower_preconditions(cfg, d);
    const Int e_df = component_count(d, cfg.f);
    const Int e_dg = component_count(d, cfg.g);
    return cross_gcd_sum(cfg.f.zeros, cfg.g.zeros, d) +
           cross_gcd_sum(cfg.f.poles, cfg.g.poles, d) - side_gcd_sum(cfg.f.zeros, e_dg) -
           side_gcd_sum(cfg.g.zeros, e_df) - side_gcd_sum(cfg.f.poles, e_dg) -
           side_gcd_sum(cfg.g.poles, e_df) + 2;
}

Int c2_onepole(const SurfaceConfig& cfg, Int d) {
    check_tower_preconditions(cfg, d);
    if (cfg.f.zeros.size() != 1 || cfg.f.poles.size() != 1)
        throw std::invalid_argument("c2_onepole: f must have exactly one zero and one pole");
    const Int rm = cfg.rm();
    Int all_g = 0; // gcd of every zero and pole order of g
    all_g = gcd_of(cfg.g.zeros.parts(), gcd_of(cfg.g.poles.parts(), all_g));
    Int total = 0;
    for (Int b : cfg.g.zeros.parts()) total += gcd3(rm, b, d);
    for (Int b : cfg.g.poles.parts()) total += gcd3(rm, b, d);
    for (Int b : cfg.g.zeros.parts()) total -= gcd3(d, b, rm);
    total -= gcd3(d, all_g, rm);
    for (Int b : cfg.g.poles.parts()) total -= gcd3(d, b, rm);
    total -= gcd3(d, all_g, rm);
    return total + 2;
}

KnownState c1_invariant(const SurfaceConfig& cfg) {
    return (cfg.f.zeros.size() == 1 && cfg.f.poles.size() == 1) ? KnownState::KnownZero
                                                                : KnownState::Unknown;
}

RankReport mw_rank(const SurfaceConfig& cfg, Int d, std::vector<std::string>* warnings) {
    check_tower_preconditions(cfg, d);
    RankReport rep;
    rep.d = d;
    rep.e_df = component_count(d, cfg.f);
    rep.e_dg = component_count(d, cfg.g);
    rep.c2 = c2_general(cfg, d);
    rep.c1 = c1_invariant(cfg);
    rep.hom_rank = rep.c1; // trivial Jacobian in exactly the same case
    if (warnings) {
        if (Int g = geometric_genus(cfg); g != 1) {
            std::ostringstream os;
            os << "geometric genus is " << g << ", not 1; the Mordell-Weil reading applies to "
               << "genus-one fibers only";
            warnings->push_back(os.str());
        }
    }
    if (rep.c1 == KnownState::KnownZero && rep.hom_rank == KnownState::KnownZero)
        rep.mw_rank = rep.c2;
    return rep;
}

std::vector<Int> c2_sweep_serial(const SurfaceConfig& cfg, Int d_lo, Int d_hi) {
    if (d_lo < 1 || d_hi < d_lo) throw std::invalid_argument("c2_sweep: need 1 <= d_lo <= d_hi");
    std::vector<Int> out(static_cast<std::size_t>(d_hi - d_lo + 1));
    for (Int d = d_lo; d <= d_hi; ++d) out[static_cast<std::size_t>(d - d_lo)] = c2_general(cfg, d);
    return out;
}

std::vector<Int> c2_sweep(const SurfaceConfig& cfg, Int d_lo, Int d_hi, int jobs) {
    if (d_lo < 1 || d_hi < d_lo) throw std::invalid_argument("c2_sweep: need 1 <= d_lo <= d_hi");
    const Int count = d_hi - d_lo + 1;
    std::vector<Int> out(static_cast<std::size_t>(count));
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#pragma omp parallel for schedule(static)
#endif
    for (Int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = c2_general(cfg, d_lo + i);
    (void)jobs;
    return out;
}

Int c2_period(const SurfaceConfig& cfg, int jobs) {
    check_tower_preconditions(cfg, 1);
    const Int L = parts_lcm(cfg);
    constexpr Int kPeriodSweepGuard = 2'000'000;
    if (L > kPeriodSweepGuard)
        throw GuardExceeded("c2_period: lcm of multiplicities exceeds the sweep guard");
    const std::vector<Int> vals = c2_sweep(cfg, 1, L, jobs);
    auto at = [&](Int d) { return vals[static_cast<std::size_t>((d - 1) % L)]; };
    for (Int p = 1; p <= L; ++p) {
        if (L % p != 0) continue;
        bool ok = true;
        for (Int d = 1; d <= L && ok; ++d) ok = at(d) == at(d + p);
        if (ok) return p;
    }
    return L; // unreachable: p = L always verifies
}

} // namespace tfg
