#include "tfg/genus.hpp"

namespace tfg {

Int arithmetic_genus(const SurfaceConfig& cfg) {
    Int rm = cfg.rm(), rn = cfg.rn();
    return rm * cfg.genus_D + rn * cfg.genus_C + (rm - 1) * (rn - 1);
}

Int geometric_genus(const SurfaceConfig& cfg) {
    return arithmetic_genus(cfg) - delta_pairsum(cfg.f.zeros, cfg.g.zeros) -
           delta_pairsum(cfg.f.poles, cfg.g.poles);
}

Int delta_max(Int r, Int m, Int n) {
    if (r < 1 || m < 1 || n < 1) throw std::invalid_argument("delta_max: arguments must be >= 1");
    if (std::gcd(m, n) != 1) throw std::invalid_argument("delta_max: m and n must be coprime");
    Int num = r * r * m * n - r * m - r * n + r;
    assert(num % 2 == 0);
    return num / 2;
}

GenusReport genus_report(const SurfaceConfig& cfg) {
    GenusReport rep;
    rep.rm = cfg.rm();
    rep.rn = cfg.rn();
    rep.r = cfg.r();
    rep.m = cfg.m();
    rep.n = cfg.n();
    rep.arithmetic_genus = arithmetic_genus(cfg);
    rep.delta0 = delta_pairsum(cfg.f.zeros, cfg.g.zeros);
    rep.delta_inf = delta_pairsum(cfg.f.poles, cfg.g.poles);
    rep.delta_max = delta_max(rep.r, rep.m, rep.n);
    if (cfg.genus_C == 0 && cfg.genus_D == 0) {
        rep.defect0 = rep.delta_max - rep.delta0;
        rep.defect_inf = rep.delta_max - rep.delta_inf;
    }
    rep.geometric_genus = rep.arithmetic_genus - rep.delta0 - rep.delta_inf;
    return rep;
}

} // namespace tfg
