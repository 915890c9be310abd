#pragma once

#include <optional>
#include <vector>

#include "tfg/divisor.hpp"

namespace tfg {

enum class KnownState { KnownZero, Unknown };

std::string to_string(KnownState s);

struct RankReport {
    Int d = 1;
    Int e_df = 1;
    Int e_dg = 1;
    Int c2 = 0;
    KnownState c1 = KnownState::Unknown;
    KnownState hom_rank = KnownState::Unknown;
    // Engaged exactly when c1 and hom_rank are both KnownZero; then the
    // value is c2.
    std::optional<Int> mw_rank;
};

// Number of irreducible components of the cyclic cover w^d = f(x):
// gcd(d, all zero and pole orders of fd).
Int component_count(Int d, const FunctionDatum& fd);

// The tower invariant
//   c2(d) = sum_{i,j} gcd(m_i, n_j, d) + sum_{i',j'} gcd(m'_i', n'_j', d)
//         - sum_i gcd(m_i, e_dg) - sum_j gcd(n_j, e_df)
//         - sum_i' gcd(m'_i', e_dg) - sum_j' gcd(n'_j', e_df) + 2.
// Requires d >= 1, rational base curves, and gcd(d, characteristic) = 1.
Int c2_general(const SurfaceConfig& cfg, Int d);

// Independent evaluation specialized to f with one zero and one pole; must
// agree with c2_general there (and the value is 0). Rejects other shapes.
Int c2_onepole(const SurfaceConfig& cfg, Int d);

// KnownZero when f has exactly one zero and one pole; the general
// fiber-component count is out of scope otherwise.
KnownState c1_invariant(const SurfaceConfig& cfg);

// Assembles the tower rank report for the extension of degree d. When f has
// one zero and one pole the Jacobian factor is trivial and the rank is the
// (zero) value of c2; otherwise the rank is reported Unknown with the
// component invariants still filled in. Appends a note to `warnings` when
// the configuration is not genus one.
RankReport mw_rank(const SurfaceConfig& cfg, Int d, std::vector<std::string>* warnings = nullptr);

// Minimal P >= 1 with c2(d) = c2(d + P) for all d >= 1, found by sweeping
// one full period L = lcm of all parts; P divides L.
Int c2_period(const SurfaceConfig& cfg, int jobs = 0);

// c2 over d in [d_lo, d_hi], parallel kernel plus serial reference.
std::vector<Int> c2_sweep(const SurfaceConfig& cfg, Int d_lo, Int d_hi, int jobs = 0);
std::vector<Int> c2_sweep_serial(const SurfaceConfig& cfg, Int d_lo, Int d_hi);

} // namespace tfg
