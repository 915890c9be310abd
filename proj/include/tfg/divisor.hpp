#pragma once

#include <optional>
#include <string>

#include "tfg/partition.hpp"

namespace tfg {

// Paired zero/pole multiplicities of one rational function on a base curve.
struct FunctionDatum {
    Partition zeros;
    Partition poles;

    Int degree() const { return zeros.sum(); }
    bool operator==(const FunctionDatum&) const = default;
    auto operator<=>(const FunctionDatum&) const = default;
};

// Full input for the surface t*f(x) = g(y): the two function data, the base
// curve genera, and the field characteristic (0 = characteristic zero; kept
// as validation metadata only).
struct SurfaceConfig {
    FunctionDatum f;
    FunctionDatum g;
    Int genus_C = 0;
    Int genus_D = 0;
    Int characteristic = 0;

    Int rm() const { return f.degree(); }
    Int rn() const { return g.degree(); }
    Int r() const { return std::gcd(rm(), rn()); }
    Int m() const { return rm() / r(); }
    Int n() const { return rn() / r(); }

    bool operator==(const SurfaceConfig&) const = default;
    auto operator<=>(const SurfaceConfig&) const = default;
};

enum class ValidationKind {
    DegreeMismatch,
    CommonDivisor,
    CharacteristicDivides,
    EmptyPartition,
};

struct ValidationError {
    ValidationKind kind;
    std::string detail;
};

std::string to_string(ValidationKind kind);

// Checks the validity hypotheses: per-function degree balance, no common
// divisor across all four partitions, and (in characteristic p > 0) every
// part coprime to p. Returns the first violation, nullopt when valid.
std::optional<ValidationError> validate_config(const SurfaceConfig& cfg);

// gcd over all parts of all four partitions.
Int global_parts_gcd(const SurfaceConfig& cfg);

// gcd of two partitions' parts together with an extra value.
Int side_gcd(const Partition& a, const Partition& b, Int extra);

// lcm over all parts of all four partitions.
Int parts_lcm(const SurfaceConfig& cfg);

} // namespace tfg
