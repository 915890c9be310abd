#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tfg/divisor.hpp"

namespace tfg {

// A point label: an exact rational written as an integer or "p/q", or a
// symbolic parameter name.
using Label = std::string;

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Point assignments for one configuration. Each list pairs one-to-one with
// the corresponding partition's parts, in stored (nonincreasing) order.
// Constraints are inequations lhs != rhs between labels.
struct ModelSpec {
    std::vector<Label> f_zero_points;
    std::vector<Label> f_pole_points;
    std::vector<Label> g_zero_points;
    std::vector<Label> g_pole_points;
    std::vector<std::pair<Label, Label>> constraints;

    bool operator==(const ModelSpec&) const = default;
};

// Default assignment: zeros at 0, 1, 2, ..., poles at -1, -2, ...; no
// constraints (the labels are pairwise distinct rationals).
ModelSpec default_points(const SurfaceConfig& cfg);

// Renders the cleared-denominator equation
//   t.(f zero factors).(g pole factors) = (f pole factors).(g zero factors)
// in a fixed grammar: "MIDDLE DOT" separators, caret exponents (omitted when
// 1), bare x^e / y^e for the label 0, ASCII minus. Byte-deterministic.
// Errors: duplicate labels, count mismatch, constraint violated by exact
// rational labels.
std::string emit_model(const SurfaceConfig& cfg, const ModelSpec& spec);

struct ParsedModel {
    SurfaceConfig config;
    ModelSpec spec;
};

// Inverse of emit_model on its output grammar.
ParsedModel parse_equation(const std::string& equation);

struct CatalogRow {
    int row = 0;
    Int rm = 0, rn = 0;
    SurfaceConfig config;
    ModelSpec spec;
    std::string equation;
};

// The nine exceptional genus-one families, with partition data and side
// conditions read off their defining equations.
const std::vector<CatalogRow>& family_catalog();

} // namespace tfg
