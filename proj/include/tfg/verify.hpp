#pragma once

#include <string>
#include <vector>

#include "tfg/classify.hpp"

namespace tfg {

struct TableDiff {
    std::string table;
    int matched = 0;
    int total = 0;
    std::vector<std::string> missing; // table rows the search did not produce (hard failure)
    std::vector<std::string> extras;  // computed classes outside the table (informational)

    bool ok() const { return missing.empty(); }
    std::string summary() const;
};

// prop2.4, prop2.8 .. prop2.12, families2.14, prop2.15, exceptional2.16.
const std::vector<std::string>& known_tables();

// Compares the embedded golden copy of one table against a fresh
// enumeration. Throws std::invalid_argument for unknown ids.
TableDiff verify_table(const std::string& id, int jobs = 0);

// Family instances used by the parametric table checks: each family at its
// three smallest admissible degrees.
struct FamilyInstance {
    FamilyTag expected;
    SurfaceConfig config;
};
std::vector<FamilyInstance> parametric_family_instances();

} // namespace tfg
