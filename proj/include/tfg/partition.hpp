#pragma once

#include <cassert>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "tfg/common.hpp"

namespace tfg {

// Multiset of positive integer multiplicities (orders of zeros or poles),
// stored in nonincreasing order with a cached total.
class Partition {
public:
    Partition() = default;

    // Canonicalizes the part order; rejects parts < 1.
    explicit Partition(std::vector<Int> parts);

    Partition(std::initializer_list<Int> parts)
        : Partition(std::vector<Int>(parts)) {}

    const std::vector<Int>& parts() const { return parts_; }
    Int sum() const { return sum_; }
    Int size() const { return static_cast<Int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition&) const = default;

    // Total order used for canonical representatives: fewer parts first,
    // then lexicographic on the nonincreasing part sequence.
    std::strong_ordering operator<=>(const Partition& o) const {
        if (auto c = parts_.size() <=> o.parts_.size(); c != 0) return c;
        return parts_ <=> o.parts_;
    }

private:
    std::vector<Int> parts_;
    Int sum_ = 0;
};

// Local genus-drop contribution of a zero of order a meeting a zero of
// order b: ((a-1)(b-1) + gcd(a,b) - 1) / 2. The numerator is even for all
// a, b >= 1, so the division is exact.
inline Int delta(Int a, Int b) {
    assert(a >= 1 && b >= 1);
    Int num = (a - 1) * (b - 1) + std::gcd(a, b) - 1;
    assert(num % 2 == 0);
    return num / 2;
}

// Sum of delta over all ordered pairs (p, q), counting multiplicity.
Int delta_pairsum(const Partition& p, const Partition& q);

// Streams the partitions of n in descending lexicographic order:
// [n] first, [1,1,...,1] last. n = 0 yields the single empty partition.
class PartitionGenerator {
public:
    explicit PartitionGenerator(Int n);
    // Fills `out` with the next partition; false once exhausted.
    bool next(Partition& out);

private:
    std::vector<Int> cur_;
    bool done_ = false;
    bool first_ = true;
};

// All partitions of n, in generator order.
std::vector<Partition> partitions_of(Int n);

// p(n), the number of partitions of n.
Int partition_count(Int n);

// "[3,1]" (pretty) and "[3 1]" (csv-safe) renderings.
std::string bracket(const Partition& p);
std::string bracket_spaced(const Partition& p);

} // namespace tfg
