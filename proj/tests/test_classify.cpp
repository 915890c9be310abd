#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tfg/classify.hpp"
#include "tfg/verify.hpp"

using namespace tfg;

namespace {

SurfaceConfig make(std::vector<Int> fz, std::vector<Int> fp, std::vector<Int> gz,
                   std::vector<Int> gp) {
    SurfaceConfig cfg;
    cfg.f = FunctionDatum{Partition(std::move(fz)), Partition(std::move(fp))};
    cfg.g = FunctionDatum{Partition(std::move(gz)), Partition(std::move(gp))};
    return cfg;
}

bool contains(const std::vector<GenusOneClass>& classes, const SurfaceConfig& cfg) {
    SurfaceConfig canon = canonicalize(cfg);
    return std::any_of(classes.begin(), classes.end(),
                       [&](const GenusOneClass& c) { return c.config() == canon; });
}

} // namespace

TEST_CASE("canonicalize orients the maximal-delta side to the zeros") {
    SurfaceConfig cfg = make({1, 1}, {2}, {2, 1}, {3});
    SurfaceConfig canon = canonicalize(cfg);
    CHECK(canon == make({2}, {1, 1}, {3}, {2, 1}));
}

TEST_CASE("canonicalize is idempotent and constant on symmetry orbits") {
    std::vector<SurfaceConfig> samples = {
        make({2}, {1, 1}, {3}, {2, 1}),   make({3}, {1, 1, 1}, {3}, {1, 1, 1}),
        make({4}, {2, 2}, {4}, {2, 1, 1}), make({2}, {2}, {3, 1}, {3, 1}),
        make({5}, {3, 2}, {5, 1}, {6}),
    };
    for (const SurfaceConfig& cfg : samples) {
        SurfaceConfig canon = canonicalize(cfg);
        CHECK(canonicalize(canon) == canon);
        // generator (i): swap zeros and poles on both functions
        SurfaceConfig zp = cfg;
        std::swap(zp.f.zeros, zp.f.poles);
        std::swap(zp.g.zeros, zp.g.poles);
        CHECK(canonicalize(zp) == canon);
        // generator (ii): exchange f and g
        SurfaceConfig fg = cfg;
        std::swap(fg.f, fg.g);
        CHECK(canonicalize(fg) == canon);
    }
}

TEST_CASE("canonicalize prefers the one-zero-one-pole orientation on square bidegrees") {
    SurfaceConfig canon = canonicalize(make({1, 1}, {1, 1}, {2}, {2}));
    CHECK(canon == make({2}, {2}, {1, 1}, {1, 1}));
}

TEST_CASE("enumerate_genus_one at (5,6)") {
    auto classes = enumerate_genus_one(5, 6);
    REQUIRE(classes.size() == 2);
    CHECK(contains(classes, make({5}, {3, 2}, {6}, {6})));
    CHECK(contains(classes, make({5}, {3, 2}, {5, 1}, {6})));
}

TEST_CASE("enumerate_genus_one at (3,3) finds the three classes") {
    auto classes = enumerate_genus_one(3, 3);
    REQUIRE(classes.size() == 3);
    CHECK(contains(classes, make({3}, {3}, {3}, {1, 1, 1})));
    CHECK(contains(classes, make({3}, {2, 1}, {3}, {1, 1, 1})));
    CHECK(contains(classes, make({3}, {1, 1, 1}, {3}, {1, 1, 1})));
}

TEST_CASE("enumerate_genus_one at (7,9) is empty") {
    CHECK(enumerate_genus_one(7, 9).empty());
}

TEST_CASE("enumerate_genus_one guards oversized outputs") {
    // thin bidegrees join combinatorially many classes
    CHECK_THROWS_AS(enumerate_genus_one(2, 49), GuardExceeded);
    CHECK_THROWS_AS(enumerate_genus_one(2, 65), GuardExceeded);
}

TEST_CASE("bucket enumeration agrees with a direct scan over all configurations") {
    for (auto [rm, rn] : {std::pair<Int, Int>{2, 2}, {3, 3}, {2, 4}, {4, 4}, {5, 5}, {4, 6}}) {
        std::set<SurfaceConfig> direct;
        auto ps = partitions_of(rm);
        auto qs = partitions_of(rn);
        for (const Partition& fz : ps)
            for (const Partition& fp : ps)
                for (const Partition& gz : qs)
                    for (const Partition& gp : qs) {
                        SurfaceConfig cfg;
                        cfg.f = FunctionDatum{fz, fp};
                        cfg.g = FunctionDatum{gz, gp};
                        if (validate_config(cfg)) continue;
                        if (geometric_genus(cfg) != 1) continue;
                        direct.insert(canonicalize(cfg));
                    }
        std::set<SurfaceConfig> bucketed;
        for (const GenusOneClass& cls : enumerate_genus_one(rm, rn))
            bucketed.insert(cls.config());
        CHECK(direct == bucketed);
    }
}

TEST_CASE("every enumerated class is genus one with defects summing to r") {
    for (Int rm = 1; rm <= 8; ++rm)
        for (Int rn = rm; rn <= 8; ++rn)
            for (const GenusOneClass& cls : enumerate_genus_one(rm, rn)) {
                CHECK(geometric_genus(cls.config()) == 1);
                CHECK(cls.defect0 + cls.defect_inf == cls.r);
                CHECK(cls.defect0 <= cls.defect_inf);
                CHECK(!validate_config(cls.config()));
            }
}

TEST_CASE("fast defect mode agrees with the exhaustive split") {
    for (auto [rm, rn] :
         {std::pair<Int, Int>{2, 2}, {3, 3}, {2, 4}, {4, 6}, {6, 6}, {5, 6}, {5, 5}, {7, 7}, {6, 12}}) {
        EnumerateOptions fast;
        fast.fast_defect_mode = true;
        CHECK(enumerate_genus_one(rm, rn, fast) == enumerate_genus_one(rm, rn));
    }
}

TEST_CASE("canonicalize is orbit-constant on random configurations") {
    std::mt19937_64 rng(42);
    auto rand_partition = [&](Int total) {
        std::vector<Int> parts;
        while (total > 0) {
            Int part = 1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(total));
            parts.push_back(part);
            total -= part;
        }
        return Partition(parts);
    };
    for (int trial = 0; trial < 500; ++trial) {
        Int rm = 1 + static_cast<Int>(rng() % 9);
        Int rn = 1 + static_cast<Int>(rng() % 9);
        SurfaceConfig cfg;
        cfg.f = FunctionDatum{rand_partition(rm), rand_partition(rm)};
        cfg.g = FunctionDatum{rand_partition(rn), rand_partition(rn)};
        SurfaceConfig canon = canonicalize(cfg);
        CHECK(canonicalize(canon) == canon);
        CHECK(canon.rm() <= canon.rn());
        CHECK(delta_pairsum(canon.f.zeros, canon.g.zeros) >=
              delta_pairsum(canon.f.poles, canon.g.poles));
        SurfaceConfig zp = cfg;
        std::swap(zp.f.zeros, zp.f.poles);
        std::swap(zp.g.zeros, zp.g.poles);
        CHECK(canonicalize(zp) == canon);
        SurfaceConfig fg = cfg;
        std::swap(fg.f, fg.g);
        CHECK(canonicalize(fg) == canon);
    }
}

TEST_CASE("parametric table checks hold") {
    CHECK(verify_table("prop2.4").ok());
    CHECK(verify_table("prop2.15").ok());
    CHECK(verify_table("exceptional2.16").ok());
    CHECK_THROWS_AS(verify_table("prop9000"), std::invalid_argument);
}

TEST_CASE("side gcd filter leaves the genus-one sets unchanged at small bidegrees") {
    for (auto [rm, rn] : {std::pair<Int, Int>{2, 2}, {3, 3}, {4, 4}, {4, 6}, {3, 6}, {6, 6}}) {
        EnumerateOptions filtered;
        filtered.side_gcd_filter = true;
        CHECK(enumerate_genus_one(rm, rn, filtered) == enumerate_genus_one(rm, rn));
    }
}

TEST_CASE("kernel outputs do not depend on partition generation order") {
    auto ps = partitions_of(6);
    auto qs = partitions_of(8);
    Int reference = max_pair_delta_serial(ps, qs);
    auto pairs_ref = collect_pairs_with_min_delta_serial(ps, qs, reference - 2);

    CHECK(max_pair_delta(ps, qs) == reference);
    CHECK(collect_pairs_with_min_delta(ps, qs, reference - 2) == pairs_ref);

    // shuffled inputs reach the same maximum
    std::mt19937 rng(7);
    auto shuffled = ps;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(max_pair_delta(shuffled, qs) == reference);
}

TEST_CASE("brute_delta_max agrees with the closed form") {
    CHECK(brute_delta_max(1, 2, 3) == 1);
    CHECK(brute_delta_max(2, 1, 2) == 2);
    CHECK(brute_delta_max(3, 1, 1) == 3);
    for (Int r = 1; r <= 12; ++r)
        for (Int m = 1; r * m <= 12; ++m)
            for (Int n = 1; r * n <= 12; ++n) {
                if (std::gcd(m, n) != 1) continue;
                CHECK(brute_delta_max(r, m, n) == delta_max(r, m, n));
                CHECK(brute_delta_max_serial(r, m, n) == delta_max(r, m, n));
            }
    CHECK_THROWS_AS(brute_delta_max(1, 7, 31), GuardExceeded);
}

TEST_CASE("exceptional bidegrees at desk scale") {
    // The nine table bidegrees plus the square sporadics the exhaustive
    // search turns up: (5,5) via [5][5],[3,2][4,1] and (7,7) via
    // [7][7],[4,3][6,1].
    const std::vector<std::pair<Int, Int>> expected = {{2, 2}, {2, 3}, {2, 4}, {3, 3},
                                                       {3, 4}, {3, 6}, {4, 4}, {4, 6},
                                                       {5, 5}, {5, 6}, {7, 7}};
    CHECK(exceptional_bidegrees(10) == expected);
    CHECK(exceptional_bidegrees(2) == std::vector<std::pair<Int, Int>>{{2, 2}});
    CHECK_THROWS_AS(exceptional_bidegrees(31), GuardExceeded);

    auto fives = enumerate_genus_one(5, 5);
    CHECK(contains(fives, make({5}, {3, 2}, {5}, {4, 1})));
    CHECK(geometric_genus(make({5}, {3, 2}, {5}, {4, 1})) == 1);
    auto sevens = enumerate_genus_one(7, 7);
    CHECK(contains(sevens, make({7}, {4, 3}, {7}, {6, 1})));
    CHECK(geometric_genus(make({7}, {4, 3}, {7}, {6, 1})) == 1);
}

TEST_CASE("match_family on spec rows") {
    auto tag_for = [](const SurfaceConfig& cfg) { return match_family(classify_config(cfg)); };

    FamilyTag row3 = tag_for(make({2}, {1, 1}, {3}, {2, 1}));
    CHECK(row3.source == FamilySource::Exceptional2_16);
    CHECK(row3.row == 3);

    FamilyTag f2n = tag_for(make({2}, {2}, {9}, {7, 1, 1}));
    CHECK(f2n.source == FamilySource::Families2_14_2n);
    CHECK(to_string(f2n) == "families2.14-(2,n)");

    FamilyTag row4 = tag_for(make({3}, {1, 1, 1}, {3}, {1, 1, 1}));
    CHECK(row4.source == FamilySource::Exceptional2_16);
    CHECK(row4.row == 4);

    FamilyTag balanced = tag_for(make({2}, {2}, {1, 1}, {1, 1}));
    CHECK(balanced.source == FamilySource::Prop2_4_2_2n);

    FamilyTag t33 = tag_for(make({3}, {3}, {3}, {1, 1, 1}));
    CHECK(t33.source == FamilySource::Prop2_15_3_3n);

    FamilyTag unmatched = tag_for(make({3}, {3}, {3, 3}, {2, 2, 2}));
    CHECK(unmatched.source == FamilySource::Unmatched);
}

TEST_CASE("parametric family instances are genus one, enumerated and matched") {
    for (const FamilyInstance& inst : parametric_family_instances()) {
        CAPTURE(to_string(inst.expected.source));
        CAPTURE(inst.expected.parameters);
        CHECK(!validate_config(inst.config));
        CHECK(geometric_genus(inst.config) == 1);
        GenusOneClass cls = classify_config(inst.config);
        auto classes = enumerate_genus_one(cls.rm, cls.rn);
        CHECK(contains(classes, inst.config));
        CHECK(match_family(cls).source == inst.expected.source);
    }
}

TEST_CASE("every golden table row classifies as exceptional at its bidegree") {
    // all five finite tables live at the nine exceptional bidegrees
    for (const char* id : {"prop2.8", "prop2.9", "prop2.10", "prop2.11", "prop2.12"}) {
        TableDiff diff = verify_table(id);
        CHECK(diff.ok());
    }
}
