#include <doctest.h>

#include "tfg/classify.hpp"
#include "tfg/io_json.hpp"
#include "tfg/models.hpp"

using namespace tfg;

namespace {

SurfaceConfig make(std::vector<Int> fz, std::vector<Int> fp, std::vector<Int> gz,
                   std::vector<Int> gp) {
    SurfaceConfig cfg;
    cfg.f = FunctionDatum{Partition(std::move(fz)), Partition(std::move(fp))};
    cfg.g = FunctionDatum{Partition(std::move(gz)), Partition(std::move(gp))};
    return cfg;
}

} // namespace

TEST_CASE("emit_model renders the fixed grammar") {
    SurfaceConfig cfg = make({2}, {2}, {3}, {2, 1});
    ModelSpec spec;
    spec.f_zero_points = {"0"};
    spec.f_pole_points = {"1"};
    spec.g_zero_points = {"1"};
    spec.g_pole_points = {"-1", "a"};
    std::string eq = emit_model(cfg, spec);
    CHECK(eq == "t·x^2·(y+1)^2·(y-a) = (x-1)^2·(y-1)^3");
    // byte determinism
    CHECK(emit_model(cfg, spec) == eq);
}

TEST_CASE("emit_model errors") {
    SurfaceConfig cfg = make({2}, {2}, {3}, {2, 1});
    ModelSpec spec;
    spec.f_zero_points = {"0"};
    spec.f_pole_points = {"0"}; // duplicate within the support of f
    spec.g_zero_points = {"1"};
    spec.g_pole_points = {"-1", "a"};
    CHECK_THROWS_AS(emit_model(cfg, spec), ModelError);

    spec.f_pole_points = {"1", "2"}; // count mismatch
    CHECK_THROWS_AS(emit_model(cfg, spec), ModelError);

    spec.f_pole_points = {"1"};
    spec.constraints = {{"2/2", "1"}}; // violated with exact rationals
    CHECK_THROWS_AS(emit_model(cfg, spec), ModelError);

    spec.constraints = {{"a", "1"}}; // symbolic constraints are recorded, not decided
    CHECK(!emit_model(cfg, spec).empty());
}

TEST_CASE("default points give a valid deterministic model") {
    SurfaceConfig cfg = make({2}, {1, 1}, {3}, {2, 1});
    ModelSpec spec = default_points(cfg);
    std::string eq = emit_model(cfg, spec);
    CHECK(eq == "t·x^2·(y+1)^2·(y+2) = (x+1)·(x+2)·y^3");
    ParsedModel parsed = parse_equation(eq);
    CHECK(parsed.config == cfg);
}

TEST_CASE("parse_equation inverts emit_model") {
    for (const CatalogRow& row : family_catalog()) {
        ParsedModel parsed = parse_equation(row.equation);
        CHECK(parsed.config == row.config);
        CHECK(parsed.spec.f_zero_points == row.spec.f_zero_points);
        CHECK(parsed.spec.g_pole_points == row.spec.g_pole_points);
    }
    CHECK_THROWS_AS(parse_equation("t·x^2"), ModelError);
    CHECK_THROWS_AS(parse_equation("x = y"), ModelError);
}

TEST_CASE("catalog holds the nine families as printed") {
    const auto& rows = family_catalog();
    REQUIRE(rows.size() == 9);

    CHECK(rows[0].config == make({1, 1}, {1, 1}, {1, 1}, {1, 1}));
    CHECK(rows[0].spec.constraints ==
          std::vector<std::pair<Label, Label>>{{"a", "0"}, {"a", "1"}, {"b", "0"}, {"b", "1"}});

    CHECK(rows[3].config == make({3}, {1, 1, 1}, {3}, {1, 1, 1}));
    CHECK(rows[6].config == make({4}, {2, 2}, {4}, {2, 1, 1}));
    CHECK(rows[8].rm == 5);
    CHECK(rows[8].rn == 6);
    CHECK(rows[8].equation ==
          "t·x^5·(y-1)^6 = (x-1)^3·(x+1)^2·y^5·(y-a)");

    std::string row3 = rows[2].equation;
    CHECK(row3 == "t·x^2·(y-1)·(y-a)·(y-b) = (x-1)·(x+1)·y^2·(y-d)");
}

TEST_CASE("catalog round trip: every family is genus one and enumerable") {
    for (const CatalogRow& row : family_catalog()) {
        CAPTURE(row.row);
        ParsedModel parsed = parse_equation(row.equation);
        CHECK(!validate_config(parsed.config));
        CHECK(geometric_genus(parsed.config) == 1);
        GenusOneClass cls = classify_config(parsed.config);
        FamilyTag tag = match_family(cls);
        CHECK(tag.source == FamilySource::Exceptional2_16);
        CHECK(tag.row == row.row);
        auto classes = enumerate_genus_one(cls.rm, cls.rn);
        CHECK(std::any_of(classes.begin(), classes.end(),
                          [&](const GenusOneClass& c) { return c == cls; }));
    }
}

TEST_CASE("catalog rows export config, constraints and equation") {
    Json j = to_json(family_catalog()[8]);
    CHECK(j["row"] == 9);
    CHECK(j["bidegree"] == Json::array({5, 6}));
    CHECK(j["config"]["f"]["poles"] == Json::array({3, 2}));
    CHECK(j["points"]["g_zero_points"] == Json::array({"0", "a"}));
    CHECK(j["equation"].get<std::string>().find("x^5") != std::string::npos);
}

TEST_CASE("model spec JSON round trip") {
    ModelSpec spec;
    spec.f_zero_points = {"0"};
    spec.f_pole_points = {"1", "-1"};
    spec.g_zero_points = {"0", "d"};
    spec.g_pole_points = {"1", "a", "b"};
    spec.constraints = {{"a", "0"}, {"d", "1"}};
    Json j = to_json(spec);
    CHECK(model_spec_from_json(j) == spec);
    j["bogus"] = true;
    CHECK_THROWS_AS(model_spec_from_json(j), ConfigParseError);
}
