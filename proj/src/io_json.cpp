#include "tfg/io_json.hpp"

namespace tfg {

namespace {

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed,
                    const char* where) {
    if (!j.is_object()) throw ConfigParseError(std::string(where) + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* a : allowed) known = known || it.key() == a;
        if (!known)
            throw ConfigParseError(std::string(where) + ": unknown field \"" + it.key() + "\"");
    }
}

Partition partition_from_json(const Json& j, const char* where) {
    if (!j.is_array()) throw ConfigParseError(std::string(where) + ": expected an array");
    std::vector<Int> parts;
    for (const Json& v : j) {
        if (!v.is_number_integer())
            throw ConfigParseError(std::string(where) + ": parts must be integers");
        parts.push_back(v.get<Int>());
    }
    try {
        return Partition(parts);
    } catch (const std::invalid_argument& e) {
        throw ConfigParseError(std::string(where) + ": " + e.what());
    }
}

FunctionDatum datum_from_json(const Json& j, const char* where) {
    reject_unknown(j, {"zeros", "poles"}, where);
    if (!j.contains("zeros") || !j.contains("poles"))
        throw ConfigParseError(std::string(where) + ": needs \"zeros\" and \"poles\"");
    return FunctionDatum{partition_from_json(j["zeros"], where),
                         partition_from_json(j["poles"], where)};
}

Int int_field(const Json& j, const char* key, Int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer())
        throw ConfigParseError(std::string(key) + " must be an integer");
    return j[key].get<Int>();
}

Json known_state(KnownState s) {
    Json j;
    j["status"] = to_string(s);
    if (s == KnownState::KnownZero) j["value"] = 0;
    return j;
}

} // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const SurfaceConfig& cfg) {
    Json j;
    j["genus_C"] = cfg.genus_C;
    j["genus_D"] = cfg.genus_D;
    j["characteristic"] = cfg.characteristic;
    j["f"] = {{"zeros", to_json(cfg.f.zeros)}, {"poles", to_json(cfg.f.poles)}};
    j["g"] = {{"zeros", to_json(cfg.g.zeros)}, {"poles", to_json(cfg.g.poles)}};
    return j;
}

SurfaceConfig config_from_json(const Json& j) {
    reject_unknown(j, {"genus_C", "genus_D", "characteristic", "f", "g"}, "config");
    if (!j.contains("f") || !j.contains("g"))
        throw ConfigParseError("config: needs \"f\" and \"g\"");
    SurfaceConfig cfg;
    cfg.f = datum_from_json(j["f"], "f");
    cfg.g = datum_from_json(j["g"], "g");
    cfg.genus_C = int_field(j, "genus_C", 0);
    cfg.genus_D = int_field(j, "genus_D", 0);
    cfg.characteristic = int_field(j, "characteristic", 0);
    if (cfg.genus_C < 0 || cfg.genus_D < 0 || cfg.characteristic < 0)
        throw ConfigParseError("config: genera and characteristic must be >= 0");
    return cfg;
}

Json to_json(const GenusReport& rep) {
    Json j;
    j["rm"] = rep.rm;
    j["rn"] = rep.rn;
    j["r"] = rep.r;
    j["m"] = rep.m;
    j["n"] = rep.n;
    j["arithmetic_genus"] = rep.arithmetic_genus;
    j["delta0"] = rep.delta0;
    j["deltaInf"] = rep.delta_inf;
    j["delta_max"] = rep.delta_max;
    j["defect0"] = rep.defect0 ? Json(*rep.defect0) : Json(nullptr);
    j["defectInf"] = rep.defect_inf ? Json(*rep.defect_inf) : Json(nullptr);
    j["geometric_genus"] = rep.geometric_genus;
    return j;
}

Json to_json(const GenusOneClass& cls) {
    Json j;
    j["rm"] = cls.rm;
    j["rn"] = cls.rn;
    j["r"] = cls.r;
    j["m"] = cls.m;
    j["n"] = cls.n;
    j["zeros_f"] = to_json(cls.zeros_f);
    j["zeros_g"] = to_json(cls.zeros_g);
    j["poles_f"] = to_json(cls.poles_f);
    j["poles_g"] = to_json(cls.poles_g);
    auto s = cls.shape();
    j["shape"] = {s[0], s[1], s[2], s[3]};
    j["delta0"] = cls.delta0;
    j["deltaInf"] = cls.delta_inf;
    j["delta_max"] = cls.delta_max;
    j["defect0"] = cls.defect0;
    j["defectInf"] = cls.defect_inf;
    FamilyTag tag = match_family(cls);
    j["family"] = to_string(tag);
    j["family_parameters"] = tag.parameters;
    return j;
}

GenusOneClass class_from_json(const Json& j) {
    reject_unknown(j,
                   {"rm", "rn", "r", "m", "n", "zeros_f", "zeros_g", "poles_f", "poles_g",
                    "shape", "delta0", "deltaInf", "delta_max", "defect0", "defectInf", "family",
                    "family_parameters"},
                   "class");
    SurfaceConfig cfg;
    cfg.f = FunctionDatum{partition_from_json(j.at("zeros_f"), "zeros_f"),
                          partition_from_json(j.at("poles_f"), "poles_f")};
    cfg.g = FunctionDatum{partition_from_json(j.at("zeros_g"), "zeros_g"),
                          partition_from_json(j.at("poles_g"), "poles_g")};
    return classify_config(cfg);
}

Json to_json(const RankReport& rep) {
    Json j;
    j["d"] = rep.d;
    j["e_df"] = rep.e_df;
    j["e_dg"] = rep.e_dg;
    j["c2"] = rep.c2;
    j["c1"] = known_state(rep.c1);
    j["hom_rank"] = known_state(rep.hom_rank);
    if (rep.mw_rank)
        j["mw_rank"] = {{"status", "known"}, {"value", *rep.mw_rank}};
    else
        j["mw_rank"] = {{"status", "unknown"}};
    return j;
}

Json to_json(const ModelSpec& spec) {
    Json j;
    j["f_zero_points"] = spec.f_zero_points;
    j["f_pole_points"] = spec.f_pole_points;
    j["g_zero_points"] = spec.g_zero_points;
    j["g_pole_points"] = spec.g_pole_points;
    Json cs = Json::array();
    for (const auto& [a, b] : spec.constraints) cs.push_back({a, b});
    j["constraints"] = cs;
    return j;
}

ModelSpec model_spec_from_json(const Json& j) {
    reject_unknown(
        j, {"f_zero_points", "f_pole_points", "g_zero_points", "g_pole_points", "constraints"},
        "points");
    ModelSpec spec;
    auto labels = [&](const char* key, std::vector<Label>& out) {
        if (!j.contains(key)) throw ConfigParseError(std::string("points: needs \"") + key + "\"");
        if (!j[key].is_array()) throw ConfigParseError(std::string(key) + ": expected an array");
        for (const Json& v : j[key]) {
            if (!v.is_string()) throw ConfigParseError(std::string(key) + ": labels are strings");
            out.push_back(v.get<std::string>());
        }
    };
    labels("f_zero_points", spec.f_zero_points);
    labels("f_pole_points", spec.f_pole_points);
    labels("g_zero_points", spec.g_zero_points);
    labels("g_pole_points", spec.g_pole_points);
    if (j.contains("constraints")) {
        for (const Json& c : j["constraints"]) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
                throw ConfigParseError("constraints: expected pairs of labels");
            spec.constraints.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
    }
    return spec;
}

Json to_json(const CatalogRow& row) {
    Json j;
    j["row"] = row.row;
    j["bidegree"] = {row.rm, row.rn};
    j["config"] = to_json(row.config);
    j["points"] = to_json(row.spec);
    j["equation"] = row.equation;
    return j;
}

} // namespace tfg
