#include "tfg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "tfg/io_json.hpp"
#include "tfg/verify.hpp"

namespace tfg {

namespace {

namespace fs = std::filesystem;

constexpr const char* kCacheFormatVersion = "1";

enum class Format { Json, Csv, Pretty };

struct GlobalOpts {
    Format format = Format::Json;
    int jobs = 0;
    std::string cache_dir; // empty = no cache
    bool quiet = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SurfaceConfig load_config(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (const Json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return config_from_json(j);
}

SurfaceConfig load_validated_config(const std::string& path) {
    SurfaceConfig cfg = load_config(path);
    if (auto err = validate_config(cfg))
        throw InputError(path + ": " + to_string(err->kind) + ": " + err->detail);
    return cfg;
}

std::string dump(const Json& j) { return j.dump(2); }

// -- enumeration cache ----------------------------------------------------

std::string cache_key(Int rm, Int rn, const EnumerateOptions& opts) {
    std::ostringstream os;
    os << "enumerate_rm" << rm << "_rn" << rn << "_sg" << (opts.side_gcd_filter ? 1 : 0) << "_fd"
       << (opts.fast_defect_mode ? 1 : 0) << "_v" << kCacheFormatVersion << ".json";
    return os.str();
}

Json classes_to_json(const std::vector<GenusOneClass>& classes) {
    Json arr = Json::array();
    for (const GenusOneClass& cls : classes) arr.push_back(to_json(cls));
    return arr;
}

void atomic_write(const fs::path& path, const std::string& bytes) {
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(static_cast<long>(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << bytes;
        if (!out) throw InputError("cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::vector<GenusOneClass> cached_enumerate(const GlobalOpts& g, Int rm, Int rn,
                                            EnumerateOptions opts) {
    opts.jobs = g.jobs;
    if (g.cache_dir.empty()) return enumerate_genus_one(rm, rn, opts);
    fs::path dir(g.cache_dir);
    fs::create_directories(dir);
    fs::path file = dir / cache_key(rm, rn, opts);
    if (fs::exists(file)) {
        try {
            Json arr = Json::parse(read_file(file.string()));
            std::vector<GenusOneClass> classes;
            for (const Json& j : arr) classes.push_back(class_from_json(j));
            return classes;
        } catch (const std::exception&) {
            // stale or corrupt entry: fall through and recompute
        }
    }
    std::vector<GenusOneClass> classes = enumerate_genus_one(rm, rn, opts);
    atomic_write(file, dump(classes_to_json(classes)));
    return classes;
}

// -- renderers --------------------------------------------------------------

std::string csv_partition(const Partition& p) { return bracket_spaced(p); }

std::string render_classes(const std::vector<GenusOneClass>& classes, Format fmt) {
    if (fmt == Format::Json) return dump(classes_to_json(classes));
    std::ostringstream os;
    if (fmt == Format::Csv) {
        os << "rm,rn,r,zeros_f,zeros_g,poles_f,poles_g,delta0,deltaInf,defect0,defectInf,family,"
              "parameters\n";
        for (const GenusOneClass& c : classes) {
            FamilyTag tag = match_family(c);
            os << c.rm << ',' << c.rn << ',' << c.r << ',' << csv_partition(c.zeros_f) << ','
               << csv_partition(c.zeros_g) << ',' << csv_partition(c.poles_f) << ','
               << csv_partition(c.poles_g) << ',' << c.delta0 << ',' << c.delta_inf << ','
               << c.defect0 << ',' << c.defect_inf << ',' << to_string(tag) << ",\""
               << tag.parameters << "\"\n";
        }
        return os.str();
    }
    for (const GenusOneClass& c : classes) {
        FamilyTag tag = match_family(c);
        os << "(" << c.rm << "," << c.rn << ")  " << bracket(c.zeros_f) << bracket(c.zeros_g)
           << ", " << bracket(c.poles_f) << bracket(c.poles_g) << "  defects (" << c.defect0
           << "," << c.defect_inf << ")  " << to_string(tag);
        if (!tag.parameters.empty()) os << " [" << tag.parameters << "]";
        os << '\n';
    }
    if (classes.empty()) os << "no genus-one classes\n";
    return os.str();
}

std::string render_genus_report(const GenusReport& rep, Format fmt) {
    if (fmt == Format::Json) return dump(to_json(rep));
    std::ostringstream os;
    if (fmt == Format::Csv) {
        os << "rm,rn,r,m,n,arithmetic_genus,delta0,deltaInf,delta_max,defect0,defectInf,"
              "geometric_genus\n";
        os << rep.rm << ',' << rep.rn << ',' << rep.r << ',' << rep.m << ',' << rep.n << ','
           << rep.arithmetic_genus << ',' << rep.delta0 << ',' << rep.delta_inf << ','
           << rep.delta_max << ',';
        if (rep.defect0) os << *rep.defect0;
        os << ',';
        if (rep.defect_inf) os << *rep.defect_inf;
        os << ',' << rep.geometric_genus << '\n';
        return os.str();
    }
    os << "bidegree (" << rep.rm << "," << rep.rn << "), r=" << rep.r << ", (m,n)=(" << rep.m
       << "," << rep.n << ")\n";
    os << "arithmetic genus  " << rep.arithmetic_genus << '\n';
    os << "delta0 " << rep.delta0 << ", deltaInf " << rep.delta_inf << ", delta_max "
       << rep.delta_max << '\n';
    if (rep.defect0)
        os << "defects (" << *rep.defect0 << "," << *rep.defect_inf << ")\n";
    os << "geometric genus   " << rep.geometric_genus << '\n';
    return os.str();
}

std::string mw_cell(const RankReport& rep) {
    return rep.mw_rank ? std::to_string(*rep.mw_rank) : std::string("unknown");
}

std::string render_rank_rows(const std::vector<RankReport>& rows, Format fmt) {
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const RankReport& r : rows) arr.push_back(to_json(r));
        return dump(rows.size() == 1 ? arr[0] : arr);
    }
    std::ostringstream os;
    if (fmt == Format::Csv) {
        os << "d,e_df,e_dg,c2,mw_rank\n";
        for (const RankReport& r : rows)
            os << r.d << ',' << r.e_df << ',' << r.e_dg << ',' << r.c2 << ',' << mw_cell(r)
               << '\n';
        return os.str();
    }
    for (const RankReport& r : rows) {
        os << "d=" << r.d << "  e_df=" << r.e_df << "  e_dg=" << r.e_dg << "  c2=" << r.c2
           << "  c1=" << to_string(r.c1) << "  hom=" << to_string(r.hom_rank)
           << "  mw_rank=" << mw_cell(r) << '\n';
    }
    return os.str();
}

std::string render_table_diffs(const std::vector<TableDiff>& diffs, Format fmt) {
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const TableDiff& d : diffs) {
            Json j;
            j["table"] = d.table;
            j["matched"] = d.matched;
            j["total"] = d.total;
            j["missing"] = d.missing;
            j["extras"] = d.extras;
            j["summary"] = d.summary();
            arr.push_back(j);
        }
        return dump(arr.size() == 1 ? arr[0] : arr);
    }
    std::ostringstream os;
    if (fmt == Format::Csv) {
        os << "table,matched,total,missing,extras\n";
        for (const TableDiff& d : diffs)
            os << d.table << ',' << d.matched << ',' << d.total << ',' << d.missing.size() << ','
               << d.extras.size() << '\n';
        return os.str();
    }
    for (const TableDiff& d : diffs) {
        os << d.table << ": " << d.summary() << '\n';
        for (const std::string& m : d.missing) os << "  missing: " << m << '\n';
        for (const std::string& e : d.extras) os << "  extra:   " << e << '\n';
    }
    return os.str();
}

// -- subcommand payloads -----------------------------------------------

struct Args {
    GlobalOpts global;

    std::string config_path;
    std::string points = "auto";
    std::string table = "all";
    Int rm = 0, rn = 0;
    bool side_gcd = false, fast_defect = false;
    Int max_degree = 0;
    Int d = 1;
    std::string d_range;
    Int r = 0, m = 0, n = 0;
    Int oracle_max = 20;
};

std::pair<Int, Int> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) throw UsageError("--d-range expects A..B");
    try {
        Int a = std::stoll(s.substr(0, pos));
        Int b = std::stoll(s.substr(pos + 2));
        if (a < 1 || b < a) throw UsageError("--d-range expects 1 <= A <= B");
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("--d-range expects integers A..B");
    }
}

CommandOutcome make_outcome(const GlobalOpts& g, std::string payload,
                            std::vector<std::string> diagnostics = {}, int code = 0) {
    CommandOutcome out;
    out.exit_code = code;
    out.payload = std::move(payload);
    out.diagnostics = std::move(diagnostics);
    out.quiet = g.quiet;
    return out;
}

CommandOutcome cmd_genus(const Args& a) {
    SurfaceConfig cfg = load_validated_config(a.config_path);
    return make_outcome(a.global, render_genus_report(genus_report(cfg), a.global.format));
}

CommandOutcome cmd_delta_max(const Args& a) {
    if (a.r < 1 || a.m < 1 || a.n < 1) throw UsageError("delta-max: need -r, -m, -n >= 1");
    if (std::gcd(a.m, a.n) != 1) throw InputError("delta-max: m and n must be coprime");
    return make_outcome(a.global, std::to_string(delta_max(a.r, a.m, a.n)));
}

CommandOutcome cmd_enumerate(const Args& a) {
    if (a.rm < 1 || a.rn < a.rm) throw UsageError("enumerate: need 1 <= --rm <= --rn");
    EnumerateOptions opts;
    opts.side_gcd_filter = a.side_gcd;
    opts.fast_defect_mode = a.fast_defect;
    auto classes = cached_enumerate(a.global, a.rm, a.rn, opts);
    return make_outcome(a.global, render_classes(classes, a.global.format));
}

CommandOutcome cmd_exceptional(const Args& a) {
    if (a.max_degree < 1) throw UsageError("exceptional: need --max-degree >= 1");
    EnumerateOptions opts;
    opts.side_gcd_filter = true;
    std::vector<std::pair<Int, Int>> found;
    if (a.max_degree > 30) throw GuardExceeded("exceptional: --max-degree exceeds the guard (30)");
    for (Int rm = 1; rm <= a.max_degree; ++rm)
        for (Int rn = rm; rn <= a.max_degree; ++rn)
            for (const GenusOneClass& cls : cached_enumerate(a.global, rm, rn, opts))
                if (!cls.one_zero_one_pole()) {
                    found.emplace_back(rm, rn);
                    break;
                }
    if (a.global.format == Format::Json) {
        Json j;
        j["max_degree"] = a.max_degree;
        Json arr = Json::array();
        for (auto [rm, rn] : found) arr.push_back({rm, rn});
        j["bidegrees"] = arr;
        return make_outcome(a.global, dump(j));
    }
    std::ostringstream os;
    if (a.global.format == Format::Csv) {
        os << "rm,rn\n";
        for (auto [rm, rn] : found) os << rm << ',' << rn << '\n';
    } else {
        for (auto [rm, rn] : found) os << '(' << rm << ',' << rn << ")\n";
    }
    return make_outcome(a.global, os.str());
}

CommandOutcome cmd_rank(const Args& a) {
    SurfaceConfig cfg = load_validated_config(a.config_path);
    if (a.d < 1) throw UsageError("rank: need -d >= 1");
    std::vector<std::string> warnings;
    RankReport rep = mw_rank(cfg, a.d, &warnings);
    return make_outcome(a.global, render_rank_rows({rep}, a.global.format), std::move(warnings));
}

CommandOutcome cmd_c2(const Args& a) {
    SurfaceConfig cfg = load_validated_config(a.config_path);
    auto [lo, hi] = parse_range(a.d_range);
    std::vector<std::string> warnings;
    std::vector<RankReport> rows;
    for (Int d = lo; d <= hi; ++d)
        rows.push_back(mw_rank(cfg, d, rows.empty() ? &warnings : nullptr));
    return make_outcome(a.global, render_rank_rows(rows, a.global.format), std::move(warnings));
}

CommandOutcome cmd_period(const Args& a) {
    SurfaceConfig cfg = load_validated_config(a.config_path);
    Int period = c2_period(cfg, a.global.jobs);
    Int lcm = parts_lcm(cfg);
    if (a.global.format == Format::Json) {
        Json j;
        j["period"] = period;
        j["lcm"] = lcm;
        return make_outcome(a.global, dump(j));
    }
    std::ostringstream os;
    if (a.global.format == Format::Csv)
        os << "period,lcm\n" << period << ',' << lcm << '\n';
    else
        os << "period " << period << " (lcm " << lcm << ")\n";
    return make_outcome(a.global, os.str());
}

CommandOutcome cmd_emit(const Args& a) {
    SurfaceConfig cfg = load_validated_config(a.config_path);
    ModelSpec spec;
    if (a.points == "auto")
        spec = default_points(cfg);
    else
        spec = model_spec_from_json(Json::parse(read_file(a.points)));
    std::string eq = emit_model(cfg, spec);
    if (a.global.format == Format::Json) {
        Json j;
        j["equation"] = eq;
        Json cs = Json::array();
        for (const auto& [x, y] : spec.constraints) cs.push_back(x + " != " + y);
        j["constraints"] = cs;
        return make_outcome(a.global, dump(j));
    }
    return make_outcome(a.global, eq + "\n");
}

CommandOutcome cmd_catalog(const Args& a) {
    const auto& rows = family_catalog();
    if (a.global.format == Format::Json) {
        Json arr = Json::array();
        for (const CatalogRow& r : rows) arr.push_back(to_json(r));
        return make_outcome(a.global, dump(arr));
    }
    std::ostringstream os;
    if (a.global.format == Format::Csv) {
        os << "row,rm,rn,equation\n";
        for (const CatalogRow& r : rows)
            os << r.row << ',' << r.rm << ',' << r.rn << ",\"" << r.equation << "\"\n";
    } else {
        for (const CatalogRow& r : rows) {
            os << r.row << ". (" << r.rm << "," << r.rn << ")  " << r.equation;
            if (!r.spec.constraints.empty()) {
                os << "   [";
                for (std::size_t i = 0; i < r.spec.constraints.size(); ++i) {
                    if (i) os << ", ";
                    os << r.spec.constraints[i].first << " != " << r.spec.constraints[i].second;
                }
                os << "]";
            }
            os << '\n';
        }
    }
    return make_outcome(a.global, os.str());
}

CommandOutcome cmd_verify_tables(const Args& a) {
    std::vector<std::string> ids;
    if (a.table == "all") {
        ids = known_tables();
    } else {
        const auto& known = known_tables();
        if (std::find(known.begin(), known.end(), a.table) == known.end())
            throw UsageError("unknown table id: " + a.table);
        ids.push_back(a.table);
    }
    std::vector<TableDiff> diffs;
    bool any_missing = false;
    for (const std::string& id : ids) {
        TableDiff d = verify_table(id, a.global.jobs);
        any_missing = any_missing || !d.ok();
        diffs.push_back(std::move(d));
    }
    return make_outcome(a.global, render_table_diffs(diffs, a.global.format), {},
                        any_missing ? 5 : 0);
}

CommandOutcome cmd_oracle_delta_max(const Args& a) {
    if (a.oracle_max < 1 || a.oracle_max > 30)
        throw GuardExceeded("oracle-delta-max: --max must be within 1..30");
    Int triples = 0;
    std::vector<std::string> mismatches;
    for (Int r = 1; r <= a.oracle_max; ++r)
        for (Int m = 1; r * m <= a.oracle_max; ++m)
            for (Int n = 1; r * n <= a.oracle_max; ++n) {
                if (std::gcd(m, n) != 1) continue;
                ++triples;
                Int brute = brute_delta_max(r, m, n, a.global.jobs);
                Int closed = delta_max(r, m, n);
                if (brute != closed) {
                    std::ostringstream os;
                    os << "(r,m,n)=(" << r << ',' << m << ',' << n << "): search " << brute
                       << " vs formula " << closed;
                    mismatches.push_back(os.str());
                }
            }
    if (a.global.format == Format::Json) {
        Json j;
        j["max"] = a.oracle_max;
        j["triples"] = triples;
        j["all_equal"] = mismatches.empty();
        j["mismatches"] = mismatches;
        return make_outcome(a.global, dump(j), {}, mismatches.empty() ? 0 : 1);
    }
    std::ostringstream os;
    os << triples << " triples checked, "
       << (mismatches.empty() ? "search agrees with the closed form"
                              : std::to_string(mismatches.size()) + " mismatches")
       << '\n';
    for (const std::string& m : mismatches) os << "  " << m << '\n';
    return make_outcome(a.global, os.str(), {}, mismatches.empty() ? 0 : 1);
}

} // namespace

CommandOutcome run(const std::vector<std::string>& argv) {
    Args a;
    CLI::App app{"exact genus and tower rank toolkit for curves t*f(x) = g(y)"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format: json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--jobs", a.global.jobs, "worker threads for the search kernels");
    app.add_option("--cache-dir", a.global.cache_dir,
                   "enumeration result cache directory (env TFG_CACHE_DIR)");
    app.add_flag("--quiet", a.global.quiet, "suppress warnings on stderr");

    CLI::App* genus = app.add_subcommand("genus", "genus report for a configuration");
    genus->add_option("--config", a.config_path, "configuration JSON file")->required();

    CLI::App* dmax = app.add_subcommand("delta-max", "closed form for the maximal delta total");
    dmax->add_option("-r", a.r, "common degree factor")->required();
    dmax->add_option("-m", a.m, "coprime part of deg f")->required();
    dmax->add_option("-n", a.n, "coprime part of deg g")->required();

    CLI::App* en = app.add_subcommand("enumerate", "all genus-one classes of one bidegree");
    en->add_option("--rm", a.rm, "degree of f")->required();
    en->add_option("--rn", a.rn, "degree of g")->required();
    en->add_flag("--side-gcd", a.side_gcd, "require gcd(side, r) = 1 on deficient sides");
    en->add_flag("--fast-defect-mode", a.fast_defect,
                 "restrict delta splits to the defect dichotomy");

    CLI::App* exc = app.add_subcommand("exceptional",
                                       "bidegrees where f needs more than one zero or pole");
    exc->add_option("--max-degree", a.max_degree, "largest rn to scan")->required();

    CLI::App* rank = app.add_subcommand("rank", "tower rank report at one extension degree");
    rank->add_option("--config", a.config_path, "configuration JSON file")->required();
    rank->add_option("-d", a.d, "extension degree")->required();

    CLI::App* c2 = app.add_subcommand("c2", "c2 sweep over a range of extension degrees");
    c2->add_option("--config", a.config_path, "configuration JSON file")->required();
    c2->add_option("--d-range", a.d_range, "degree range A..B")->required();

    CLI::App* period = app.add_subcommand("period", "minimal period of d -> c2(d)");
    period->add_option("--config", a.config_path, "configuration JSON file")->required();

    CLI::App* emit = app.add_subcommand("emit", "defining equation for a configuration");
    emit->add_option("--config", a.config_path, "configuration JSON file")->required();
    emit->add_option("--points", a.points, "points JSON file, or 'auto'");

    app.add_subcommand("catalog", "the nine exceptional families");

    CLI::App* vt = app.add_subcommand("verify-tables",
                                      "check the embedded classification tables by recomputation");
    vt->add_option("--table", a.table, "table id or 'all'");

    CLI::App* odm = app.add_subcommand("oracle-delta-max",
                                       "exhaustive search vs closed form for delta_max");
    odm->add_option("--max", a.oracle_max, "largest degree to check");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        CommandOutcome out;
        std::ostringstream os;
        os << app.help();
        out.payload = os.str();
        return out;
    } catch (const CLI::ParseError& e) {
        CommandOutcome out;
        out.exit_code = 2;
        out.diagnostics.push_back(e.what());
        return out;
    }

    if (format == "csv") a.global.format = Format::Csv;
    if (format == "pretty") a.global.format = Format::Pretty;
    if (a.global.cache_dir.empty()) {
        if (const char* env = std::getenv("TFG_CACHE_DIR")) a.global.cache_dir = env;
    }

    try {
        if (genus->parsed()) return cmd_genus(a);
        if (dmax->parsed()) return cmd_delta_max(a);
        if (en->parsed()) return cmd_enumerate(a);
        if (exc->parsed()) return cmd_exceptional(a);
        if (rank->parsed()) return cmd_rank(a);
        if (c2->parsed()) return cmd_c2(a);
        if (period->parsed()) return cmd_period(a);
        if (emit->parsed()) return cmd_emit(a);
        if (app.get_subcommand("catalog")->parsed()) return cmd_catalog(a);
        if (vt->parsed()) return cmd_verify_tables(a);
        if (odm->parsed()) return cmd_oracle_delta_max(a);
        CommandOutcome out;
        out.exit_code = 2;
        out.diagnostics.push_back("no subcommand given");
        return out;
    } catch (const UsageError& e) {
        return CommandOutcome{2, "", {e.what()}, a.global.quiet};
    } catch (const GuardExceeded& e) {
        return CommandOutcome{4, "", {e.what()}, a.global.quiet};
    } catch (const InputError& e) {
        return CommandOutcome{3, "", {e.what()}, a.global.quiet};
    } catch (const ConfigParseError& e) {
        return CommandOutcome{3, "", {e.what()}, a.global.quiet};
    } catch (const ModelError& e) {
        return CommandOutcome{3, "", {e.what()}, a.global.quiet};
    } catch (const std::invalid_argument& e) {
        // precondition violations from the library surface as validation errors
        return CommandOutcome{3, "", {e.what()}, a.global.quiet};
    }
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    CommandOutcome out = run(args);
    if (!out.payload.empty()) {
        std::cout << out.payload;
        if (out.payload.back() != '\n') std::cout << '\n';
    }
    if (!out.quiet)
        for (const std::string& d : out.diagnostics) std::cerr << d << '\n';
    return out.exit_code;
}

} // namespace tfg
