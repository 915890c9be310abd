#include "tfg/models.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

namespace tfg {

namespace {

constexpr const char* kDot = "·";

struct Rational {
    Int num = 0, den = 1;
    bool operator==(const Rational&) const = default;
};

std::optional<Rational> parse_rational(const Label& s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '-') {
        neg = true;
        ++i;
    }
    Int num = 0, den = 1;
    bool any = false;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
        num = num * 10 + (s[i] - '0');
        any = true;
    }
    if (!any) return std::nullopt;
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        Int d = 0;
        bool anyd = false;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
            d = d * 10 + (s[i] - '0');
            anyd = true;
        }
        if (!anyd || i != s.size() || d == 0) return std::nullopt;
        den = d;
    }
    Int g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{neg ? -num : num, den};
}

bool is_symbol(const Label& s) {
    if (s.empty() || parse_rational(s)) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return s != "x" && s != "y" && s != "t";
}

// Labels clash when they are the same symbol or the same exact rational.
bool labels_equal(const Label& a, const Label& b) {
    auto ra = parse_rational(a), rb = parse_rational(b);
    if (ra && rb) return *ra == *rb;
    if (!ra && !rb) return a == b;
    return false;
}

void check_labels(const std::vector<Label>& labels, const char* what) {
    for (const Label& l : labels)
        if (!parse_rational(l) && !is_symbol(l))
            throw ModelError(std::string("bad point label '") + l + "' in " + what);
}

void check_distinct(const std::vector<Label>& a, const std::vector<Label>& b, const char* what) {
    std::vector<Label> all(a);
    all.insert(all.end(), b.begin(), b.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (labels_equal(all[i], all[j]))
                throw ModelError(std::string("duplicate point label '") + all[i] + "' in " + what);
}

void append_factors(std::string& out, char var, const Partition& parts,
                    const std::vector<Label>& labels, bool& first) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!first) out += kDot;
        first = false;
        const Label& l = labels[i];
        const Int e = parts.parts()[i];
        auto rat = parse_rational(l);
        if (rat && rat->num == 0) {
            out += var;
        } else {
            out += '(';
            out += var;
            if (rat && rat->num < 0) {
                out += '+';
                out += std::to_string(-rat->num);
                if (rat->den != 1) out += "/" + std::to_string(rat->den);
            } else {
                out += '-';
                out += l;
            }
            out += ')';
        }
        if (e > 1) out += "^" + std::to_string(e);
    }
}

std::string fresh_int_labels(Int v) { return std::to_string(v); }

} // namespace

ModelSpec default_points(const SurfaceConfig& cfg) {
    ModelSpec spec;
    auto fill = [](std::vector<Label>& zeros, std::vector<Label>& poles, const FunctionDatum& fd) {
        for (Int i = 0; i < fd.zeros.size(); ++i) zeros.push_back(fresh_int_labels(i));
        for (Int i = 0; i < fd.poles.size(); ++i) poles.push_back(fresh_int_labels(-1 - i));
    };
    fill(spec.f_zero_points, spec.f_pole_points, cfg.f);
    fill(spec.g_zero_points, spec.g_pole_points, cfg.g);
    return spec;
}

std::string emit_model(const SurfaceConfig& cfg, const ModelSpec& spec) {
    auto need = [](const std::vector<Label>& labels, const Partition& parts, const char* what) {
        if (static_cast<Int>(labels.size()) != parts.size())
            throw ModelError(std::string("point count does not match partition length for ") +
                             what);
    };
    need(spec.f_zero_points, cfg.f.zeros, "zeros of f");
    need(spec.f_pole_points, cfg.f.poles, "poles of f");
    need(spec.g_zero_points, cfg.g.zeros, "zeros of g");
    need(spec.g_pole_points, cfg.g.poles, "poles of g");
    for (const auto& [labels, what] :
         {std::pair{&spec.f_zero_points, "f"}, std::pair{&spec.f_pole_points, "f"},
          std::pair{&spec.g_zero_points, "g"}, std::pair{&spec.g_pole_points, "g"}})
        check_labels(*labels, what);
    check_distinct(spec.f_zero_points, spec.f_pole_points, "the support of f");
    check_distinct(spec.g_zero_points, spec.g_pole_points, "the support of g");
    for (const auto& [lhs, rhs] : spec.constraints) {
        auto a = parse_rational(lhs), b = parse_rational(rhs);
        if (a && b && *a == *b)
            throw ModelError("constraint " + lhs + " != " + rhs + " is violated");
    }

    std::string out = "t";
    bool first = false; // "t" already emitted; every factor gets a dot
    append_factors(out, 'x', cfg.f.zeros, spec.f_zero_points, first);
    append_factors(out, 'y', cfg.g.poles, spec.g_pole_points, first);
    out += " = ";
    first = true;
    append_factors(out, 'x', cfg.f.poles, spec.f_pole_points, first);
    append_factors(out, 'y', cfg.g.zeros, spec.g_zero_points, first);
    return out;
}

// -- parsing ---------------------------------------------------------------

namespace {

struct Factor {
    char var;
    Label label;
    Int exp;
};

class FactorParser {
public:
    explicit FactorParser(std::string_view s) : s_(s) {}

    std::vector<Factor> parse_side(bool lhs) {
        std::vector<Factor> out;
        if (lhs) {
            expect('t');
            while (eat_dot()) out.push_back(factor());
        } else {
            out.push_back(factor());
            while (eat_dot()) out.push_back(factor());
        }
        return out;
    }

    void expect_equals() {
        if (!consume(" = ")) throw ModelError("expected ' = '");
    }

    bool done() const { return pos_ >= s_.size(); }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c) throw ModelError(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool consume(std::string_view tok) {
        if (s_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }

    bool eat_dot() { return consume(kDot); }

    Factor factor() {
        Factor f{};
        if (peek() == '(') {
            ++pos_;
            f.var = var();
            char sign = peek();
            if (sign != '-' && sign != '+') throw ModelError("expected sign in factor");
            ++pos_;
            f.label = label_token();
            if (sign == '+') f.label = "-" + f.label;
            expect(')');
        } else {
            f.var = var();
            f.label = "0";
        }
        f.exp = 1;
        if (peek() == '^') {
            ++pos_;
            f.exp = integer();
            if (f.exp < 1) throw ModelError("exponent must be >= 1");
        }
        return f;
    }

    char var() {
        char c = peek();
        if (c != 'x' && c != 'y') throw ModelError("expected variable x or y");
        ++pos_;
        return c;
    }

    Label label_token() {
        std::string tok;
        while (!done()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '/') {
                tok += c;
                ++pos_;
            } else {
                break;
            }
        }
        if (tok.empty()) throw ModelError("expected point label");
        return tok;
    }

    Int integer() {
        Int v = 0;
        bool any = false;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            ++pos_;
            any = true;
        }
        if (!any) throw ModelError("expected integer");
        return v;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

// Splits one side's factors into the x block and the y block, each sorted by
// exponent (nonincreasing, stable).
std::pair<std::vector<Factor>, std::vector<Factor>> split_factors(std::vector<Factor> fs) {
    std::vector<Factor> xs, ys;
    for (auto& f : fs) (f.var == 'x' ? xs : ys).push_back(std::move(f));
    auto by_exp = [](const Factor& a, const Factor& b) { return a.exp > b.exp; };
    std::stable_sort(xs.begin(), xs.end(), by_exp);
    std::stable_sort(ys.begin(), ys.end(), by_exp);
    return {std::move(xs), std::move(ys)};
}

void load(const std::vector<Factor>& fs, Partition& parts, std::vector<Label>& labels) {
    std::vector<Int> ps;
    for (const Factor& f : fs) {
        ps.push_back(f.exp);
        labels.push_back(f.label);
    }
    parts = Partition(ps);
}

} // namespace

ParsedModel parse_equation(const std::string& equation) {
    FactorParser p(equation);
    std::vector<Factor> lhs = p.parse_side(true);
    p.expect_equals();
    std::vector<Factor> rhs = p.parse_side(false);
    if (!p.done()) throw ModelError("trailing input after equation");

    auto [fz, gp] = split_factors(std::move(lhs));
    auto [fp, gz] = split_factors(std::move(rhs));

    ParsedModel out;
    load(fz, out.config.f.zeros, out.spec.f_zero_points);
    load(fp, out.config.f.poles, out.spec.f_pole_points);
    load(gz, out.config.g.zeros, out.spec.g_zero_points);
    load(gp, out.config.g.poles, out.spec.g_pole_points);
    return out;
}

// -- the exceptional catalog ----------------------------------------------

namespace {

CatalogRow make_row(int row, Partition fz, std::vector<Label> fzp, Partition fp,
                    std::vector<Label> fpp, Partition gz, std::vector<Label> gzp, Partition gp,
                    std::vector<Label> gpp, std::vector<std::pair<Label, Label>> constraints) {
    CatalogRow r;
    r.row = row;
    r.config.f = FunctionDatum{std::move(fz), std::move(fp)};
    r.config.g = FunctionDatum{std::move(gz), std::move(gp)};
    r.rm = r.config.rm();
    r.rn = r.config.rn();
    r.spec.f_zero_points = std::move(fzp);
    r.spec.f_pole_points = std::move(fpp);
    r.spec.g_zero_points = std::move(gzp);
    r.spec.g_pole_points = std::move(gpp);
    r.spec.constraints = std::move(constraints);
    r.equation = emit_model(r.config, r.spec);
    return r;
}

} // namespace

const std::vector<CatalogRow>& family_catalog() {
    static const std::vector<CatalogRow> rows = [] {
        std::vector<CatalogRow> v;
        v.push_back(make_row(1, {1, 1}, {"0", "1"}, {1, 1}, {"-1", "a"}, {1, 1}, {"0", "1"},
                             {1, 1}, {"-1", "b"},
                             {{"a", "0"}, {"a", "1"}, {"b", "0"}, {"b", "1"}}));
        v.push_back(make_row(2, {2}, {"0"}, {1, 1}, {"1", "-1"}, {2, 2}, {"0", "d"},
                             {1, 1, 1, 1}, {"1", "a", "b", "c"},
                             {{"a", "0"}, {"b", "0"}, {"c", "0"}, {"d", "1"}, {"d", "a"},
                              {"d", "b"}, {"d", "c"}}));
        v.push_back(make_row(3, {2}, {"0"}, {1, 1}, {"1", "-1"}, {2, 1}, {"0", "d"}, {1, 1, 1},
                             {"1", "a", "b"},
                             {{"a", "0"}, {"b", "0"}, {"d", "a"}, {"d", "b"}, {"d", "1"}}));
        v.push_back(make_row(4, {3}, {"0"}, {1, 1, 1}, {"1", "-1", "b"}, {3}, {"0"}, {1, 1, 1},
                             {"1", "-1", "a"},
                             {{"a", "0"}, {"a", "1"}, {"a", "-1"}, {"b", "0"}, {"b", "1"},
                              {"b", "-1"}}));
        v.push_back(make_row(5, {3}, {"0"}, {2, 1}, {"-1", "1"}, {3, 1}, {"0", "b"}, {2, 2},
                             {"1", "a"}, {{"a", "0"}, {"a", "b"}, {"b", "1"}}));
        v.push_back(make_row(6, {3}, {"0"}, {2, 1}, {"1", "-1"}, {3, 3}, {"0", "d"}, {2, 2, 2},
                             {"a", "b", "1"},
                             {{"a", "0"}, {"b", "0"}, {"d", "a"}, {"d", "b"}, {"d", "1"}}));
        v.push_back(make_row(7, {4}, {"0"}, {2, 2}, {"1", "-1"}, {4}, {"0"}, {2, 1, 1},
                             {"1", "-1", "a"}, {{"a", "-1"}, {"a", "0"}}));
        v.push_back(make_row(8, {4}, {"0"}, {3, 1}, {"1", "-1"}, {4, 2}, {"0", "b"}, {3, 3},
                             {"1", "a"}, {{"a", "0"}, {"a", "b"}, {"b", "1"}}));
        v.push_back(make_row(9, {5}, {"0"}, {3, 2}, {"1", "-1"}, {5, 1}, {"0", "a"}, {6}, {"1"},
                             {{"a", "1"}}));
        return v;
    }();
    return rows;
}

} // namespace tfg
