#pragma once

// Scenario files: a small sectioned text format that pins down a K3 model
// (lattice, curves, facts) and the question asked of it (cover data, split
// branch data, extension classes, fiber lists, family parameters).  Parsing
// is strict: unknown sections, unknown keys, and malformed values are errors.
//
//   [scenario]   name = ..., description = ...
//   [lattice]    basis = H N1..N15
//                row.H = 6 0 0 ...          (one row per basis name)
//                glue.v1 = 1/2 1/2 ...      (optional rational classes)
//   [curves]     G = 3/2 H - 1/2 N1..N15 | smooth irreducible
//   [divisors]   B = G
//   [facts]      pseudoample = H
//                not-effective = 1/2 H + 1/2 N1..N15
//                h0 = 2 on B
//   [cover]      B = G            C = N1..N15
//                ledger-complete = false
//                tangent = G N1   cusp = G   triple-point = N1 N2 N3
//   [split]      B-triple = ...,  C-triple = ...,  B-split = ...,  C-split = ...
//   [extension]  L = ..., M = ..., fiber = 3 1, ideal = 2 1 distinct,
//                bundle = 3 1 2 distinct
//   [fibers]     b1 = 2, b2 = 2, fiber = I3 b1, fiber = IV, ...
//   [family]     irreducible = 6 8, split-gentype = 8 1,
//                split-elliptic = 2 1 1, rho = 3
//
// Divisor expressions are signed sums of optionally-scaled names; names
// resolve against divisors, then curves, then lattice basis vectors.  The
// range shorthand N1..N15 expands to the sum (in expressions) or the list (in
// name lists) of N1, N2, ..., N15.

#include "k3cover/nonsplit.hpp"

#include <array>
#include <fstream>

namespace k3cover {

struct Scenario {
    std::string name, description;

    bool has_model = false;
    K3Model model;
    std::map<std::string, QVec> divisors;

    std::optional<GaloisCoverInput> cover;
    std::optional<SplitCoverInput> split;

    std::optional<QVec> ext_L, ext_M;
    std::optional<std::pair<Int, Int>> ext_fiber;  // (n, m)
    struct IdealQuery {
        Int len, m;
        PointGeometry geom;
        bool operator==(const IdealQuery&) const = default;
    };
    std::optional<IdealQuery> ideal;
    std::optional<std::array<Int, 3>> bundle;  // (n, m, len), geometry distinct

    std::optional<Int> bc_b1, bc_b2;
    std::vector<MarkedFiber> bc_fibers;

    std::optional<std::pair<Int, Int>> family_irreducible;    // (D1^2, n)
    std::optional<std::pair<Int, Int>> family_split_gentype;  // (k, h)
    std::optional<std::array<Int, 3>> family_split_elliptic;  // (k, h, r)
    std::optional<Int> declared_rho;                          // of the minimal model

    bool operator==(const Scenario&) const = default;
};

namespace scenario_detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

struct Line {
    std::string section, key, value;
    int no = 0;
};

[[noreturn]] inline void fail(const Line& ln, const std::string& msg) {
    throw invalid_input("scenario line " + std::to_string(ln.no) + ": " + msg);
}

// Expand "N1..N15" to {N1, ..., N15}; anything else passes through.
inline std::vector<std::string> expand_range(const Line& ln, const std::string& tok) {
    std::size_t dots = tok.find("..");
    if (dots == std::string::npos) return {tok};
    std::string lhs = tok.substr(0, dots), rhs = tok.substr(dots + 2);
    auto split_suffix = [&](const std::string& s) -> std::pair<std::string, Int> {
        std::size_t i = s.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
        if (i == s.size() || i == 0)
            fail(ln, "bad range endpoint '" + s + "' in '" + tok + "'");
        return {s.substr(0, i), Int(s.substr(i))};
    };
    auto [pl, nl] = split_suffix(lhs);
    auto [pr, nr] = split_suffix(rhs);
    if (pl != pr) fail(ln, "range '" + tok + "' mixes prefixes '" + pl + "' and '" + pr + "'");
    if (nr < nl) fail(ln, "range '" + tok + "' runs backwards");
    std::vector<std::string> out;
    for (Int i = nl; i <= nr; ++i) out.push_back(pl + str(i));
    return out;
}

inline std::vector<std::string> name_list(const Line& ln, const std::string& s) {
    std::vector<std::string> out;
    for (const auto& tok : split_ws(s))
        for (auto& nm : expand_range(ln, tok)) out.push_back(nm);
    return out;
}

inline Rat parse_rat(const Line& ln, const std::string& tok) {
    std::size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(tok));
        return Rat(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
    } catch (const std::exception&) {
        fail(ln, "cannot parse number '" + tok + "'");
    }
}

inline Int parse_int(const Line& ln, const std::string& tok) {
    Rat q = parse_rat(ln, tok);
    if (!is_integer(q)) fail(ln, "expected an integer, got '" + tok + "'");
    return numerator(q);
}

inline bool parse_bool(const Line& ln, const std::string& tok) {
    if (tok == "true") return true;
    if (tok == "false") return false;
    fail(ln, "expected true/false, got '" + tok + "'");
}

// Resolve one name to a class, searching divisors, curves, then the basis.
inline QVec resolve_name(const Line& ln, const Scenario& sc, const std::string& nm) {
    auto it = sc.divisors.find(nm);
    if (it != sc.divisors.end()) return it->second;
    if (sc.has_model) {
        if (const CurveClass* c = sc.model.find_curve(nm)) return c->v;
        for (std::size_t i = 0; i < sc.model.ns.rank(); ++i)
            if (sc.model.ns.names[i] == nm) return basis_vector(sc.model.ns, i);
    }
    fail(ln, "unknown name '" + nm + "' in expression");
}

// expr := [sign] [coeff] name { (+|-) [coeff] name }, names may be ranges
// (which sum their expansion).
inline QVec eval_expr(const Line& ln, const Scenario& sc, const std::string& text) {
    if (!sc.has_model) fail(ln, "expression before any [lattice] section");
    QVec acc(sc.model.ns.rank(), Rat(0));
    std::size_t i = 0;
    const std::string& s = text;
    auto skip_ws = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '*')) ++i;
    };
    bool any = false;
    while (true) {
        skip_ws();
        if (i >= s.size()) break;
        Rat sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
            skip_ws();
        }
        if (i >= s.size()) fail(ln, "dangling sign in expression '" + text + "'");
        Rat coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/'))
                ++j;
            coeff = parse_rat(ln, s.substr(i, j - i));
            i = j;
            skip_ws();
        }
        if (i >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            fail(ln, "expected a name in expression '" + text + "'");
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' ||
                                s[j] == '.'))
            ++j;
        std::string nm = s.substr(i, j - i);
        i = j;
        for (const auto& one : expand_range(ln, nm))
            acc = add(acc, scale(Rat(sign * coeff), resolve_name(ln, sc, one)));
        any = true;
    }
    if (!any) fail(ln, "empty expression");
    return acc;
}

}  // namespace scenario_detail

inline Scenario parse_scenario(const std::string& text) {
    using namespace scenario_detail;

    // Pass 1: strip comments, collect (section, key, value) triples.
    std::vector<Line> lines;
    bool any_section = false;
    {
        std::istringstream iss(text);
        std::string raw;
        int no = 0;
        std::string section;
        static const std::vector<std::string> known_sections = {
            "scenario", "lattice", "curves", "divisors", "facts",
            "cover",    "split",   "extension", "fibers", "family"};
        while (std::getline(iss, raw)) {
            ++no;
            std::size_t hash = raw.find('#');
            if (hash != std::string::npos) raw = raw.substr(0, hash);
            std::string s = trim(raw);
            if (s.empty()) continue;
            if (s.front() == '[') {
                if (s.back() != ']')
                    throw invalid_input("scenario line " + std::to_string(no) +
                                        ": unterminated section header");
                section = trim(s.substr(1, s.size() - 2));
                if (std::find(known_sections.begin(), known_sections.end(), section) ==
                    known_sections.end())
                    throw invalid_input("scenario line " + std::to_string(no) +
                                        ": unknown section [" + section + "]");
                any_section = true;
                continue;
            }
            std::size_t eq = s.find('=');
            if (section.empty() || eq == std::string::npos)
                throw invalid_input("scenario line " + std::to_string(no) +
                                    ": expected 'key = value' inside a section");
            lines.push_back({section, trim(s.substr(0, eq)), trim(s.substr(eq + 1)), no});
        }
    }
    if (!any_section) throw invalid_input("missing [lattice] section");

    auto in_section = [&](const std::string& sec) {
        std::vector<Line> out;
        for (const auto& ln : lines)
            if (ln.section == sec) out.push_back(ln);
        return out;
    };

    Scenario sc;

    for (const auto& ln : in_section("scenario")) {
        if (ln.key == "name")
            sc.name = ln.value;
        else if (ln.key == "description")
            sc.description = ln.value;
        else
            fail(ln, "unknown key '" + ln.key + "' in [scenario]");
    }

    // [lattice]
    {
        auto ls = in_section("lattice");
        std::vector<std::string> basis;
        std::map<std::string, IVec> rows;
        std::vector<std::pair<std::string, std::vector<std::string>>> glue_raw;
        for (const auto& ln : ls) {
            if (ln.key == "basis") {
                basis = name_list(ln, ln.value);
            } else if (ln.key.rfind("row.", 0) == 0) {
                std::string nm = ln.key.substr(4);
                IVec row;
                for (const auto& tok : split_ws(ln.value)) row.push_back(parse_int(ln, tok));
                rows[nm] = std::move(row);
            } else if (ln.key.rfind("glue.", 0) == 0) {
                glue_raw.emplace_back(ln.key.substr(5), split_ws(ln.value));
            } else {
                fail(ln, "unknown key '" + ln.key + "' in [lattice]");
            }
        }
        if (!ls.empty()) {
            if (basis.empty()) fail(ls.front(), "[lattice] needs a basis line");
            IMat gram(basis.size(), basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i) {
                auto it = rows.find(basis[i]);
                if (it == rows.end())
                    fail(ls.front(), "[lattice] is missing row." + basis[i]);
                if (it->second.size() != basis.size())
                    fail(ls.front(), "row." + basis[i] + " has " +
                                         std::to_string(it->second.size()) +
                                         " entries, expected " + std::to_string(basis.size()));
                for (std::size_t j = 0; j < basis.size(); ++j)
                    gram.at(i, j) = it->second[j];
            }
            for (const auto& [nm, row] : rows) {
                (void)row;
                if (std::find(basis.begin(), basis.end(), nm) == basis.end())
                    fail(ls.front(), "row." + nm + " does not match any basis name");
            }
            sc.model.ns = make_lattice(basis, gram);
            for (const auto& [label, toks] : glue_raw) {
                QVec v;
                for (const auto& t : toks) v.push_back(parse_rat(ls.front(), t));
                if (v.size() != basis.size())
                    fail(ls.front(), "glue." + label + " has wrong length");
                sc.model.ns = adjoin_glue(sc.model.ns, v, label);
            }
            sc.has_model = true;
        }
    }

    // [curves]
    for (const auto& ln : in_section("curves")) {
        CurveClass c;
        c.name = ln.key;
        std::string expr = ln.value, flags;
        std::size_t bar = ln.value.find('|');
        if (bar != std::string::npos) {
            expr = trim(ln.value.substr(0, bar));
            flags = ln.value.substr(bar + 1);
        }
        c.v = eval_expr(ln, sc, expr);
        for (const auto& f : split_ws(flags)) {
            if (f == "rational")
                c.rational = true;
            else if (f == "irreducible")
                c.irreducible = true;
            else if (f == "smooth")
                c.smooth = true;
            else if (f == "section")
                c.section = true;
            else if (f == "fiber-component")
                c.fiber_component = true;
            else
                fail(ln, "unknown curve flag '" + f + "'");
        }
        if (sc.model.find_curve(c.name))
            fail(ln, "curve '" + c.name + "' defined twice");
        sc.model.curves.push_back(std::move(c));
    }

    // [divisors]
    for (const auto& ln : in_section("divisors")) {
        if (sc.divisors.count(ln.key)) fail(ln, "divisor '" + ln.key + "' defined twice");
        sc.divisors[ln.key] = eval_expr(ln, sc, ln.value);
    }

    // [facts]
    for (const auto& ln : in_section("facts")) {
        if (ln.key == "h0") {
            auto toks = split_ws(ln.value);
            if (toks.size() < 3 || toks[1] != "on")
                fail(ln, "expected 'h0 = <count> on <expr>'");
            Int count = parse_int(ln, toks[0]);
            std::string expr;
            for (std::size_t i = 2; i < toks.size(); ++i) expr += toks[i] + " ";
            sc.model.facts.declare(eval_expr(ln, sc, expr)).h0 = count;
            continue;
        }
        QVec v = eval_expr(ln, sc, ln.value);
        Facts& f = sc.model.facts.declare(v);
        if (ln.key == "nef")
            f.nef = true;
        else if (ln.key == "big")
            f.big = true;
        else if (ln.key == "pseudoample")
            f.pseudoample = true;
        else if (ln.key == "effective")
            f.effective = true;
        else if (ln.key == "not-effective")
            f.not_effective = true;
        else if (ln.key == "irreducible-member")
            f.irreducible_member = true;
        else if (ln.key == "elliptic-fiber")
            f.elliptic_fiber = true;
        else
            fail(ln, "unknown fact '" + ln.key + "' in [facts]");
    }

    // [cover]
    {
        auto ls = in_section("cover");
        auto curve_list = [&](const Line& ln) {
            auto names = name_list(ln, ln.value);
            for (const auto& nm : names)
                if (!sc.model.find_curve(nm))
                    fail(ln, "'" + nm + "' is not a declared curve");
            return names;
        };
        if (!ls.empty()) {
            GaloisCoverInput input;
            for (const auto& ln : ls) {
                if (ln.key == "B")
                    input.B = curve_list(ln);
                else if (ln.key == "C")
                    input.C = curve_list(ln);
                else if (ln.key == "ledger-complete")
                    input.ledger_complete = parse_bool(ln, ln.value);
                else if (ln.key == "tangent" || ln.key == "cusp" || ln.key == "triple-point")
                    input.declared.push_back(
                        {ln.key == "triple-point" ? "triple_point" : ln.key,
                         curve_list(ln)});
                else
                    fail(ln, "unknown key '" + ln.key + "' in [cover]");
            }
            sc.cover = std::move(input);
        }
    }

    // [split]
    {
        auto ls = in_section("split");
        auto curve_list = [&](const Line& ln) {
            auto names = name_list(ln, ln.value);
            for (const auto& nm : names)
                if (!sc.model.find_curve(nm))
                    fail(ln, "'" + nm + "' is not a declared curve");
            return names;
        };
        if (!ls.empty()) {
            SplitCoverInput input;
            for (const auto& ln : ls) {
                if (ln.key == "B-triple")
                    input.B_triple = curve_list(ln);
                else if (ln.key == "C-triple")
                    input.C_triple = curve_list(ln);
                else if (ln.key == "B-split")
                    input.B_split = curve_list(ln);
                else if (ln.key == "C-split")
                    input.C_split = curve_list(ln);
                else
                    fail(ln, "unknown key '" + ln.key + "' in [split]");
            }
            sc.split = std::move(input);
        }
    }

    // [extension]
    for (const auto& ln : in_section("extension")) {
        auto toks = split_ws(ln.value);
        auto geom_of = [&](const std::string& g) {
            if (g == "distinct") return PointGeometry::distinct_fibers;
            if (g == "same-fiber") return PointGeometry::same_fiber;
            if (g == "double-point") return PointGeometry::double_point;
            fail(ln, "unknown point geometry '" + g + "'");
        };
        if (ln.key == "L")
            sc.ext_L = eval_expr(ln, sc, ln.value);
        else if (ln.key == "M")
            sc.ext_M = eval_expr(ln, sc, ln.value);
        else if (ln.key == "fiber") {
            if (toks.size() != 2) fail(ln, "expected 'fiber = <n> <m>'");
            sc.ext_fiber = {parse_int(ln, toks[0]), parse_int(ln, toks[1])};
        } else if (ln.key == "ideal") {
            if (toks.size() != 3) fail(ln, "expected 'ideal = <len> <m> <geometry>'");
            sc.ideal = Scenario::IdealQuery{parse_int(ln, toks[0]), parse_int(ln, toks[1]),
                                            geom_of(toks[2])};
        } else if (ln.key == "bundle") {
            if (toks.size() != 4 || toks[3] != "distinct")
                fail(ln, "expected 'bundle = <n> <m> <len> distinct'");
            sc.bundle = {parse_int(ln, toks[0]), parse_int(ln, toks[1]), parse_int(ln, toks[2])};
        } else {
            fail(ln, "unknown key '" + ln.key + "' in [extension]");
        }
    }

    // [fibers]
    for (const auto& ln : in_section("fibers")) {
        if (ln.key == "b1")
            sc.bc_b1 = parse_int(ln, ln.value);
        else if (ln.key == "b2")
            sc.bc_b2 = parse_int(ln, ln.value);
        else if (ln.key == "fiber") {
            auto toks = split_ws(ln.value);
            if (toks.empty() || toks.size() > 2) fail(ln, "expected 'fiber = <type> [b1|b2]'");
            MarkedFiber mf;
            mf.type = parse_fiber_type(toks[0]);
            if (toks.size() == 2) {
                if (toks[1] == "b1")
                    mf.branch = 1;
                else if (toks[1] == "b2")
                    mf.branch = 2;
                else
                    fail(ln, "fiber mark must be b1 or b2, got '" + toks[1] + "'");
            }
            sc.bc_fibers.push_back(mf);
        } else {
            fail(ln, "unknown key '" + ln.key + "' in [fibers]");
        }
    }

    // [family]
    for (const auto& ln : in_section("family")) {
        auto toks = split_ws(ln.value);
        if (ln.key == "irreducible") {
            if (toks.size() != 2) fail(ln, "expected 'irreducible = <D1^2> <n>'");
            sc.family_irreducible = {parse_int(ln, toks[0]), parse_int(ln, toks[1])};
        } else if (ln.key == "split-gentype") {
            if (toks.size() != 2) fail(ln, "expected 'split-gentype = <k> <h>'");
            sc.family_split_gentype = {parse_int(ln, toks[0]), parse_int(ln, toks[1])};
        } else if (ln.key == "split-elliptic") {
            if (toks.size() != 3) fail(ln, "expected 'split-elliptic = <k> <h> <r>'");
            sc.family_split_elliptic = {parse_int(ln, toks[0]), parse_int(ln, toks[1]),
                                        parse_int(ln, toks[2])};
        } else if (ln.key == "rho") {
            sc.declared_rho = parse_int(ln, ln.value);
        } else {
            fail(ln, "unknown key '" + ln.key + "' in [family]");
        }
    }

    if (sc.has_model) {
        sc.model.name = sc.name.empty() ? "model" : sc.name;
        // A bare lattice (no curves, no question that needs K3 geometry) may
        // have any signature - lattice-info works on definite lattices too.
        if (!sc.model.curves.empty() || sc.cover || sc.split || sc.ext_L || sc.ext_M)
            validate_model(sc.model);
    }
    return sc;
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    K3_CHECK(in.good(), "cannot open scenario file '" << path << "'");
    std::ostringstream oss;
    oss << in.rdbuf();
    return parse_scenario(oss.str());
}

namespace scenario_detail {

// A class vector as a signed sum of basis names, reparsable by eval_expr.
inline std::string render_expr(const Lattice& lat, const QVec& v) {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < lat.rank(); ++i) {
        if (v[i] == 0) continue;
        const bool neg = v[i] < 0;
        const Rat a = neg ? Rat(-v[i]) : v[i];
        if (first)
            out += neg ? "- " : "";
        else
            out += neg ? " - " : " + ";
        if (a != 1) out += str(a) + " ";
        out += lat.names[i];
        first = false;
    }
    return out;
}

inline std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += " ";
        out += names[i];
    }
    return out;
}

}  // namespace scenario_detail

// Canonical text form; parse_scenario(serialize_scenario(sc)) == sc.
inline std::string serialize_scenario(const Scenario& sc) {
    using namespace scenario_detail;
    std::ostringstream out;
    out << "[scenario]\n";
    out << "name = " << sc.name << "\n";
    if (!sc.description.empty()) out << "description = " << sc.description << "\n";

    if (sc.has_model) {
        const Lattice& lat = sc.model.ns;
        out << "\n[lattice]\n";
        out << "basis = " << join(lat.names) << "\n";
        for (std::size_t i = 0; i < lat.rank(); ++i) {
            out << "row." << lat.names[i] << " =";
            for (std::size_t j = 0; j < lat.rank(); ++j) out << " " << str(lat.gram.at(i, j));
            out << "\n";
        }
        for (std::size_t g = 0; g < lat.glue.size(); ++g) {
            out << "glue.g" << (g + 1) << " =";
            for (const auto& q : lat.glue[g]) out << " " << str(q);
            out << "\n";
        }
        if (!sc.model.curves.empty()) {
            out << "\n[curves]\n";
            for (const auto& c : sc.model.curves) {
                out << c.name << " = " << render_expr(lat, c.v);
                std::vector<std::string> flags;
                if (c.rational) flags.push_back("rational");
                if (c.irreducible) flags.push_back("irreducible");
                if (c.smooth) flags.push_back("smooth");
                if (c.section) flags.push_back("section");
                if (c.fiber_component) flags.push_back("fiber-component");
                if (!flags.empty()) out << " | " << join(flags);
                out << "\n";
            }
        }
        if (!sc.divisors.empty()) {
            out << "\n[divisors]\n";
            for (const auto& [nm, v] : sc.divisors)
                out << nm << " = " << render_expr(lat, v) << "\n";
        }
        if (!sc.model.facts.all().empty()) {
            out << "\n[facts]\n";
            for (const auto& [key, slot] : sc.model.facts.all()) {
                (void)key;
                const std::string e = render_expr(lat, slot.first);
                const Facts& f = slot.second;
                if (f.nef) out << "nef = " << e << "\n";
                if (f.big) out << "big = " << e << "\n";
                if (f.pseudoample) out << "pseudoample = " << e << "\n";
                if (f.effective) out << "effective = " << e << "\n";
                if (f.not_effective) out << "not-effective = " << e << "\n";
                if (f.irreducible_member) out << "irreducible-member = " << e << "\n";
                if (f.elliptic_fiber) out << "elliptic-fiber = " << e << "\n";
                if (f.h0) out << "h0 = " << str(*f.h0) << " on " << e << "\n";
            }
        }
    }

    if (sc.cover) {
        out << "\n[cover]\n";
        if (!sc.cover->B.empty()) out << "B = " << join(sc.cover->B) << "\n";
        if (!sc.cover->C.empty()) out << "C = " << join(sc.cover->C) << "\n";
        for (const auto& d : sc.cover->declared)
            out << (d.kind == "triple_point" ? "triple-point" : d.kind) << " = "
                << join(d.curves) << "\n";
        out << "ledger-complete = " << (sc.cover->ledger_complete ? "true" : "false")
            << "\n";
    }
    if (sc.split) {
        out << "\n[split]\n";
        out << "B-triple = " << join(sc.split->B_triple) << "\n";
        out << "C-triple = " << join(sc.split->C_triple) << "\n";
        out << "B-split = " << join(sc.split->B_split) << "\n";
        out << "C-split = " << join(sc.split->C_split) << "\n";
    }
    if (sc.ext_L || sc.ext_M || sc.ext_fiber || sc.ideal || sc.bundle) {
        out << "\n[extension]\n";
        if (sc.ext_L) out << "L = " << render_expr(sc.model.ns, *sc.ext_L) << "\n";
        if (sc.ext_M) out << "M = " << render_expr(sc.model.ns, *sc.ext_M) << "\n";
        if (sc.ext_fiber)
            out << "fiber = " << str(sc.ext_fiber->first) << " " << str(sc.ext_fiber->second)
                << "\n";
        if (sc.ideal) {
            const char* g = sc.ideal->geom == PointGeometry::distinct_fibers ? "distinct"
                            : sc.ideal->geom == PointGeometry::same_fiber    ? "same-fiber"
                                                                             : "double-point";
            out << "ideal = " << str(sc.ideal->len) << " " << str(sc.ideal->m) << " " << g
                << "\n";
        }
        if (sc.bundle)
            out << "bundle = " << str((*sc.bundle)[0]) << " " << str((*sc.bundle)[1]) << " "
                << str((*sc.bundle)[2]) << " distinct\n";
    }
    if (sc.bc_b1 || sc.bc_b2 || !sc.bc_fibers.empty()) {
        out << "\n[fibers]\n";
        if (sc.bc_b1) out << "b1 = " << str(*sc.bc_b1) << "\n";
        if (sc.bc_b2) out << "b2 = " << str(*sc.bc_b2) << "\n";
        for (const auto& mf : sc.bc_fibers) {
            out << "fiber = " << str(mf.type);
            if (mf.branch == 1) out << " b1";
            if (mf.branch == 2) out << " b2";
            out << "\n";
        }
    }
    if (sc.family_irreducible || sc.family_split_gentype || sc.family_split_elliptic ||
        sc.declared_rho) {
        out << "\n[family]\n";
        if (sc.family_irreducible)
            out << "irreducible = " << str(sc.family_irreducible->first) << " "
                << str(sc.family_irreducible->second) << "\n";
        if (sc.family_split_gentype)
            out << "split-gentype = " << str(sc.family_split_gentype->first) << " "
                << str(sc.family_split_gentype->second) << "\n";
        if (sc.family_split_elliptic)
            out << "split-elliptic = " << str((*sc.family_split_elliptic)[0]) << " "
                << str((*sc.family_split_elliptic)[1]) << " "
                << str((*sc.family_split_elliptic)[2]) << "\n";
        if (sc.declared_rho) out << "rho = " << str(*sc.declared_rho) << "\n";
    }
    return out.str();
}

}  // namespace k3cover
