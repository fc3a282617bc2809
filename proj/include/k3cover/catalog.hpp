#pragma once

// Built-in worked examples: each entry constructs a scenario in code, runs
// the relevant operations, and checks the results against independently
// computed expected values.  `catalog-run` executes them from the CLI; the
// acceptance tests reuse them.

#include "k3cover/named_lattices.hpp"
#include "k3cover/run.hpp"

#include <functional>

namespace k3cover {

struct CatalogCheck {
    std::string label;
    bool pass = false;
    std::string detail;  // empty when passing
};

struct CatalogResult {
    std::string name;
    Report report;
    std::vector<CatalogCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

class Checker {
  public:
    explicit Checker(CatalogResult& out) : out_(out) {}
    void is_true(const std::string& label, bool got, const std::string& why = {}) {
        out_.checks.push_back({label, got, got ? "" : (why.empty() ? "expected true" : why)});
    }
    void eq_int(const std::string& label, const Int& got, const Int& want) {
        out_.checks.push_back(
            {label, got == want,
             got == want ? "" : "got " + str(got) + ", want " + str(want)});
    }
    void eq_str(const std::string& label, const std::string& got, const std::string& want) {
        out_.checks.push_back(
            {label, got == want, got == want ? "" : "got '" + got + "', want '" + want + "'"});
    }
    void exact(const std::string& label, const MaybeInt& got, const Int& want) {
        bool ok = got.is_exact() && got.value == want;
        out_.checks.push_back(
            {label, ok, ok ? "" : "got " + got.render() + ", want " + str(want)});
    }
    void at_least(const std::string& label, const MaybeInt& got, const Int& want) {
        bool ok = got.known_at_least(want);
        out_.checks.push_back(
            {label, ok, ok ? "" : "got " + got.render() + ", want >=" + str(want)});
    }
    void invariants(const std::string& tag, const SurfaceInvariants& got, const Int& chi,
                    const Int& K2, const Int& e) {
        eq_int(tag + ".chi", got.chi, chi);
        eq_int(tag + ".K2", got.K2, K2);
        eq_int(tag + ".e", got.e, e);
    }

  private:
    CatalogResult& out_;
};

struct CatalogEntry {
    std::string name;
    std::string description;
    std::function<CatalogResult()> run;
};

namespace catdetail {

inline QVec cls(const Lattice& lat, std::initializer_list<std::pair<const char*, Rat>> terms) {
    QVec v(lat.rank(), Rat(0));
    for (const auto& t : terms) v[lat.index_of(t.first)] += t.second;
    return v;
}

// n disjoint A2(-1) blocks with members <p><i>1, <p><i>2.
inline Lattice a2_sum(std::size_t n, const std::string& p = "A") {
    std::vector<std::string> names;
    IMat gram(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(p + std::to_string(i + 1) + "1");
        names.push_back(p + std::to_string(i + 1) + "2");
        gram.at(2 * i, 2 * i) = -2;
        gram.at(2 * i + 1, 2 * i + 1) = -2;
        gram.at(2 * i, 2 * i + 1) = 1;
        gram.at(2 * i + 1, 2 * i) = 1;
    }
    return make_lattice(std::move(names), std::move(gram));
}

// The class (sum of 2*<p><i>1 + <p><i>2)/3 over n blocks, plus extra terms.
inline QVec triple_glue(const Lattice& lat, std::size_t n, const std::string& p,
                        std::initializer_list<std::pair<const char*, Rat>> extra = {}) {
    QVec v(lat.rank(), Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        v[lat.index_of(p + std::to_string(i + 1) + "1")] = Rat(2, 3);
        v[lat.index_of(p + std::to_string(i + 1) + "2")] = Rat(1, 3);
    }
    for (const auto& t : extra) v[lat.index_of(t.first)] += t.second;
    return v;
}

inline void add_curve(K3Model& m, const std::string& name, QVec v, bool rational,
                      bool irreducible, bool smooth, bool section = false,
                      bool fiber_component = false) {
    m.curves.push_back({name, std::move(v), rational, irreducible, smooth, section,
                        fiber_component});
}

inline void add_rational(K3Model& m, const std::vector<std::string>& names) {
    for (const auto& nm : names)
        add_curve(m, nm, basis_vector(m.ns, m.ns.index_of(nm)), true, true, true);
}

inline std::vector<std::string> block_names(std::size_t n, const std::string& p,
                                            const std::string& suffix) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(p + std::to_string(i + 1) + suffix);
    return out;
}

inline std::vector<std::string> numbered(std::size_t n, const std::string& p) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(p + std::to_string(i + 1));
    return out;
}

// Report composed of the standard Galois-cover operations.
inline Report galois_report(const Scenario& sc) {
    Report rep;
    rep["invariants"] = run_cover_invariants(sc);
    rep["classification"] = run_cover_classify(sc);
    return rep;
}

// The branch = n A2-configurations scenario (plus a carrier block making the
// lattice hyperbolic).  Used by the two torsion-cover entries.
inline Scenario all_a2_scenario(std::size_t n, const Lattice& carrier) {
    Scenario sc;
    sc.has_model = true;
    Lattice lat = lattices::direct_sum(carrier, a2_sum(n));
    QVec L = triple_glue(lat, n, "A");
    lat = adjoin_glue(lat, L, "L");
    sc.model.ns = lat;
    add_rational(sc.model, block_names(n, "A", "1"));
    add_rational(sc.model, block_names(n, "A", "2"));
    GaloisCoverInput in;
    in.B = block_names(n, "A", "1");
    in.C = block_names(n, "A", "2");
    sc.cover = in;
    // Neither L nor M nor their negatives carries sections here.
    QVec Lv = triple_glue(sc.model.ns, n, "A");
    QVec Mv(Lv.size(), Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        Mv[sc.model.ns.index_of("A" + std::to_string(i + 1) + "1")] = Rat(1, 3);
        Mv[sc.model.ns.index_of("A" + std::to_string(i + 1) + "2")] = Rat(2, 3);
    }
    for (const QVec& v : {Lv, negate(Lv), Mv, negate(Mv)})
        sc.model.facts.declare(v).not_effective = true;
    return sc;
}

}  // namespace catdetail

// --- the entries ----------------------------------------------------------------

namespace catentries {

using namespace catdetail;

inline CatalogResult six_a2_k3() {
    Scenario sc = all_a2_scenario(6, make_lattice({"F", "O"}, IMat{{Int(0), Int(1)},
                                                                   {Int(1), Int(-2)}}));
    sc.name = "six-a2-k3";
    CatalogResult res{sc.name, {}, {}};
    Checker ck(res);
    res.report = galois_report(sc);

    auto g = rundetail::run_galois_pipeline(sc);
    ck.eq_int("L^2", to_int(norm(sc.model.ns, g.cover.L)), -4);
    ck.eq_int("M^2", to_int(norm(sc.model.ns, g.cover.M)), -4);
    ck.eq_int("L.M", to_int(pair(sc.model.ns, g.cover.L, g.cover.M)), -2);
    ck.invariants("resolution", g.resolution, 2, -18, 42);
    ck.eq_int("ledger.total", g.ledger.total, 18);
    ck.is_true("ledger.complete", g.ledger.complete, g.ledger.completeness_note);
    ck.invariants("minimal", g.minimal.inv, 2, 0, 24);
    ck.is_true("minimal.certified", g.minimal.certified, g.minimal.note);
    ck.exact("q", g.resolution.q, 0);
    ck.exact("pg", g.resolution.pg, 1);
    KodairaResult kod = classify_kodaira(g.cover);
    ck.is_true("kodaira.valid", kod.valid, kod.reason);
    ck.is_true("kodaira.dim0", kod.dim && *kod.dim == 0, kod.reason);
    ck.eq_str("kodaira.kind", kod.minimal_model_kind, "K3");
    return res;
}

inline CatalogResult nine_a2_abelian() {
    Scenario sc = all_a2_scenario(9, lattices::span_of_square("H", 2));
    sc.name = "nine-a2-abelian";
    CatalogResult res{sc.name, {}, {}};
    Checker ck(res);
    res.report = galois_report(sc);

    auto g = rundetail::run_galois_pipeline(sc);
    ck.eq_int("L^2", to_int(norm(sc.model.ns, g.cover.L)), -6);
    ck.eq_int("M^2", to_int(norm(sc.model.ns, g.cover.M)), -6);
    ck.eq_int("L.M", to_int(pair(sc.model.ns, g.cover.L, g.cover.M)), -3);
    ck.invariants("resolution", g.resolution, 0, -27, 27);
    ck.eq_int("ledger.total", g.ledger.total, 27);
    ck.invariants("minimal", g.minimal.inv, 0, 0, 0);
    ck.is_true("minimal.certified", g.minimal.certified, g.minimal.note);
    ck.exact("q", g.resolution.q, 2);
    ck.exact("pg", g.resolution.pg, 1);
    KodairaResult kod = classify_kodaira(g.cover);
    ck.is_true("kodaira.dim0", kod.valid && kod.dim && *kod.dim == 0, kod.reason);
    ck.eq_str("kodaira.kind", kod.minimal_model_kind, "Abelian");
    return res;
}

inline CatalogResult pg2_general_type() {
    Scenario sc;
    sc.name = "pg2-general-type";
    sc.has_model = true;
    Lattice lat = lattices::direct_sum(lattices::span_of_square("D1", 6), a2_sum(7));
    QVec L = triple_glue(lat, 7, "A", {{"D1", Rat(1, 3)}});
    lat = adjoin_glue(lat, L, "L");
    sc.model.ns = lat;
    add_curve(sc.model, "D1", cls(lat, {{"D1", 1}}), false, true, true);
    add_rational(sc.model, block_names(7, "A", "1"));
    add_rational(sc.model, block_names(7, "A", "2"));
    GaloisCoverInput in;
    in.B = block_names(7, "A", "1");
    in.C = block_names(7, "A", "2");
    in.C.insert(in.C.begin(), "D1");
    sc.cover = in;

    CatalogResult res{sc.name, {}, {}};
    Checker ck(res);
    // L is rigid-free on both sides; M is represented by a rigid curve.
    CoverData pre = validate_cover(sc.model, *sc.cover);
    sc.model.facts.declare(pre.L).not_effective = true;
    sc.model.facts.declare(negate(pre.L)).not_effective = true;
    Facts& fm = sc.model.facts.declare(pre.M);
    fm.effective = true;
    fm.irreducible_member = true;
    sc.family_irreducible = std::make_pair(Int(6), Int(8));
    res.report = galois_report(sc);

    auto g = rundetail::run_galois_pipeline(sc);
    ck.eq_int("L^2", to_int(norm(sc.model.ns, g.cover.L)), -4);
    ck.eq_int("M^2", to_int(norm(sc.model.ns, g.cover.M)), -2);
    ck.eq_int("L.M", to_int(pair(sc.model.ns, g.cover.L, g.cover.M)), -1);
    ck.invariants("resolution", g.resolution, 3, -13, 49);
    ck.eq_int("ledger.total", g.ledger.total, 21);
    ck.is_true("ledger.complete", g.ledger.complete, g.ledger.completeness_note);
    ck.invariants("minimal", g.minimal.inv, 3, 8, 28);
    ck.exact("q", g.resolution.q, 0);
    ck.exact("pg", g.resolution.pg, 2);
    KodairaResult kod = classify_kodaira(g.cover);
    ck.is_true("kodaira.dim2", kod.valid && kod.dim && *kod.dim == 2, kod.reason);
    auto fam = classify_irreducible(6, 8);
    ck.invariants("family.minimal", fam.minimal_model, 3, 8, 28);
    ck.exact("family.q", fam.minimal_model.q, 0);
    ck.exact("family.pg", fam.minimal_model.pg, 2);
    return res;
}

inline CatalogResult ten_curve_chi4() {
    Scenario sc;
    sc.name = "ten-curve-chi4";
    sc.has_model = true;
    std::vector<std::string> names = {"G0", "G1", "P0", "P1", "P2", "P3",
                                      "A1", "A2", "A1p", "A2p"};
    IMat gram(10, 10);
    auto set = [&](int i, int j, Int v) {
        gram.at(i, j) = v;
        gram.at(j, i) = v;
    };
    for (int i = 0; i < 10; ++i) gram.at(i, i) = -2;
    set(0, 1, 2);  // G0.G1
    set(0, 2, 1);  // G0.P0
    set(0, 4, 1);  // G0.P2
    set(1, 3, 1);  // G1.P1
    set(1, 5, 1);  // G1.P3
    set(6, 7, 1);  // A1.A2
    set(8, 9, 1);  // A1p.A2p
    Lattice lat = make_lattice(names, gram);
    QVec B = cls(lat, {{"G0", 1}, {"P1", 1}, {"P3", 1}, {"A1", 1}, {"A1p", 1}});
    QVec C = cls(lat, {{"G1", 1}, {"P0", 1}, {"P2", 1}, {"A2", 1}, {"A2p", 1}});
    QVec L(10), M(10);
    for (std::size_t i = 0; i < 10; ++i) {
        L[i] = (2 * B[i] + C[i]) / 3;
        M[i] = (B[i] + 2 * C[i]) / 3;
    }
    lat = adjoin_glue(lat, L, "L");
    sc.model.ns = lat;
    add_rational(sc.model, names);
    for (const QVec& v : {L, M}) {
        Facts& f = sc.model.facts.declare(v);
        f.effective = true;
        f.irreducible_member = true;
    }
    GaloisCoverInput in;
    in.B = {"G0", "P1", "P3", "A1", "A1p"};
    in.C = {"G1", "P0", "P2", "A2", "A2p"};
    // The two four-point curves G0, G1 stay put; nothing else contracts.
    in.ledger_complete = true;
    sc.cover = in;

    CatalogResult res{sc.name, {}, {}};
    Checker ck(res);
    res.report = galois_report(sc);

    auto g = rundetail::run_galois_pipeline(sc);
    ck.eq_int("B^2", to_int(norm(lat, g.cover.Bv)), -10);
    ck.eq_int("C^2", to_int(norm(lat, g.cover.Cv)), -10);
    ck.eq_int("B.C", to_int(pair(lat, g.cover.Bv, g.cover.Cv)), 8);
    ck.eq_int("L^2", to_int(norm(lat, g.cover.L)), -2);
    ck.eq_int("M^2", to_int(norm(lat, g.cover.M)), -2);
    ck.eq_int("L.M", to_int(pair(lat, g.cover.L, g.cover.M)), 0);
    ck.eq_int("type2.nodes", g.sings.cross_part, 8);
    ck.invariants("resolution", g.resolution, 4, -8, 56);
    ck.eq_int("ledger.total", g.ledger.total, 10);
    ck.invariants("minimal", g.minimal.inv, 4, 2, 46);
    ck.exact("q", g.resolution.q, 0);
    ck.exact("pg", g.resolution.pg, 3);
    KodairaResult kod = classify_kodaira(g.cover);
    ck.is_true("kodaira.dim2", kod.valid && kod.dim && *kod.dim == 2, kod.reason);
    return res;
}

// Shared shape of the two even-set tower entries: B = one smooth curve
// G = (3H - sum N)/2, C = all the N_i.
inline CatalogResult even_set_tower(const std::string& name, Lattice lat, std::size_t n_nodes,
                                    const Int& L2, const Int& M2, const Int& LM,
                                    const Int& chi, const Int& K2res, const Int& e_res,
                                    const Int& K2min, const Int& e_min, const Int& pg) {
    Scenario sc;
    sc.name = name;
    sc.has_model = true;
    sc.model.ns = lat;
    QVec H = cls(lat, {{"H", 1}});
    QVec G = cls(lat, {{"H", Rat(3, 2)}});
    QVec M = cls(lat, {{"H", Rat(1, 2)}});
    for (std::size_t i = 0; i < n_nodes; ++i) {
        std::string nm = "N" + std::to_string(i + 1);
        G[lat.index_of(nm)] = Rat(-1, 2);
        M[lat.index_of(nm)] = Rat(1, 2);
    }
    add_curve(sc.model, "G", G, false, true, true);
    add_rational(sc.model, numbered(n_nodes, "N"));
    sc.model.facts.declare(H).pseudoample = true;
    sc.model.facts.declare(M).not_effective = true;
    sc.model.facts.declare(negate(M)).not_effective = true;
    GaloisCoverInput in;
    in.B = {"G"};
    in.C = numbered(n_nodes, "N");
    sc.cover = in;

    CatalogResult res{name, {}, {}};
    Checker ck(res);
    res.report = galois_report(sc);

    auto g = rundetail::run_galois_pipeline(sc);
    ck.is_true("L = H", g.cover.L == H, "L should be the polarization class");
    ck.eq_int("L^2", to_int(norm(lat, g.cover.L)), L2);
    ck.eq_int("M^2", to_int(norm(lat, g.cover.M)), M2);
    ck.eq_int("L.M", to_int(pair(lat, g.cover.L, g.cover.M)), LM);
    ck.eq_int("type2.nodes", g.sings.cross_part, Int(n_nodes));
    ck.invariants("resolution", g.resolution, chi, K2res, e_res);
    ck.eq_int("ledger.total", g.ledger.total, Int(n_nodes));
    ck.is_true("ledger.complete", g.ledger.complete, g.ledger.completeness_note);
    ck.invariants("minimal", g.minimal.inv, chi, K2min, e_min);
    ck.is_true("minimal.certified", g.minimal.certified, g.minimal.note);
    ck.exact("q", g.resolution.q, 1);
    ck.exact("pg", g.resolution.pg, pg);
    KodairaResult kod = classify_kodaira(g.cover);
    ck.is_true("kodaira.dim2", kod.valid && kod.dim && *kod.dim == 2, kod.reason);
    return res;
}

inline CatalogResult s16_irregular() {
    return even_set_tower("s16-irregular", lattices::rank16_prime(), 15, 6, -6, 3, 6, 3,
                          69, 18, 54, 6);
}

inline CatalogResult s15_irregular() {
    return even_set_tower("s15-irregular", lattices::rank15_prime(), 14, 4, -6, 2, 5, -2,
                          62, 12, 48, 5);
}

// Genus-one fibration with k disjoint sections moved into the branch together
// with n-1 A2-configurations.
inline CatalogResult fibration_case(const std::string& name, std::size_t k, std::size_t n) {
    Scenario sc;
    sc.name = name;
    sc.has_model = true;
    std::vector<std::string> names = {"F"};
    for (auto& p : numbered(k, "P")) names.push_back(p);
    IMat gram(k + 1, k + 1);
    for (std::size_t i = 1; i <= k; ++i) {
        gram.at(i, i) = -2;
        gram.at(0, i) = 1;
        gram.at(i, 0) = 1;
    }
    Lattice lat = make_lattice(names, gram);
    if (n > 1) lat = lattices::direct_sum(lat, a2_sum(n - 1));
    QVec L = triple_glue(lat, n - 1, "A", {{"F", Rat(1, 3)}});
    for (std::size_t i = 1; i <= k; ++i) L[lat.index_of("P" + std::to_string(i))] = Rat(2, 3);
    lat = adjoin_glue(lat, L, "L");
    sc.model.ns = lat;
    add_curve(sc.model, "F", cls(lat, {{"F", 1}}), false, true, true);
    sc.model.facts.declare(cls(lat, {{"F", 1}})).elliptic_fiber = true;
    for (const auto& p : numbered(k, "P"))
        add_curve(sc.model, p, basis_vector(lat, lat.index_of(p)), true, true, true, true);
    add_rational(sc.model, block_names(n - 1, "A", "1"));
    add_rational(sc.model, block_names(n - 1, "A", "2"));
    GaloisCoverInput in;
    in.B = numbered(k, "P");
    for (auto& nm : block_names(n - 1, "A", "1")) in.B.push_back(nm);
    in.C = {"F"};
    for (auto& nm : block_names(n - 1, "A", "2")) in.C.push_back(nm);
    sc.cover = in;

    CatalogResult res{name, {}, {}};
    Checker ck(res);
    res.report = galois_report(sc);

    const Int ki = Int(k), ni = Int(n);
    auto g = rundetail::run_galois_pipeline(sc);
    ck.eq_int("L^2", to_int(norm(lat, g.cover.L)), (6 - 4 * ki - 6 * ni) / 9);
    ck.eq_int("M^2", to_int(norm(lat, g.cover.M)), (2 * ki + 6 - 6 * ni) / 9);
    ck.eq_int("L.M", to_int(pair(lat, g.cover.L, g.cover.M)), (ki + 3 - 3 * ni) / 9);
    ck.eq_int("resolution.chi", g.resolution.chi, (60 - 6 * ni - ki) / 9);
    ck.eq_int("ledger.total", g.ledger.total, 3 * (ni - 1) + ki);
    ck.is_true("ledger.complete", g.ledger.complete, g.ledger.completeness_note);
    ck.eq_int("minimal.K2", g.minimal.inv.K2, 2 * ki / 3);
    ck.eq_int("minimal.chi", g.minimal.inv.chi, (60 - 6 * ni - ki) / 9);
    KodairaResult kod = classify_kodaira(g.cover);
    ck.is_true("kodaira.dim2", kod.valid && kod.dim && *kod.dim == 2, kod.reason);
    return res;
}

inline CatalogResult case_kn_32() { return fibration_case("case-kn-32", 3, 2); }
inline CatalogResult case_kn_63() { return fibration_case("case-kn-63", 6, 3); }
inline CatalogResult case_kn_91() { return fibration_case("case-kn-91", 9, 1); }

inline CatalogResult base_change_n3() {
    Scenario sc;
    sc.name = "base-change-n3";
    sc.has_model = true;
    Lattice lat = make_lattice({"F", "O"}, IMat{{Int(0), Int(1)}, {Int(1), Int(-2)}});
    sc.model.ns = lat;
    QVec F = cls(lat, {{"F", 1}});
    for (int i = 1; i <= 3; ++i)
        add_curve(sc.model, "F" + std::to_string(i), F, false, true, true);
    sc.model.facts.declare(F).elliptic_fiber = true;
    GaloisCoverInput in;
    in.B = {"F1", "F2", "F3"};
    sc.cover = in;
    sc.bc_b1 = 3;
    sc.bc_b2 = 0;
    for (int i = 0; i < 3; ++i) sc.bc_fibers.push_back({fiber_In(2), 1});
    for (int i = 0; i < 18; ++i) sc.bc_fibers.push_back({fiber_In(1), 0});

    CatalogResult res{sc.name, {}, {}};
    Checker ck(res);
    Report rep;
    rep["invariants"] = run_cover_invariants(sc);
    rep["base_change"] = run_base_change(sc);
    res.report = rep;

    auto g = rundetail::run_galois_pipeline(sc);
    ck.is_true("branch.smooth", g.smooth_branch, "expected a smooth branch");
    ck.invariants("cover", g.resolution, 6, 0, 72);
    ck.exact("q", g.resolution.q, 1);
    ck.exact("pg", g.resolution.pg, 6);
    auto fib = fiber_genus_one_family_check(sc.model, g.cover);
    ck.is_true("fiber.family", fib.is_fiber_family, fib.reason);
    ck.eq_int("fiber.b1", fib.b1, 3);
    ck.eq_int("fiber.b2", fib.b2, 0);
    auto bc = base_change_invariants(3, 0, sc.bc_fibers);
    ck.eq_int("base.genus", bc.genus_base, 1);
    ck.invariants("base_change", bc.inv, 6, 0, 72);
    ck.exact("base_change.q", bc.inv.q, 1);
    ck.exact("base_change.pg", bc.inv.pg, 6);
    Int e_up = 0;
    for (const auto& t : bc.fibers) e_up += Int(t.copies) * fiber_euler(t.result);
    ck.eq_int("euler.upstairs", e_up, 72);
    return res;
}

inline CatalogResult split_k3_tower() {
    Scenario sc;
    sc.name = "split-k3-tower";
    sc.has_model = true;
    Lattice lat = lattices::direct_sum(lattices::span_of_square("H", 4), a2_sum(3, "T"));
    lat = lattices::direct_sum(lat, lattices::a1_sum(8));
    QVec g1 = triple_glue(lat, 3, "T");
    for (int i = 1; i <= 4; ++i) g1[lat.index_of("N" + std::to_string(i))] = Rat(1, 2);
    QVec g2(lat.rank(), Rat(0));
    for (int i = 1; i <= 8; ++i) g2[lat.index_of("N" + std::to_string(i))] = Rat(1, 2);
    lat = adjoin_glue(lat, g1, "g1");
    lat = adjoin_glue(lat, g2, "g2");
    sc.model.ns = lat;
    add_rational(sc.model, block_names(3, "T", "1"));
    add_rational(sc.model, block_names(3, "T", "2"));
    add_rational(sc.model, numbered(8, "N"));
    SplitCoverInput in;
    in.B_triple = block_names(3, "T", "1");
    in.C_triple = block_names(3, "T", "2");
    in.B_split = {"N1", "N2", "N3", "N4"};
    in.C_split = {"N5", "N6", "N7", "N8"};
    sc.split = in;

    CatalogResult res{sc.name, {}, {}};
    Checker ck(res);
    res.report = run_cover_validate(sc);

    auto data = split_nongalois_validate(sc.model, in);
    ck.eq_int("L^2", to_int(norm(lat, data.L)), -4);
    ck.eq_int("M^2", to_int(norm(lat, data.M)), -4);
    ck.is_true("tower.described", data.tower.size() == 3,
               "expected a three-step tower description");
    ck.is_true("L.matches.glue", data.L == g1, "L should be the first glue class");
    return res;
}

inline CatalogResult split_elliptic_231() {
    Scenario sc;
    sc.name = "split-elliptic";
    sc.family_split_elliptic = std::array<Int, 3>{2, 1, 1};
    CatalogResult res{sc.name, {}, {}};
    Checker ck(res);
    res.report = run_cover_invariants(sc);
    auto fam = split_elliptic_invariants(2, 1, 1);
    ck.eq_int("genus.base", fam.genus_base, 3);
    ck.invariants("inv", fam.inv, 6, 0, 72);
    ck.at_least("q", fam.inv.q, 3);
    ck.at_least("pg", fam.inv.pg, 8);
    ck.eq_int("kodaira", fam.kodaira, 1);
    return res;
}

inline CatalogResult split_gentype(const std::string& name, const Int& k, const Int& h) {
    Scenario sc;
    sc.name = name;
    sc.family_split_gentype = std::make_pair(k, h);
    CatalogResult res{name, {}, {}};
    Checker ck(res);
    res.report = run_cover_invariants(sc);
    auto fam = split_nongalois_gentype_invariants(k, h);
    if (k == 8) {
        ck.invariants("W", fam.W, 2, -8, 32);
        ck.invariants("Z", fam.Z, 16, 24, 168);
        ck.exact("Z.pg", fam.Z.pg, 15);
        ck.exact("Z.q", fam.Z.q, 0);
        ck.invariants("X", fam.X, 9, 16, 92);
        ck.exact("X.q", fam.X.q, 0);
        ck.exact("X.pg", fam.X.pg, 8);
    } else {
        ck.invariants("W", fam.W, 0, -16, 16);
        ck.invariants("Z", fam.Z, 10, 0, 120);
        ck.exact("Z.pg", fam.Z.pg, 11);
        ck.exact("Z.q", fam.Z.q, 2);
        ck.invariants("X", fam.X, 7, 8, 76);
        ck.is_true("X.q.needs-input", !fam.X.q.is_exact(),
                   "q(X) is not pinned down for the larger branch degree");
    }
    ck.eq_int("kodaira", Int(fam.kodaira), 2);
    ck.at_least("minus-one.curves", MaybeInt::at_least(fam.min_minus_one_curves), k);
    return res;
}

inline CatalogResult split_gentype_8_1() { return split_gentype("split-gentype-8-1", 8, 1); }
inline CatalogResult split_gentype_16_1() { return split_gentype("split-gentype-16-1", 16, 1); }

inline CatalogResult extension_312() {
    Scenario sc;
    sc.name = "extension-312";
    sc.bundle = std::array<Int, 3>{3, 1, 2};
    CatalogResult res{sc.name, {}, {}};
    Checker ck(res);
    res.report = run_bundle_check(sc);
    auto b = bundle_cohomology_312(3, 1, 2);
    ck.eq_int("h0", b.h0, 4);
    ck.eq_int("h1", b.h1, 2);
    ck.eq_int("h2", b.h2, 0);
    ck.eq_int("chi", b.chi, 2);
    ck.eq_int("c1.fiber.multiple", b.c1_fiber_multiple, 4);
    ck.eq_int("c2", b.c2, 2);
    ck.eq_str("extension.verdict", str(b.extension.verdict), "exists (unique)");
    ck.eq_str("cover.verdict", str(b.cover_verdict), "exists");
    ck.eq_int("cubic.sections", b.cubic_sections, 6);
    ck.eq_int("reported.q", b.reported_q, 3);
    ck.eq_int("reported.pg", b.reported_pg, 6);
    return res;
}

inline CatalogResult nodal_degree10() {
    Scenario sc;
    sc.name = "nodal-degree10";
    sc.has_model = true;
    Lattice lat = make_lattice({"C", "R1", "R2"}, IMat{{Int(10), Int(0), Int(0)},
                                                       {Int(0), Int(-2), Int(0)},
                                                       {Int(0), Int(0), Int(-2)}});
    sc.model.ns = lat;
    add_curve(sc.model, "C", cls(lat, {{"C", 1}}), false, true, true);
    add_rational(sc.model, {"R1", "R2"});
    QVec L = cls(lat, {{"C", 1}, {"R1", -1}, {"R2", -1}});
    QVec M = cls(lat, {{"R1", 1}, {"R2", 1}});
    sc.ext_L = L;
    sc.ext_M = M;

    CatalogResult res{sc.name, {}, {}};
    Checker ck(res);
    res.report = run_bundle_check(sc);
    auto er = extension_exists(sc.model, L, M);
    ck.eq_str("extension.verdict", str(er.verdict), "exists");
    auto tc = triple_cover_exists(sc.model, L, M);
    ck.eq_str("cover.verdict", str(tc.verdict), "exists");
    ck.at_least("cubic.sections", tc.cubic_sections, 4);
    auto emb = embeds_in_k3_lattice(lat);
    ck.is_true("embeds.in.k3", emb.kind == EmbedsVerdict::Kind::yes_sufficient, emb.reason);
    return res;
}

}  // namespace catentries

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"six-a2-k3",
         "branch = six A2-configurations on a K3; the cover contracts to a K3",
         catentries::six_a2_k3},
        {"nine-a2-abelian",
         "branch = nine A2-configurations; the cover contracts to an abelian surface",
         catentries::nine_a2_abelian},
        {"pg2-general-type",
         "one sextic component plus seven A2-configurations; pg = 2 general type",
         catentries::pg2_general_type},
        {"ten-curve-chi4",
         "two quadritangent-like rational curves, four one-point curves, two "
         "A2-configurations; chi = 4 general type",
         catentries::ten_curve_chi4},
        {"s16-irregular",
         "rank-16 model: smooth genus-4 curve against fifteen nodes; q = 1, pg = 6",
         catentries::s16_irregular},
        {"s15-irregular",
         "rank-15 model: smooth genus-2 curve against fourteen nodes; q = 1, pg = 5",
         catentries::s15_irregular},
        {"case-kn-32", "fibration family, three sections and one A2-configuration",
         catentries::case_kn_32},
        {"case-kn-63", "fibration family, six sections and two A2-configurations",
         catentries::case_kn_63},
        {"case-kn-91", "fibration family, nine sections and no A2-configuration",
         catentries::case_kn_91},
        {"base-change-n3",
         "branch = three smooth fibers: the degree-3 base-change family over an "
         "elliptic base",
         catentries::base_change_n3},
        {"split-k3-tower",
         "split branch datum (three A2-configurations plus eight nodes) and its "
         "non-Galois tower",
         catentries::split_k3_tower},
        {"split-elliptic", "split fiber-branch family with (k,h,r) = (2,1,1)",
         catentries::split_elliptic_231},
        {"split-gentype-8-1", "split general-type family at (k,h) = (8,1)",
         catentries::split_gentype_8_1},
        {"split-gentype-16-1", "split general-type family at (k,h) = (16,1)",
         catentries::split_gentype_16_1},
        {"extension-312", "rank-2 bundle data (3,1,2) on an elliptic K3",
         catentries::extension_312},
        {"nodal-degree10",
         "irreducible degree-10 curve with two disjoint nodes: non-Galois cover "
         "exists",
         catentries::nodal_degree10},
    };
    return entries;
}

inline const CatalogEntry* find_catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

// Render an entry result (report + check lines) into one report tree.
inline Report catalog_result_report(const CatalogResult& res) {
    Report rep;
    rep["entry"] = res.name;
    rep["report"] = res.report;
    Report checks = Report::array();
    for (const auto& c : res.checks) {
        Report one;
        one["check"] = c.label;
        one["status"] = c.pass ? "pass" : "FAIL";
        if (!c.detail.empty()) one["detail"] = c.detail;
        checks.push_back(std::move(one));
    }
    rep["checks"] = std::move(checks);
    rep["ok"] = res.ok();
    return rep;
}

}  // namespace k3cover
