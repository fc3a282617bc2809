#pragma once

// Galois triple covers of a K3 model: validation of branch data (B, C),
// classification of the branch singularities, numerical invariants of the
// smooth-branch cover / minimal resolution / minimal model, the contraction
// ledger, and Picard-rank bookkeeping.

#include "k3cover/k3model.hpp"

#include <set>

namespace k3cover {

struct DeclaredSing {
    std::string kind;                 // "tangent", "cusp", "triple_point"
    std::vector<std::string> curves;  // 2 for tangent, 1 for cusp, 3 for triple

    bool operator==(const DeclaredSing&) const = default;
};

struct GaloisCoverInput {
    std::vector<std::string> B, C;
    std::vector<DeclaredSing> declared;
    bool ledger_complete = false;  // scenario vouches the ledger lists every
                                   // contractible curve of the resolution

    bool operator==(const GaloisCoverInput&) const = default;
};

struct CoverData {
    GaloisCoverInput input;
    QVec Bv, Cv;   // classes of the two branch halves
    QVec L, M;     // L = (2B+C)/3, M = (B+2C)/3
    std::vector<BranchComponent> components;
    std::vector<std::string> warnings;

    bool in_B(const std::string& name) const {
        return std::find(input.B.begin(), input.B.end(), name) != input.B.end();
    }
};

namespace detail {
inline Int int_pair(const K3Model& m, const QVec& a, const QVec& b) {
    Rat p = pair(m.ns, a, b);
    K3_ASSERT(is_integer(p), "non-integral pairing " << p);
    return numerator(p);
}
}  // namespace detail

// Check branch data for a Galois triple cover.  Verifies reducedness, the
// per-component mod-3 congruences, and 3-divisibility of 2B+C in the
// Neron-Severi lattice.  An empty branch is accepted with a warning.
inline CoverData validate_cover(const K3Model& m, GaloisCoverInput input) {
    CoverData out;
    const std::size_t n = m.ns.rank();

    std::set<std::string> seen;
    auto accumulate = [&](const std::vector<std::string>& part, const char* label) {
        QVec cls(n);
        for (const auto& nm : part) {
            const CurveClass& c = m.curve(nm);
            K3_CHECK(seen.insert(nm).second,
                     "branch divisor is not reduced: curve '"
                         << nm << "' repeats (in " << label << ")");
            cls = add(cls, c.v);
        }
        return cls;
    };
    out.Bv = accumulate(input.B, "B");
    out.Cv = accumulate(input.C, "C");

    if (input.B.empty() && input.C.empty()) {
        out.warnings.push_back(
            "empty branch: the associated cover is etale, hence a disjoint "
            "union of copies of the base (K3 surfaces are simply connected)");
        out.input = std::move(input);
        out.L = QVec(n);
        out.M = QVec(n);
        return out;
    }

    // Hand the input over before the component analysis: in_B consults it.
    out.input = std::move(input);

    std::vector<std::string> all = out.input.B;
    all.insert(all.end(), out.input.C.begin(), out.input.C.end());
    out.components = connected_components(m, all);

    // Per-component congruences: with D_i = B_i + C_i, the cover data forces
    // B_i^2 = B_i.C_i = C_i^2 = D_i^2 mod 3 on every connected component.
    for (const auto& comp : out.components) {
        QVec Bi(n), Ci(n);
        for (const auto& nm : comp.curves) {
            const CurveClass& c = m.curve(nm);
            if (out.in_B(nm))
                Bi = add(Bi, c.v);
            else
                Ci = add(Ci, c.v);
        }
        const Int b2 = detail::int_pair(m, Bi, Bi);
        const Int bc = detail::int_pair(m, Bi, Ci);
        const Int c2 = detail::int_pair(m, Ci, Ci);
        const Int d2 = b2 + 2 * bc + c2;
        auto r3 = [](const Int& x) { Int r = x % 3; return r < 0 ? r + 3 : r; };
        K3_CHECK(r3(b2) == r3(d2) && r3(bc) == r3(d2) && r3(c2) == r3(d2),
                 "component {" << comp.curves.front()
                               << ", ...}: mod-3 congruences fail (B_i^2=" << b2
                               << ", B_i.C_i=" << bc << ", C_i^2=" << c2
                               << ", D_i^2=" << d2 << ")");
    }

    // 3-divisibility: L = (2B+C)/3 must be a lattice member (then M = B+C-L
    // automatically is).
    QVec twoBplusC = add(scale(Rat(2), out.Bv), out.Cv);
    K3_CHECK(is_three_divisible(m.ns, twoBplusC),
             "(2B+C)/3 is not in the Neron-Severi lattice: no Galois triple "
             "cover has this branch data");
    out.L = scale(Rat(1, 3), twoBplusC);
    out.M = scale(Rat(1, 3), add(out.Bv, scale(Rat(2), out.Cv)));
    K3_ASSERT(is_member(m.ns, out.M), "M = (B+2C)/3 failed membership");
    return out;
}

// --- singularities ----------------------------------------------------------

struct SingPoint {
    enum class Kind { node_same_part, node_cross_part, tangent, cusp, triple_point };
    Kind kind;
    std::vector<std::string> curves;
};

inline std::string str(SingPoint::Kind k) {
    switch (k) {
        case SingPoint::Kind::node_same_part: return "type-1 node (within B or within C)";
        case SingPoint::Kind::node_cross_part: return "type-2 node (between B and C)";
        case SingPoint::Kind::tangent: return "tangency";
        case SingPoint::Kind::cusp: return "cusp";
        case SingPoint::Kind::triple_point: return "triple point";
    }
    return "?";
}

struct SingReport {
    std::vector<SingPoint> points;
    Int same_part = 0;   // count of type-1 nodes: the cover acquires an A2
                         // (du Val) point there, crepant on the resolution
    Int cross_part = 0;  // count of type-2 nodes: a 1/3(1,1) point upstairs,
                         // whose resolution carries discrepancy
    Int non_transversal = 0;
    bool transversal_only() const { return non_transversal == 0; }
};

// Classify the singular points of the branch divisor B+C.  Intersections are
// transversal by default; declared records (tangent, cusp, triple point)
// consume intersection multiplicity first.
inline SingReport classify_singularities(const K3Model& m, const CoverData& cover) {
    SingReport rep;
    std::vector<std::string> all = cover.input.B;
    all.insert(all.end(), cover.input.C.begin(), cover.input.C.end());

    // Remaining transversal multiplicity per curve pair.
    std::map<std::pair<std::string, std::string>, Int> rem;
    auto key = [](std::string a, std::string b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            Int t = detail::int_pair(m, m.curve(all[i]).v, m.curve(all[j]).v);
            K3_CHECK(t >= 0, "branch curves '" << all[i] << "' and '" << all[j]
                                               << "' have negative intersection "
                                               << t);
            if (t > 0) rem[key(all[i], all[j])] = t;
        }

    for (const auto& d : cover.input.declared) {
        SingPoint p;
        p.curves = d.curves;
        if (d.kind == "tangent") {
            K3_CHECK(d.curves.size() == 2, "tangent record needs two curves");
            auto k = key(d.curves[0], d.curves[1]);
            K3_CHECK(rem[k] >= 2, "declared tangency between '"
                                      << d.curves[0] << "' and '" << d.curves[1]
                                      << "' exceeds their intersection number");
            rem[k] -= 2;
            p.kind = SingPoint::Kind::tangent;
        } else if (d.kind == "cusp") {
            K3_CHECK(d.curves.size() == 1, "cusp record needs one curve");
            p.kind = SingPoint::Kind::cusp;
        } else if (d.kind == "triple_point") {
            K3_CHECK(d.curves.size() == 3, "triple point record needs three curves");
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = a + 1; b < 3; ++b) {
                    auto k = key(d.curves[a], d.curves[b]);
                    K3_CHECK(rem[k] >= 1, "declared triple point exceeds the "
                                          "intersection number of '"
                                              << d.curves[a] << "' and '"
                                              << d.curves[b] << "'");
                    rem[k] -= 1;
                }
            p.kind = SingPoint::Kind::triple_point;
        } else {
            throw invalid_input("unknown singularity kind '" + d.kind + "'");
        }
        ++rep.non_transversal;
        rep.points.push_back(std::move(p));
    }

    for (const auto& [k, t] : rem) {
        if (t == 0) continue;
        const bool cross = cover.in_B(k.first) != cover.in_B(k.second);
        for (Int i = 0; i < t; ++i) {
            SingPoint p;
            p.kind = cross ? SingPoint::Kind::node_cross_part
                           : SingPoint::Kind::node_same_part;
            p.curves = {k.first, k.second};
            rep.points.push_back(std::move(p));
        }
        (cross ? rep.cross_part : rep.same_part) += t;
    }
    return rep;
}

// --- invariants -------------------------------------------------------------

struct SurfaceInvariants {
    Int chi = 0, K2 = 0, e = 0;
    MaybeInt q, pg;
    std::vector<std::string> notes;
};

// Numeric cores of the two invariant propositions, shared by the
// lattice-backed entry points and by the family sweeps.
inline SurfaceInvariants smooth_cover_numbers(const Int& L2, const Int& M2, const Int& LM) {
    SurfaceInvariants inv;
    K3_CHECK((L2 + M2) % 2 == 0, "L^2 + M^2 must be even, got " << (L2 + M2));
    inv.chi = 6 + (L2 + M2) / 2;
    inv.K2 = 4 * L2 + 4 * M2 - 4 * LM;
    inv.e = 12 * inv.chi - inv.K2;  // Noether, X smooth
    return inv;
}

inline SurfaceInvariants resolution_numbers(const Int& L2, const Int& M2, const Int& LM) {
    SurfaceInvariants inv;
    K3_CHECK((L2 + M2) % 2 == 0, "L^2 + M^2 must be even, got " << (L2 + M2));
    inv.chi = 6 + (L2 + M2) / 2;
    inv.K2 = 2 * L2 + 2 * M2 + LM;
    inv.e = 72 + 4 * (L2 + M2) - LM;
    K3_ASSERT(12 * inv.chi == inv.K2 + inv.e, "Noether check failed");
    return inv;
}

namespace detail {
// q = h^1(L) + h^1(M), p_g = chi - 1 + q, through the cohomology policy.
inline void fill_q_pg(const K3Model& m, const QVec& L, const QVec& M,
                      SurfaceInvariants& inv) {
    Coh cl = sheaf_cohomology(m, L);
    Coh cm = sheaf_cohomology(m, M);
    if (cl.h1.is_exact() && cm.h1.is_exact()) {
        inv.q = MaybeInt::exact(cl.h1.value + cm.h1.value);
        inv.pg = MaybeInt::exact(inv.chi - 1 + inv.q.value);
    } else {
        std::string why = "q = h1(L) + h1(M) unresolved: ";
        why += !cl.h1.is_exact() ? "h1(L) " + cl.h1.render() : "";
        why += !cm.h1.is_exact() ? " h1(M) " + cm.h1.render() : "";
        inv.q = MaybeInt::unknown(why);
        inv.pg = MaybeInt::unknown("pg = chi - 1 + q needs q");
    }
}
}  // namespace detail

// Invariants of the (already smooth) cover when the branch B+C is a disjoint
// union of smooth curves.
inline SurfaceInvariants invariants_smooth_branch(const K3Model& m,
                                                  const CoverData& cover) {
    // Smoothness of the branch: no intersections at all, every curve smooth.
    std::vector<std::string> all = cover.input.B;
    all.insert(all.end(), cover.input.C.begin(), cover.input.C.end());
    for (const auto& nm : all)
        K3_CHECK(m.curve(nm).smooth, "smooth-branch invariants: curve '"
                                         << nm << "' is not declared smooth");
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            K3_CHECK(detail::int_pair(m, m.curve(all[i]).v, m.curve(all[j]).v) == 0,
                     "smooth-branch invariants: curves '"
                         << all[i] << "' and '" << all[j] << "' meet");

    const Int L2 = to_int(norm(m.ns, cover.L));
    const Int M2 = to_int(norm(m.ns, cover.M));
    const Int LM = detail::int_pair(m, cover.L, cover.M);

    SurfaceInvariants inv = smooth_cover_numbers(L2, M2, LM);
    detail::fill_q_pg(m, cover.L, cover.M, inv);

    // p_g = 1 + h^0(L) + h^0(M) is available independently; cross-check or
    // use it when the q route stalled.
    Coh cl = sheaf_cohomology(m, cover.L);
    Coh cm = sheaf_cohomology(m, cover.M);
    if (cl.h0.is_exact() && cm.h0.is_exact()) {
        Int pg_direct = 1 + cl.h0.value + cm.h0.value;
        if (inv.pg.is_exact())
            K3_ASSERT(inv.pg.value == pg_direct,
                      "p_g routes disagree: " << inv.pg.value << " vs " << pg_direct);
        else
            inv.pg = MaybeInt::exact(pg_direct);
    }
    return inv;
}

// Invariants of the minimal resolution X' of the (singular) cover, valid for
// transversal branch configurations.
inline SurfaceInvariants invariants_minimal_resolution(const K3Model& m,
                                                       const CoverData& cover,
                                                       const SingReport& sings) {
    K3_CHECK(sings.transversal_only(),
             "resolution invariants are implemented for transversal branch "
             "configurations; declared tangencies/cusps/triple points need a "
             "case-by-case resolution");
    const Int L2 = to_int(norm(m.ns, cover.L));
    const Int M2 = to_int(norm(m.ns, cover.M));
    const Int LM = detail::int_pair(m, cover.L, cover.M);

    SurfaceInvariants inv = resolution_numbers(L2, M2, LM);
    detail::fill_q_pg(m, cover.L, cover.M, inv);
    return inv;
}

// --- contraction ledger ------------------------------------------------------

struct LedgerEntry {
    std::string source;               // "a2_config" | "section_curve" | "isolated_type2"
    std::vector<std::string> curves;  // witnesses
    Int count = 0;                    // contractible curves contributed
};

struct ContractionLedger {
    std::vector<LedgerEntry> entries;
    Int total = 0;
    bool complete = false;  // certified to exhaust the (-1)-curves of X'
    std::string completeness_note;
};

namespace detail {
// Number of branch singular points lying on the given curve, and whether
// they are all transversal cross-part nodes.
inline std::pair<Int, bool> points_on(const SingReport& sings, const std::string& nm) {
    Int count = 0;
    bool all_cross = true;
    for (const auto& p : sings.points) {
        if (std::find(p.curves.begin(), p.curves.end(), nm) == p.curves.end())
            continue;
        ++count;
        if (p.kind != SingPoint::Kind::node_cross_part) all_cross = false;
    }
    return {count, all_cross};
}
}  // namespace detail

// Sources of contractible curves on the minimal resolution X':
//   - every A2-configuration in the branch contributes 3;
//   - every rational branch curve through exactly one singular point of the
//     branch, that point being a transversal type-2 node, contributes 1.
// The ledger is marked complete when the whole branch decomposes into
// A2-configurations, smooth irreducible curves of positive genus, and such
// one-point rational curves - or when the scenario vouches for completeness.
inline ContractionLedger contraction_ledger(const K3Model& m, const CoverData& cover,
                                            const SingReport& sings) {
    K3_CHECK(sings.transversal_only(),
             "contraction ledger is implemented for transversal branch "
             "configurations only");
    ContractionLedger ledger;
    bool family_shape = true;
    for (const auto& comp : cover.components) {
        if (comp.a2_config) {
            ledger.entries.push_back({"a2_config", comp.curves, 3});
            ledger.total += 3;
            continue;
        }
        for (const auto& nm : comp.curves) {
            const CurveClass& c = m.curve(nm);
            auto [npts, all_cross] = detail::points_on(sings, nm);
            if (c.rational && npts == 1 && all_cross) {
                ledger.entries.push_back(
                    {c.section ? "section_curve" : "isolated_type2", {nm}, 1});
                ledger.total += 1;
            } else if (c.irreducible && c.smooth && !c.rational &&
                       genus(m, c.v) >= 1) {
                // positive-genus smooth curve: contributes nothing
            } else {
                family_shape = false;
            }
        }
    }
    if (cover.input.ledger_complete) {
        ledger.complete = true;
        ledger.completeness_note = "declared complete by the scenario";
    } else if (family_shape) {
        ledger.complete = true;
        ledger.completeness_note =
            "branch decomposes into A2-configurations, smooth positive-genus "
            "curves, and one-point rational curves";
    } else {
        ledger.complete = false;
        ledger.completeness_note =
            "branch has curves outside the certified families; the ledger is "
            "only a lower bound on the contractible curves";
    }
    return ledger;
}

// Invariants of the minimal model X deg obtained by contracting the ledger:
// K^2 goes up by one and e down by one per contracted curve; chi, q, p_g are
// birational invariants.
struct MinimalModelResult {
    SurfaceInvariants inv;  // exact when certified; otherwise K2 is a lower
                            // and e an upper bound
    bool certified = false;
    std::string note;
};

inline MinimalModelResult invariants_minimal_model(const SurfaceInvariants& resolution,
                                                   const ContractionLedger& ledger) {
    MinimalModelResult out;
    out.inv = resolution;
    out.inv.K2 = resolution.K2 + ledger.total;
    out.inv.e = resolution.e - ledger.total;
    out.certified = ledger.complete;
    if (!ledger.complete)
        out.note =
            "ledger not certified complete: K^2 of the minimal model is only "
            "bounded below (and e only above) by the reported values";
    else
        out.note = "ledger certified complete: " + ledger.completeness_note;
    return out;
}

// Picard-rank bookkeeping through the tower: contracting an A2-configuration
// accounts for 3 classes on the minimal resolution (two strict transforms and
// one exceptional of the 1/3(1,1) point) and 2 on the intermediate canonical
// model; a one-point rational curve accounts for 1 on both.
struct PicardBookkeeping {
    Int a2_configs = 0, one_point_curves = 0;
    Int delta_resolution = 0;    // rho(X') - rho(X deg)
    Int delta_intermediate = 0;  // rho of the partial (canonical) model - rho(X deg)
    std::optional<Int> rho_resolution, rho_intermediate;
};

inline PicardBookkeeping picard_bookkeeping(const ContractionLedger& ledger,
                                            std::optional<Int> rho_minimal_model = {}) {
    PicardBookkeeping out;
    for (const auto& e : ledger.entries) {
        if (e.source == "a2_config")
            ++out.a2_configs;
        else
            ++out.one_point_curves;
    }
    out.delta_resolution = 3 * out.a2_configs + out.one_point_curves;
    out.delta_intermediate = 2 * out.a2_configs + out.one_point_curves;
    if (rho_minimal_model) {
        out.rho_resolution = *rho_minimal_model + out.delta_resolution;
        out.rho_intermediate = *rho_minimal_model + out.delta_intermediate;
    }
    return out;
}

// --- genus-one fibration detection -------------------------------------------

struct FiberFamilyCheck {
    bool is_fiber_family = false;
    Int b1 = 0, b2 = 0;  // full fibers contained in B resp. C
    std::string reason;
};

// Does the branch consist of full smooth fibers of a declared elliptic fiber
// class?  (Then the cover is a base-change family along a degree-3 cover of
// the base line.)
inline FiberFamilyCheck fiber_genus_one_family_check(const K3Model& m,
                                                     const CoverData& cover) {
    FiberFamilyCheck out;
    // Find the declared fiber class.
    std::optional<QVec> fiber;
    for (const auto& c : m.curves)
        if (m.facts.lookup(c.v).elliptic_fiber && !fiber) fiber = c.v;
    for (std::size_t i = 0; i < m.ns.rank() && !fiber; ++i) {
        QVec b = basis_vector(m.ns, i);
        if (m.facts.lookup(b).elliptic_fiber) fiber = b;
    }
    if (!fiber) {
        out.reason = "no declared elliptic fiber class in the model";
        return out;
    }
    for (const auto& comp : cover.components) {
        if (comp.curves.size() != 1 || comp.cls != *fiber) {
            out.reason = "component {" + comp.curves.front() +
                         ", ...} is not a full fiber of the declared class";
            return out;
        }
        const CurveClass& c = m.curve(comp.curves.front());
        if (!c.smooth) {
            out.reason = "fiber '" + c.name + "' is not declared smooth";
            return out;
        }
        (cover.in_B(c.name) ? out.b1 : out.b2) += 1;
    }
    if (cover.components.empty()) {
        out.reason = "empty branch";
        return out;
    }
    out.is_fiber_family = true;
    out.reason = "branch is a union of full smooth fibers";
    return out;
}

}  // namespace k3cover
