#pragma once

// The operations behind the CLI subcommands, shared with the regression
// catalog: each takes a parsed scenario and returns one report tree.

#include "k3cover/report.hpp"
#include "k3cover/scenario.hpp"

namespace k3cover {

namespace rundetail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw invalid_input(msg);
}

inline Report cover_block(const K3Model& m, const CoverData& cover) {
    Report r;
    r["B"] = str(cover.Bv);
    r["C"] = str(cover.Cv);
    r["L"] = str(cover.L);
    r["M"] = str(cover.M);
    r["L2"] = jint(to_int(norm(m.ns, cover.L)));
    r["M2"] = jint(to_int(norm(m.ns, cover.M)));
    r["LM"] = jint(to_int(pair(m.ns, cover.L, cover.M)));
    if (!cover.warnings.empty()) r["warnings"] = cover.warnings;
    return r;
}

inline Report components_block(const CoverData& cover) {
    Report arr = Report::array();
    for (const auto& comp : cover.components) {
        Report c;
        c["curves"] = comp.curves;
        c["signature"] = str(signature_of(comp.gram));
        c["a2_configuration"] = comp.a2_config;
        arr.push_back(std::move(c));
    }
    return arr;
}

inline Report singularities_block(const SingReport& sings) {
    Report r;
    r["type1_nodes"] = jint(sings.same_part);
    r["type2_nodes"] = jint(sings.cross_part);
    r["declared_non_transversal"] = jint(sings.non_transversal);
    return r;
}

inline Report ledger_block(const ContractionLedger& ledger) {
    Report r;
    Report entries = Report::array();
    for (const auto& e : ledger.entries) {
        Report one;
        one["source"] = e.source;
        one["curves"] = e.curves;
        one["count"] = jint(e.count);
        entries.push_back(std::move(one));
    }
    r["entries"] = std::move(entries);
    r["total"] = jint(ledger.total);
    r["complete"] = ledger.complete;
    r["note"] = ledger.completeness_note;
    return r;
}

inline Report extension_block(const ExtensionReport& er) {
    Report r;
    r["verdict"] = str(er.verdict);
    r["h0_twist"] = jmaybe(er.twist.h0);
    r["h1_twist"] = jmaybe(er.twist.h1);
    r["explanation"] = er.explanation;
    return r;
}

// The Galois pipeline: validate, classify singularities, and stage the
// invariants.  Shared by cover-invariants and minimal-model.
struct GaloisRun {
    CoverData cover;
    SingReport sings;
    bool smooth_branch = false;
    SurfaceInvariants resolution;
    ContractionLedger ledger;
    MinimalModelResult minimal;
    PicardBookkeeping picard;
};

inline GaloisRun run_galois_pipeline(const Scenario& sc) {
    GaloisRun g;
    g.cover = validate_cover(sc.model, *sc.cover);
    require(!(sc.cover->B.empty() && sc.cover->C.empty()),
            "the branch divisor is empty; nothing to compute invariants for");
    g.sings = classify_singularities(sc.model, g.cover);
    g.smooth_branch = g.sings.points.empty();
    for (const auto& nm : sc.cover->B)
        if (!sc.model.curve(nm).smooth) g.smooth_branch = false;
    for (const auto& nm : sc.cover->C)
        if (!sc.model.curve(nm).smooth) g.smooth_branch = false;

    if (g.smooth_branch) {
        g.resolution = invariants_smooth_branch(sc.model, g.cover);
        // With a smooth disjoint branch one has BC = 0, where the two
        // propositions coincide; keep them honest against each other.
        SurfaceInvariants alt = invariants_minimal_resolution(sc.model, g.cover, g.sings);
        K3_ASSERT(alt.chi == g.resolution.chi && alt.K2 == g.resolution.K2 &&
                      alt.e == g.resolution.e,
                  "smooth-branch and resolution formulas disagree");
        g.resolution.notes.push_back("branch is smooth: the cover itself is smooth");
    } else {
        g.resolution = invariants_minimal_resolution(sc.model, g.cover, g.sings);
    }
    g.ledger = contraction_ledger(sc.model, g.cover, g.sings);
    g.minimal = invariants_minimal_model(g.resolution, g.ledger);
    g.picard = picard_bookkeeping(g.ledger, sc.declared_rho);
    return g;
}

}  // namespace rundetail

// --- lattice-info --------------------------------------------------------------

inline Report run_lattice_info(const Scenario& sc) {
    rundetail::require(sc.has_model, "lattice-info needs a [lattice] section");
    const Lattice& lat = sc.model.ns;
    Report r;
    r["scenario"] = sc.name;
    r["operation"] = "lattice-info";
    Report l;
    l["rank"] = lat.rank();
    l["signature"] = str(signature(lat));
    l["even"] = is_even(lat);
    const Int d = det(lat);
    l["det"] = jint(d);
    if (d != 0) {
        auto dg = discriminant_group(lat);
        l["discriminant_group"] = dg.group;
        l["discriminant_order"] = jint(dg.order);
    } else {
        l["discriminant_group"] = "degenerate";
    }
    l["glue_classes"] = lat.glue.size();
    if (is_negative_definite(signature(lat)) && lat.rank() <= 16) {
        l["roots_norm_minus2"] = enumerate_roots(lat, -2).size();
        l["is_a2_minus1"] = is_a2_minus1(lat);
    }
    auto emb = embeds_in_k3_lattice(lat);
    l["embeds_in_k3"] =
        emb.kind == EmbedsVerdict::Kind::yes_sufficient ? "yes (sufficient criterion)"
                                                        : "unknown";
    l["embeds_reason"] = emb.reason;
    r["lattice"] = std::move(l);
    if (!sc.model.curves.empty()) {
        Report cs = Report::array();
        for (const auto& c : sc.model.curves) {
            Report one;
            one["name"] = c.name;
            one["class"] = str(c.v);
            one["self_intersection"] = jint(self_int(sc.model, c.v));
            one["genus"] = jint(genus(sc.model, c.v));
            cs.push_back(std::move(one));
        }
        r["curves"] = std::move(cs);
    }
    return r;
}

// --- cover-validate -------------------------------------------------------------

inline Report run_cover_validate(const Scenario& sc) {
    Report r;
    r["scenario"] = sc.name;
    if (sc.split) {
        r["operation"] = "cover-validate (split non-Galois)";
        SplitCoverData data = split_nongalois_validate(sc.model, *sc.split);
        r["valid"] = true;
        Report d;
        d["B_triple"] = str(data.Bp);
        d["C_triple"] = str(data.Cp);
        d["B_split"] = str(data.Bpp);
        d["C_split"] = str(data.Cpp);
        d["L"] = str(data.L);
        d["M"] = str(data.M);
        r["split_data"] = std::move(d);
        r["tower"] = data.tower;
        if (!data.warnings.empty()) r["warnings"] = data.warnings;
        return r;
    }
    rundetail::require(sc.cover.has_value(), "cover-validate needs a [cover] or [split] section");
    r["operation"] = "cover-validate";
    CoverData cover = validate_cover(sc.model, *sc.cover);
    r["valid"] = true;
    r["cover"] = rundetail::cover_block(sc.model, cover);
    r["components"] = rundetail::components_block(cover);
    if (!cover.input.B.empty() || !cover.input.C.empty()) {
        SingReport sings = classify_singularities(sc.model, cover);
        r["singularities"] = rundetail::singularities_block(sings);
    }
    auto fib = fiber_genus_one_family_check(sc.model, cover);
    if (fib.is_fiber_family) {
        Report f;
        f["is_fiber_family"] = true;
        f["b1"] = jint(fib.b1);
        f["b2"] = jint(fib.b2);
        f["note"] = "branch consists of full smooth fibers; see base-change";
        r["fiber_family"] = std::move(f);
    }
    return r;
}

// --- cover-invariants -----------------------------------------------------------

inline Report run_cover_invariants(const Scenario& sc) {
    Report r;
    r["scenario"] = sc.name;
    r["operation"] = "cover-invariants";
    bool any = false;

    if (sc.cover) {
        any = true;
        auto g = rundetail::run_galois_pipeline(sc);
        r["cover"] = rundetail::cover_block(sc.model, g.cover);
        r["singularities"] = rundetail::singularities_block(g.sings);
        r[g.smooth_branch ? "cover_surface" : "minimal_resolution"] =
            report_invariants(g.resolution);
        r["ledger"] = rundetail::ledger_block(g.ledger);
        Report mm = report_invariants(g.minimal.inv);
        mm["certified"] = g.minimal.certified;
        mm["note"] = g.minimal.note;
        r["minimal_model"] = std::move(mm);
        Report pk;
        pk["a2_configs"] = jint(g.picard.a2_configs);
        pk["one_point_curves"] = jint(g.picard.one_point_curves);
        pk["delta_resolution"] = jint(g.picard.delta_resolution);
        pk["delta_intermediate"] = jint(g.picard.delta_intermediate);
        if (g.picard.rho_resolution) pk["rho_resolution"] = jint(*g.picard.rho_resolution);
        if (g.picard.rho_intermediate)
            pk["rho_intermediate"] = jint(*g.picard.rho_intermediate);
        r["picard"] = std::move(pk);
    }

    if (sc.family_irreducible) {
        any = true;
        auto fam = classify_irreducible(sc.family_irreducible->first,
                                        sc.family_irreducible->second);
        Report f;
        f["kodaira_dimension"] = fam.dim;
        if (fam.dim == 2) {
            f["d"] = jint(fam.d);
            f["k"] = jint(fam.k);
            f["minimal_model"] = report_invariants(fam.minimal_model);
        }
        f["note"] = fam.note;
        r["irreducible_family"] = std::move(f);
    }
    if (sc.family_split_gentype) {
        any = true;
        auto fam = split_nongalois_gentype_invariants(sc.family_split_gentype->first,
                                                      sc.family_split_gentype->second);
        Report f;
        f["quadratic_intermediate_W"] = report_invariants(fam.W);
        f["galois_closure_Z"] = report_invariants(fam.Z);
        f["cover_X"] = report_invariants(fam.X);
        f["kodaira_dimension"] = fam.kodaira;
        f["min_minus_one_curves"] = jint(fam.min_minus_one_curves);
        f["notes"] = fam.notes;
        r["split_gentype_family"] = std::move(f);
    }
    if (sc.family_split_elliptic) {
        any = true;
        const auto& p = *sc.family_split_elliptic;
        auto fam = split_elliptic_invariants(p[0], p[1], p[2]);
        Report f;
        f["invariants"] = report_invariants(fam.inv);
        f["genus_base"] = jint(fam.genus_base);
        f["kodaira_dimension"] = fam.kodaira;
        f["notes"] = fam.notes;
        r["split_elliptic_family"] = std::move(f);
    }
    rundetail::require(any, "cover-invariants needs a [cover] or [family] section");
    return r;
}

// --- cover-classify -------------------------------------------------------------

inline Report run_cover_classify(const Scenario& sc) {
    Report r;
    r["scenario"] = sc.name;
    r["operation"] = "cover-classify";
    bool any = false;
    if (sc.cover) {
        any = true;
        CoverData cover = validate_cover(sc.model, *sc.cover);
        KodairaResult k = classify_kodaira(cover);
        Report c;
        c["valid"] = k.valid;
        if (k.dim) c["kodaira_dimension"] = *k.dim;
        c["reason"] = k.reason;
        if (!k.minimal_model_kind.empty()) c["minimal_model_kind"] = k.minimal_model_kind;
        Report sigs = Report::array();
        for (const auto& s : k.component_signatures) sigs.push_back(str(s));
        c["component_signatures"] = std::move(sigs);
        r["classification"] = std::move(c);
    }
    if (sc.family_irreducible) {
        any = true;
        auto fam = classify_irreducible(sc.family_irreducible->first,
                                        sc.family_irreducible->second);
        Report f;
        f["kodaira_dimension"] = fam.dim;
        if (fam.dim == 2) {
            f["d"] = jint(fam.d);
            f["k"] = jint(fam.k);
            f["minimal_model"] = report_invariants(fam.minimal_model);
        }
        f["note"] = fam.note;
        r["irreducible_family"] = std::move(f);
    }
    rundetail::require(any, "cover-classify needs a [cover] or [family] section");
    return r;
}

// --- minimal-model --------------------------------------------------------------

inline Report run_minimal_model(const Scenario& sc) {
    rundetail::require(sc.cover.has_value(), "minimal-model needs a [cover] section");
    Report r;
    r["scenario"] = sc.name;
    r["operation"] = "minimal-model";
    auto g = rundetail::run_galois_pipeline(sc);
    r[g.smooth_branch ? "cover_surface" : "minimal_resolution"] =
        report_invariants(g.resolution);
    r["ledger"] = rundetail::ledger_block(g.ledger);
    Report mm = report_invariants(g.minimal.inv);
    mm["certified"] = g.minimal.certified;
    mm["note"] = g.minimal.note;
    r["minimal_model"] = std::move(mm);
    return r;
}

// --- base-change ----------------------------------------------------------------

inline Report run_base_change(const Scenario& sc) {
    rundetail::require(sc.bc_b1.has_value() && sc.bc_b2.has_value(),
                       "base-change needs b1 and b2 in a [fibers] section");
    Report r;
    r["scenario"] = sc.name;
    r["operation"] = "base-change";
    auto res = base_change_invariants(*sc.bc_b1, *sc.bc_b2, sc.bc_fibers);
    r["b1"] = jint(*sc.bc_b1);
    r["b2"] = jint(*sc.bc_b2);
    r["genus_base"] = jint(res.genus_base);
    r["invariants"] = report_invariants(res.inv);
    r["kodaira_dimension"] = res.kodaira;
    if (!sc.bc_fibers.empty()) {
        Report arr = Report::array();
        Int e_up = 0;
        for (std::size_t i = 0; i < sc.bc_fibers.size(); ++i) {
            Report one;
            one["fiber"] = str(sc.bc_fibers[i].type);
            one["branched"] = sc.bc_fibers[i].branch != 0;
            one["transforms_to"] = str(res.fibers[i].result);
            one["copies"] = res.fibers[i].copies;
            e_up += Int(res.fibers[i].copies) * fiber_euler(res.fibers[i].result);
            arr.push_back(std::move(one));
        }
        r["fibers"] = std::move(arr);
        r["euler_upstairs"] = jint(e_up);
    }
    return r;
}

// --- bundle-check ---------------------------------------------------------------

inline Report run_bundle_check(const Scenario& sc) {
    Report r;
    r["scenario"] = sc.name;
    r["operation"] = "bundle-check";
    bool any = false;
    if (sc.bundle) {
        any = true;
        auto b = bundle_cohomology_312((*sc.bundle)[0], (*sc.bundle)[1], (*sc.bundle)[2]);
        Report j;
        j["h0"] = jint(b.h0);
        j["h1"] = jint(b.h1);
        j["h2"] = jint(b.h2);
        j["chi"] = jint(b.chi);
        j["c1"] = str(b.c1_fiber_multiple) + " F";
        j["c2"] = jint(b.c2);
        j["extension_verdict"] = str(b.extension.verdict);
        j["cover_verdict"] = str(b.cover_verdict);
        j["cubic_sections"] = jint(b.cubic_sections);
        j["reported_q"] = jint(b.reported_q);
        j["reported_pg"] = jint(b.reported_pg);
        j["notes"] = b.notes;
        r["bundle"] = std::move(j);
    }
    if (sc.ext_fiber) {
        any = true;
        auto f = extension_exists_fiber(sc.ext_fiber->first, sc.ext_fiber->second);
        Report j;
        j["n"] = jint(sc.ext_fiber->first);
        j["m"] = jint(sc.ext_fiber->second);
        j["verdict"] = str(f.verdict);
        j["h0"] = jint(f.h0);
        j["h1"] = jint(f.h1);
        j["h2"] = jint(f.h2);
        j["explanation"] = f.explanation;
        r["fiber_extension"] = std::move(j);
    }
    if (sc.ideal) {
        any = true;
        auto ic = ideal_sheaf_cohomology(sc.ideal->len, sc.ideal->m, sc.ideal->geom);
        Report j;
        j["length"] = jint(sc.ideal->len);
        j["twist"] = jint(sc.ideal->m);
        j["geometry"] = str(sc.ideal->geom);
        j["h0"] = jint(ic.h0);
        j["h1"] = jint(ic.h1);
        j["note"] = ic.note;
        r["ideal_sheaf"] = std::move(j);
    }
    if (sc.ext_L && sc.ext_M) {
        any = true;
        rundetail::require(sc.has_model, "extension check over a model needs [lattice]");
        Report j;
        j["L"] = str(*sc.ext_L);
        j["M"] = str(*sc.ext_M);
        j["extension"] = rundetail::extension_block(extension_exists(sc.model, *sc.ext_L, *sc.ext_M));
        auto tc = triple_cover_exists(sc.model, *sc.ext_L, *sc.ext_M);
        j["cover_verdict"] = str(tc.verdict);
        j["cubic_sections"] = jmaybe(tc.cubic_sections);
        j["explanation"] = tc.explanation;
        r["extension_over_model"] = std::move(j);
    }
    rundetail::require(any, "bundle-check needs an [extension] section");
    return r;
}

// Dispatch by operation name (the CLI subcommand).
inline Report run_operation(const std::string& op, const Scenario& sc) {
    if (op == "lattice-info") return run_lattice_info(sc);
    if (op == "cover-validate") return run_cover_validate(sc);
    if (op == "cover-invariants") return run_cover_invariants(sc);
    if (op == "cover-classify") return run_cover_classify(sc);
    if (op == "minimal-model") return run_minimal_model(sc);
    if (op == "base-change") return run_base_change(sc);
    if (op == "bundle-check") return run_bundle_check(sc);
    throw invalid_input("unknown operation '" + op + "'");
}

}  // namespace k3cover
