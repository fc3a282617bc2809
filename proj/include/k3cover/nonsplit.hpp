#pragma once

// Non-Galois triple covers: validation of split branch data through the S3
// Galois closure, the invariant tables for the split families, and the
// vector-bundle (extension) existence criteria with the ideal-sheaf
// cohomology tables used by them.

#include "k3cover/kodaira.hpp"

namespace k3cover {

// --- split (non-Galois) branch data -------------------------------------------

// B', C' carry the cyclic part of the branch (full triple ramification);
// B'', C'' form the splitting divisor D'' where the Galois closure is a
// double cover.
struct SplitCoverInput {
    std::vector<std::string> B_triple, C_triple;
    std::vector<std::string> B_split, C_split;

    bool operator==(const SplitCoverInput&) const = default;
};

struct SplitCoverData {
    SplitCoverInput input;
    QVec Bp, Cp, Bpp, Cpp;
    QVec L, M;
    std::vector<std::string> tower;
    std::vector<std::string> warnings;
};

inline SplitCoverData split_nongalois_validate(const K3Model& model,
                                               const SplitCoverInput& input) {
    SplitCoverData out;
    out.input = input;
    std::set<std::string> seen;
    auto sum_of = [&](const std::vector<std::string>& names) {
        QVec v(model.ns.rank(), Rat(0));
        for (const auto& n : names) {
            K3_CHECK(seen.insert(n).second,
                     "branch divisor is not reduced: curve '" << n << "' repeats");
            v = add(v, model.curve(n).v);
        }
        return v;
    };
    out.Bp = sum_of(input.B_triple);
    out.Cp = sum_of(input.C_triple);
    out.Bpp = sum_of(input.B_split);
    out.Cpp = sum_of(input.C_split);

    K3_CHECK(!(input.B_split.empty() && input.C_split.empty()),
             "the splitting divisor D'' is empty: this branch datum defines a "
             "Galois triple cover; use the Galois-cover operations instead");

    const std::size_t r = model.ns.rank();
    QVec L(r, Rat(0)), M(r, Rat(0));
    for (std::size_t i = 0; i < r; ++i) {
        L[i] = (2 * out.Bp[i] + out.Cp[i]) / 3 + out.Bpp[i] / 2;
        M[i] = (out.Bp[i] + 2 * out.Cp[i]) / 3 + out.Cpp[i] / 2;
    }
    K3_CHECK(is_member(model.ns, L),
             "L = (2B'+C')/3 + B''/2 is not in the Neron-Severi lattice: no "
             "split non-Galois triple cover has this branch data");
    K3_CHECK(is_member(model.ns, M),
             "M = (B'+2C')/3 + C''/2 is not in the Neron-Severi lattice: no "
             "split non-Galois triple cover has this branch data");
    out.L = L;
    out.M = M;

    if (input.B_triple.empty() && input.C_triple.empty())
        out.warnings.push_back("cyclic part B'+C' is empty: the Galois closure "
                               "is an unramified triple cover of the quadratic "
                               "intermediate surface");
    out.tower = {
        "Galois closure: a degree-6 surface with group S3 over the base",
        "quadratic step: double cover branched along D'' = B'' + C''",
        "cyclic step: Galois triple cover of the quadratic intermediate, "
        "branched along the pullback of B' + C'",
    };
    return out;
}

// --- invariants of the split general-type family (k in {8,16}) -----------------

struct SplitGentypeResult {
    SurfaceInvariants W;  // quadratic intermediate
    SurfaceInvariants Z;  // Galois closure
    SurfaceInvariants X;  // the triple cover itself
    int kodaira = 2;
    Int min_minus_one_curves = 0;  // X is never minimal in this family
    std::vector<std::string> notes;
};

inline SplitGentypeResult split_nongalois_gentype_invariants(const Int& k, const Int& h) {
    K3_CHECK(k == 8 || k == 16, "the family is tabulated for k = 8 or k = 16, got " << k);
    K3_CHECK(h >= 1, "h must be at least 1, got " << h);
    SplitGentypeResult out;

    out.W.chi = (16 - k) / 4;
    out.W.K2 = -k;
    out.W.e = 48 - 2 * k;
    out.W.q = MaybeInt::exact((k - 8) / 4);
    out.W.pg = MaybeInt::exact(out.W.chi - 1 + out.W.q.value);

    out.Z.chi = (48 - 3 * k) / 4 + 10 * h;
    out.Z.K2 = -3 * k + 48 * h;
    out.Z.e = 144 - 6 * k + 72 * h;
    Int h20 = 9 - k / 2 + 10 * h;
    out.Z.pg = MaybeInt::exact(h20);
    out.Z.q = MaybeInt::exact(h20 + 1 - out.Z.chi);

    out.X.chi = (24 - k) / 4 + 5 * h;
    out.X.K2 = -k + 24 * h;
    out.X.e = 72 + 36 * h - 2 * k;
    if (k == 8) {
        out.X.q = MaybeInt::exact(0);
        out.X.pg = MaybeInt::exact(3 + 5 * h);
    } else {
        out.X.q = MaybeInt::unknown("irregularity of the k=16 family needs "
                                    "extra input (position of the branch "
                                    "points on the genus-2 curve)");
        out.X.pg = MaybeInt::unknown("pg = chi - 1 + q; pinned once q is known");
    }

    // The closure is a double cover of X, unramified in codimension 1 away
    // from the exceptional locus; its invariants are tied to X.
    K3_ASSERT(out.Z.chi == 2 * out.X.chi - k / 4, "chi(Z) identity broken");
    K3_ASSERT(out.Z.K2 == 2 * out.X.K2 - k, "K2(Z) identity broken");
    K3_ASSERT(out.Z.e == 2 * out.X.e - 2 * k, "e(Z) identity broken");

    out.min_minus_one_curves = k;
    out.notes.push_back("X is not minimal: it carries at least " + str(k) +
                        " (-1)-curves, so the minimal model has K^2 >= " +
                        str(Int(out.X.K2 + k)));
    out.notes.push_back("kodaira dimension 2 (general type)");
    return out;
}

// --- invariants of the split genus-one-fibration family ------------------------

struct SplitEllipticResult {
    SurfaceInvariants inv;
    Int genus_base = 0;
    int kodaira = 1;
    std::vector<std::string> notes;
};

// 2k points of total branching and h simple ones, r <= h of which are moved
// freely; the base curve has genus 2k + h - 2.
inline SplitEllipticResult split_elliptic_invariants(const Int& k, const Int& h, const Int& r) {
    K3_CHECK(k >= 0, "k must be non-negative");
    K3_CHECK(h >= 1, "h must be at least 1, got " << h);
    K3_CHECK(r >= 0 && r <= h, "r must lie between 0 and h = " << h << ", got " << r);
    K3_CHECK(2 * k + h - 2 >= 1,
             "the base curve must have positive genus: need 2k + h - 2 >= 1");
    SplitEllipticResult out;
    out.genus_base = 2 * k + h - 2;
    out.inv.chi = 6;
    out.inv.K2 = 0;
    out.inv.e = 72;
    out.inv.q = MaybeInt::at_least(out.genus_base,
                                   "the fibration maps onto a curve of genus " +
                                       str(out.genus_base));
    out.inv.pg = MaybeInt::at_least(5 + out.genus_base, "pg = chi - 1 + q");
    out.notes.push_back("properly elliptic: chi > 0 and the fibration has "
                        "positive-genus base");
    return out;
}

// --- extension / triple-cover existence criteria --------------------------------

enum class Verdict { exists_unique, exists, no_by_criterion, undecided };

inline std::string str(Verdict v) {
    switch (v) {
        case Verdict::exists_unique: return "exists (unique)";
        case Verdict::exists: return "exists";
        case Verdict::no_by_criterion: return "no";
        case Verdict::undecided: return "undecided";
    }
    return "?";
}

struct ExtensionReport {
    Verdict verdict = Verdict::undecided;
    Coh twist;  // cohomology of the line bundle with class M - L
    std::string explanation;
};

// A non-split extension of M by L exists iff h1 of the twist M - L is
// positive; the criterion additionally requires h0 of the twist to vanish
// (otherwise the extension class is swallowed by automorphisms and the
// resulting bundle never yields a cover).
inline ExtensionReport extension_exists(const K3Model& model, const QVec& L, const QVec& M) {
    ExtensionReport out;
    QVec v(model.ns.rank(), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = M[i] - L[i];
    out.twist = sheaf_cohomology(model, v);

    if (out.twist.h0.known_at_least(1)) {
        out.verdict = Verdict::no_by_criterion;
        out.explanation = "h0 of the twist M - L is positive: the criterion "
                          "requires it to vanish";
        return out;
    }
    if (!(out.twist.h0.is_exact() && out.twist.h0.value == 0)) {
        out.explanation = "h0 of the twist M - L could not be pinned to 0";
        return out;
    }
    if (out.twist.h1.is_exact()) {
        if (out.twist.h1.value == 0) {
            out.verdict = Verdict::no_by_criterion;
            out.explanation = "h1 of the twist M - L vanishes: every extension splits";
        } else if (out.twist.h1.value == 1) {
            out.verdict = Verdict::exists_unique;
            out.explanation = "h1 of the twist M - L is 1: a unique non-split extension";
        } else {
            out.verdict = Verdict::exists;
            out.explanation = "h1 of the twist M - L is " + out.twist.h1.render() +
                              ": non-split extensions exist";
        }
    } else if (out.twist.h1.known_at_least(1)) {
        out.verdict = Verdict::exists;
        out.explanation = "h1 of the twist M - L is at least " + str(out.twist.h1.value) +
                          ": non-split extensions exist (uniqueness undecided)";
    } else {
        out.explanation = "h1 of the twist M - L is unknown";
    }
    return out;
}

struct TripleCoverReport {
    Verdict verdict = Verdict::undecided;
    ExtensionReport extension;
    MaybeInt cubic_sections;  // h0 of 2L - M
    std::string explanation;
};

// Building a triple cover from the extension bundle needs one more section:
// the cubic form lives in the line bundle with class 2L - M.
inline TripleCoverReport triple_cover_exists(const K3Model& model, const QVec& L, const QVec& M) {
    TripleCoverReport out;
    out.extension = extension_exists(model, L, M);
    QVec w(model.ns.rank(), Rat(0));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = 2 * L[i] - M[i];
    out.cubic_sections = sheaf_cohomology(model, w).h0;

    if (out.extension.verdict == Verdict::no_by_criterion ||
        out.extension.verdict == Verdict::undecided) {
        out.verdict = out.extension.verdict;
        out.explanation = out.extension.explanation;
        return out;
    }
    if (out.cubic_sections.known_at_least(1)) {
        out.verdict = out.extension.verdict;
        out.explanation = out.extension.explanation +
                          "; the cubic form bundle 2L - M has sections";
    } else if (out.cubic_sections.is_exact() && out.cubic_sections.value == 0) {
        out.verdict = Verdict::no_by_criterion;
        out.explanation = "the cubic form bundle 2L - M has no sections";
    } else {
        out.verdict = Verdict::undecided;
        out.explanation = "h0 of the cubic form bundle 2L - M is unknown";
    }
    return out;
}

// Specialization to fiber classes on an elliptic K3: L = nF, M = mF.  All
// cohomology is exact here, so the verdict is always decided.
struct FiberExtensionReport {
    Verdict verdict = Verdict::undecided;
    Int h0 = 0, h1 = 0, h2 = 0;  // cohomology of (m - n)F
    std::string explanation;
};

inline FiberExtensionReport extension_exists_fiber(const Int& n, const Int& m) {
    K3_CHECK(n >= 0 && m >= 0, "fiber multiples must be non-negative");
    FiberExtensionReport out;
    const Int k = m - n;
    out.h0 = k >= 0 ? k + 1 : Int(0);
    out.h2 = k <= 0 ? 1 - k : Int(0);
    out.h1 = out.h0 + out.h2 - 2;  // chi((m-n)F) = 2 on a K3
    K3_ASSERT(out.h1 >= 0, "negative h1 in fiber computation");
    if (out.h0 > 0) {
        out.verdict = Verdict::no_by_criterion;
        out.explanation = "h0((m-n)F) = " + str(out.h0) + " > 0";
    } else if (out.h1 == 0) {
        out.verdict = Verdict::no_by_criterion;
        out.explanation = "h1((m-n)F) = 0: every extension splits (n = m + 1)";
    } else if (out.h1 == 1) {
        out.verdict = Verdict::exists_unique;
        out.explanation = "h1((m-n)F) = 1: unique non-split extension (n = m + 2)";
    } else {
        out.verdict = Verdict::exists;
        out.explanation = "h1((m-n)F) = " + str(out.h1) + ": non-split extensions exist";
    }
    return out;
}

// --- ideal sheaves of points on an elliptic K3 ---------------------------------

enum class PointGeometry { distinct_fibers, same_fiber, double_point };

inline std::string str(PointGeometry g) {
    switch (g) {
        case PointGeometry::distinct_fibers: return "distinct fibers";
        case PointGeometry::same_fiber: return "same fiber";
        case PointGeometry::double_point: return "double point";
    }
    return "?";
}

struct IdealCoh {
    Int h0 = 0, h1 = 0;
    std::string note;
};

// Cohomology of I_Z(mF) for a length-1 or length-2 subscheme Z in general
// position; for length 2 the answer depends on whether the points sit on
// distinct fibers.  In every case h0 - h1 = chi(mF) - len = 2 - len.
inline IdealCoh ideal_sheaf_cohomology(const Int& len, const Int& m,
                                       PointGeometry geom = PointGeometry::distinct_fibers) {
    K3_CHECK(len == 1 || len == 2, "only length 1 and 2 are tabulated, got " << len);
    K3_CHECK(m >= 1, "the twist must be at least F, got m = " << m);
    IdealCoh out;
    if (len == 1) {
        out.h0 = m;
        out.h1 = m - 1;
        out.note = "one point: the members of |mF| through it";
    } else if (geom == PointGeometry::distinct_fibers) {
        out.h0 = m == 1 ? Int(0) : m - 1;
        out.h1 = out.h0;
        out.note = "two points on distinct fibers impose independent conditions";
    } else {
        out.h0 = m;
        out.h1 = m;
        out.note = "a fiber through one of the points contains the whole "
                   "length-2 scheme";
    }
    K3_ASSERT(out.h0 - out.h1 == 2 - len, "ideal sheaf Euler characteristic broken");
    return out;
}

// --- the rank-2 bundle of the (3,1,2) configuration ----------------------------

struct Bundle312Report {
    Int h0 = 0, h1 = 0, h2 = 0, chi = 0;
    Int c1_fiber_multiple = 0;  // c1 = (n+m) F
    Int c2 = 0;
    FiberExtensionReport extension;
    Verdict cover_verdict = Verdict::undecided;
    Int cubic_sections = 0;  // h0((2n-m)F)
    Int reported_q = 0, reported_pg = 0;
    std::vector<std::string> notes;
};

// The extension of I_Z(mF) by nF for (n, m, len) = (3, 1, 2) with the two
// points on distinct fibers: the bundle behind the sporadic non-split cover.
inline Bundle312Report bundle_cohomology_312(const Int& n, const Int& m, const Int& len,
                                             PointGeometry geom = PointGeometry::distinct_fibers) {
    K3_CHECK(n == 3 && m == 1 && len == 2 && geom == PointGeometry::distinct_fibers,
             "only the (3,1,2) configuration with points on distinct fibers is "
             "tabulated");
    Bundle312Report out;
    out.extension = extension_exists_fiber(n, m);
    K3_ASSERT(out.extension.verdict == Verdict::exists_unique,
              "the (3,1,2) extension should be unique");
    IdealCoh ideal = ideal_sheaf_cohomology(len, m, geom);
    // 0 -> nF -> E -> I_Z(mF) -> 0 with vanishing connecting maps.
    out.h0 = (n + 1) + ideal.h0;
    out.h1 = (n - 1) + ideal.h1;
    out.h2 = 0;
    out.chi = out.h0 - out.h1 + out.h2;
    out.c1_fiber_multiple = n + m;
    out.c2 = n * m * 0 + len;  // F^2 = 0
    // Riemann-Roch for a rank-2 bundle on a K3: chi = 2*2 + c1^2/2 - c2.
    K3_ASSERT(out.chi == 4 + 0 - out.c2, "Riemann-Roch check failed for the bundle");
    // The cover needs a cubic form: a section of (2n-m)F, which moves.
    out.cubic_sections = 2 * n - m + 1;
    K3_ASSERT(out.cubic_sections >= 1, "cubic form bundle has no sections");
    out.cover_verdict = Verdict::exists;
    out.reported_q = 3;
    out.reported_pg = 6;
    out.notes.push_back("q and pg of the associated cover are reported values, "
                        "not derived by this toolkit");
    return out;
}

}  // namespace k3cover
