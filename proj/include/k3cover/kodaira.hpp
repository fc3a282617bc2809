#pragma once

// Kodaira dimension of Galois triple covers from the shape of the branch
// component lattices; the irreducible-big-component family; base change of
// elliptic K3 surfaces along degree-3 covers of the line, with the full
// fiber-type transform tables.

#include "k3cover/cover.hpp"

namespace k3cover {

// --- classification by branch component lattices -----------------------------

struct KodairaResult {
    bool valid = false;
    std::optional<int> dim;
    std::string reason;
    std::string minimal_model_kind;  // for dim 0: "K3" or "Abelian"
    std::vector<Signature> component_signatures;
};

namespace detail {
inline bool gram_is_a2_minus1(const IMat& g) {
    if (g.rows != 2) return false;
    Lattice lat = make_lattice({"x1", "x2"}, g);
    return is_a2_minus1(lat);
}
}  // namespace detail

// Classify from raw component Gram matrices (pairing matrices of the curves
// in each connected branch component).
inline KodairaResult classify_kodaira(const std::vector<IMat>& component_grams) {
    KodairaResult out;
    if (component_grams.empty()) {
        out.reason = "empty branch: no nontrivial connected Galois triple cover";
        return out;
    }
    std::vector<Signature> sigs;
    for (const auto& g : component_grams) sigs.push_back(signature_of(g));
    out.component_signatures = sigs;

    std::size_t positive = 0, degenerate = 0;
    for (std::size_t i = 0; i < sigs.size(); ++i) {
        if (sigs[i].pos >= 2) {
            out.reason = "component " + std::to_string(i + 1) +
                         " has two independent positive directions: impossible "
                         "inside the Neron-Severi lattice of a surface (Hodge "
                         "index theorem)";
            return out;
        }
        if (sigs[i].pos == 1) {
            ++positive;
            if (sigs[i].zero > 0) {
                out.reason = "component " + std::to_string(i + 1) +
                             " has a positive direction orthogonal to an "
                             "isotropic one: impossible in a hyperbolic lattice "
                             "(Hodge index theorem)";
                return out;
            }
        } else if (sigs[i].zero > 0) {
            ++degenerate;
        }
    }
    if (positive >= 2) {
        out.reason =
            "two orthogonal components with positive directions violate the "
            "Hodge index theorem";
        return out;
    }

    auto require_a2 = [&](bool also_forbid_degenerate) -> bool {
        for (std::size_t i = 0; i < sigs.size(); ++i) {
            if (sigs[i].pos == 1) continue;
            if (sigs[i].zero > 0) {
                if (also_forbid_degenerate) {
                    out.reason = "component " + std::to_string(i + 1) +
                                 " is degenerate; with a hyperbolic component "
                                 "present the remaining ones must be "
                                 "A2-configurations";
                    return false;
                }
                continue;
            }
            if (!detail::gram_is_a2_minus1(component_grams[i])) {
                out.reason = "component " + std::to_string(i + 1) +
                             " is negative definite but not an A2-configuration "
                             "lattice: not a valid branch for a Galois triple "
                             "cover of a K3";
                return false;
            }
        }
        return true;
    };

    if (positive == 1) {
        if (!require_a2(/*also_forbid_degenerate=*/true)) return out;
        if (component_grams.size() > 10) {
            out.reason = "a branch with a hyperbolic component has at most 10 "
                         "connected components";
            return out;
        }
        out.valid = true;
        out.dim = 2;
        out.reason = "one hyperbolic component, the rest A2-configurations";
        return out;
    }
    if (degenerate > 0) {
        if (!require_a2(/*also_forbid_degenerate=*/false)) return out;
        out.valid = true;
        out.dim = 1;
        out.reason = "no positive direction, at least one degenerate component";
        return out;
    }
    // All components negative definite.
    if (!require_a2(/*also_forbid_degenerate=*/false)) return out;
    const std::size_t n = component_grams.size();
    if (n != 6 && n != 9) {
        out.reason = "a negative definite branch consists of exactly 6 or 9 "
                     "A2-configurations; got " + std::to_string(n);
        return out;
    }
    out.valid = true;
    out.dim = 0;
    out.minimal_model_kind = (n == 6) ? "K3" : "Abelian";
    out.reason = std::to_string(n) + " A2-configurations, all negative definite";
    return out;
}

inline KodairaResult classify_kodaira(const CoverData& cover) {
    std::vector<IMat> grams;
    for (const auto& comp : cover.components) grams.push_back(comp.gram);
    return classify_kodaira(grams);
}

// --- the irreducible big-component family ------------------------------------

// Branch = one irreducible curve D1 with D1^2 > 0 plus (n-1)
// A2-configurations.  The family is parametrized by d = D1^2/6 and
// k = (d - n + 1)/3; the minimal model is of general type with the invariants
// below.  D1^2 = 0 lands in the genus-one fibration families instead.
struct IrreducibleFamily {
    int dim = 2;
    Int d = 0, k = 0;
    SurfaceInvariants minimal_model;
    std::string note;
};

inline IrreducibleFamily classify_irreducible(const Int& d1_square, const Int& n_components) {
    K3_CHECK(d1_square >= 0,
             "the distinguished component must have non-negative square; an "
             "irreducible curve with negative square is rigid and rational, "
             "hence part of a configuration, not a big component");
    IrreducibleFamily out;
    if (d1_square == 0) {
        out.dim = 1;
        out.note = "square-zero component: the cover is a genus-one fibration "
                   "family (see the base-change operations)";
        return out;
    }
    K3_CHECK(n_components >= 1 && n_components <= 10,
             "component count must be between 1 and 10, got " << n_components);
    K3_CHECK(d1_square % 6 == 0, "D1^2 must be divisible by 6, got " << d1_square);
    out.d = d1_square / 6;
    Int residue = (out.d - (n_components - 1)) % 3;
    K3_CHECK(residue == 0, "D1^2/6 = " << out.d << " must be congruent to n-1 = "
                                       << (n_components - 1) << " mod 3");
    out.k = (out.d - n_components + 1) / 3;
    K3_ASSERT(out.k >= -2, "family parameter k below -2");
    out.dim = 2;
    out.minimal_model.chi = 5 + n_components + 5 * out.k;
    out.minimal_model.K2 = 8 * n_components - 8 + 24 * out.k;
    out.minimal_model.e = 12 * out.minimal_model.chi - out.minimal_model.K2;
    out.minimal_model.q = MaybeInt::exact(0);
    out.minimal_model.pg = MaybeInt::exact(out.minimal_model.chi - 1);
    out.note = "general-type family member";
    return out;
}

// --- ramification moving part -------------------------------------------------

enum class RamificationMovingPart { no_moving_part, elliptic, general };

// The canonical class of the cover is the ramification divisor; its moving
// part decides the Kodaira dimension.  (A genus-0 moving part cannot occur:
// the canonical class is effective.)
inline int kodaira_from_ramification(RamificationMovingPart part) {
    switch (part) {
        case RamificationMovingPart::no_moving_part: return 0;
        case RamificationMovingPart::elliptic: return 1;
        case RamificationMovingPart::general: return 2;
    }
    throw internal_error("unreachable ramification kind");
}

// --- base change along degree-3 covers of the line ----------------------------

struct FiberType {
    enum class Kind { In, In_star, II, III, IV, IV_star, III_star, II_star };
    Kind kind = Kind::In;
    Int m = 0;  // for In / In*

    bool operator==(const FiberType&) const = default;
};

inline FiberType fiber_In(Int m) { return {FiberType::Kind::In, std::move(m)}; }

inline std::string str(const FiberType& f) {
    switch (f.kind) {
        case FiberType::Kind::In: return "I" + str(f.m);
        case FiberType::Kind::In_star: return "I" + str(f.m) + "*";
        case FiberType::Kind::II: return "II";
        case FiberType::Kind::III: return "III";
        case FiberType::Kind::IV: return "IV";
        case FiberType::Kind::IV_star: return "IV*";
        case FiberType::Kind::III_star: return "III*";
        case FiberType::Kind::II_star: return "II*";
    }
    return "?";
}

inline FiberType parse_fiber_type(const std::string& s) {
    K3_CHECK(!s.empty(), "empty fiber type");
    auto mk = [&](FiberType::Kind k) { return FiberType{k, 0}; };
    if (s == "II") return mk(FiberType::Kind::II);
    if (s == "III") return mk(FiberType::Kind::III);
    if (s == "IV") return mk(FiberType::Kind::IV);
    if (s == "II*" || s == "IIstar") return mk(FiberType::Kind::II_star);
    if (s == "III*" || s == "IIIstar") return mk(FiberType::Kind::III_star);
    if (s == "IV*" || s == "IVstar") return mk(FiberType::Kind::IV_star);
    if (s[0] == 'I') {
        bool star = s.back() == '*' || (s.size() > 4 && s.substr(s.size() - 4) == "star");
        std::string digits = s.substr(1);
        if (star) digits = digits.substr(0, digits.size() - (s.back() == '*' ? 1 : 4));
        K3_CHECK(!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos,
                 "cannot parse fiber type '" << s << "'");
        FiberType f;
        f.kind = star ? FiberType::Kind::In_star : FiberType::Kind::In;
        f.m = Int(digits);
        return f;
    }
    throw invalid_input("cannot parse fiber type '" + s + "'");
}

inline Int fiber_euler(const FiberType& f) {
    switch (f.kind) {
        case FiberType::Kind::In: return f.m;
        case FiberType::Kind::In_star: return f.m + 6;
        case FiberType::Kind::II: return 2;
        case FiberType::Kind::III: return 3;
        case FiberType::Kind::IV: return 4;
        case FiberType::Kind::IV_star: return 8;
        case FiberType::Kind::III_star: return 9;
        case FiberType::Kind::II_star: return 10;
    }
    throw internal_error("unreachable fiber kind");
}

inline bool fiber_is_reduced(const FiberType& f) {
    return f.kind == FiberType::Kind::In || f.kind == FiberType::Kind::II ||
           f.kind == FiberType::Kind::III || f.kind == FiberType::Kind::IV;
}

enum class BaseChangeMode { unbranched, total, partial_a2 };

struct FiberTransform {
    FiberType result;
    int copies = 1;  // 3 over unbranched points, 1 over branch points
};

// Fiber-type transform under a degree-3 base change: over an unbranched point
// the fiber triples in count; over a totally branched point the local
// monodromy cubes; the partial (A2) transform is the inverse direction and
// only exists at I_{3m}, IV, IV*.
inline FiberTransform base_change_fiber(const FiberType& f, BaseChangeMode mode) {
    using K = FiberType::Kind;
    if (mode == BaseChangeMode::unbranched) return {f, 3};
    if (mode == BaseChangeMode::total) {
        switch (f.kind) {
            case K::In: return {fiber_In(3 * f.m), 1};
            case K::In_star: return {{K::In_star, 3 * f.m}, 1};
            case K::II: return {{K::In_star, 0}, 1};       // II -> I0*
            case K::III: return {{K::III_star, 0}, 1};     // III -> III*
            case K::IV: return {fiber_In(0), 1};           // IV -> I0
            case K::IV_star: return {fiber_In(0), 1};      // IV* -> I0
            case K::III_star: return {{K::III, 0}, 1};     // III* -> III
            case K::II_star: return {{K::In_star, 0}, 1};  // II* -> I0*
        }
    }
    // partial_a2
    switch (f.kind) {
        case K::In:
            K3_CHECK(f.m % 3 == 0, "partial (A2) base change needs an I_{3m} "
                                   "fiber; got " << str(f));
            return {fiber_In(f.m / 3), 1};
        case K::IV: return {{K::IV, 0}, 1};
        case K::IV_star: return {fiber_In(0), 1};
        default:
            throw invalid_input(
                "partial (A2) base change is defined only at I_{3m}, IV and "
                "IV* fibers; got " + str(f));
    }
}

// A branch-marked fiber of the elliptic K3 downstairs.
struct MarkedFiber {
    FiberType type;
    int branch = 0;  // 0 unbranched, 1 totally branched with monodromy weight
                     // 1, 2 with weight 2

    bool operator==(const MarkedFiber&) const = default;
};

struct BaseChangeResult {
    SurfaceInvariants inv;    // chi=6, K2=0, e=72, q=n-2, pg=n+3
    Int genus_base = 0;       // genus of the covering curve
    int kodaira = 1;
    std::vector<FiberTransform> fibers;  // present when a fiber list was given
};

// Invariants of the triple cover of an elliptic K3 pulled back along the
// cyclic degree-3 cover of the line totally branched at n = b1 + b2 points,
// with monodromy weights 1 at b1 of them and 2 at b2 (so b1 + 2 b2 = 0 mod 3).
inline BaseChangeResult base_change_invariants(const Int& b1, const Int& b2,
                                               const std::vector<MarkedFiber>& fibers = {}) {
    K3_CHECK(b1 >= 0 && b2 >= 0, "branch point counts must be non-negative");
    K3_CHECK((b1 + 2 * b2) % 3 == 0,
             "no cyclic degree-3 cover: b1 + 2*b2 = " << (b1 + 2 * b2)
                                                      << " is not divisible by 3");
    const Int n = b1 + b2;
    K3_CHECK(n >= 2, "a nontrivial cyclic cover of the line needs at least "
                     "two branch points");
    BaseChangeResult out;
    // Riemann-Hurwitz for the base curve: 2g - 2 = 3(-2) + 2n.
    out.genus_base = n - 2;
    out.inv.chi = 6;
    out.inv.K2 = 0;
    out.inv.e = 72;
    out.inv.q = MaybeInt::exact(n - 2);
    out.inv.pg = MaybeInt::exact(n + 3);
    out.kodaira = 1;

    if (!fibers.empty()) {
        Int e_total = 0, marked1 = 0, marked2 = 0;
        for (const auto& mf : fibers) {
            e_total += fiber_euler(mf.type);
            if (mf.branch != 0) {
                K3_CHECK(fiber_is_reduced(mf.type) && mf.type.kind != FiberType::Kind::IV,
                         "branch fibers must be reduced and not of type IV for "
                         "the Euler bookkeeping; got " << str(mf.type));
                (mf.branch == 1 ? marked1 : marked2) += 1;
            }
        }
        // The list may be partial (only the fibers of interest); a full
        // list must add up to an elliptic K3 downstairs.
        K3_CHECK(e_total <= 24, "fiber multiset has Euler number "
                                    << e_total << " > 24: not an elliptic K3");
        K3_CHECK(marked1 <= b1 && marked2 <= b2,
                 "fiber branch marks (" << marked1 << "," << marked2
                                        << ") exceed (b1,b2) = (" << b1 << ","
                                        << b2 << ")");
        const bool complete = e_total == 24;
        if (complete)
            K3_CHECK(marked1 == b1 && marked2 == b2,
                     "complete fiber list with branch marks ("
                         << marked1 << "," << marked2 << ") not matching (b1,b2) = ("
                         << b1 << "," << b2 << ")");
        else
            out.inv.notes.push_back("partial fiber list: Euler numbers add up to " +
                                    str(e_total) + " of 24");
        Int e_up = 0;
        for (const auto& mf : fibers) {
            auto tr = base_change_fiber(
                mf.type, mf.branch ? BaseChangeMode::total : BaseChangeMode::unbranched);
            e_up += Int(tr.copies) * fiber_euler(tr.result);
            out.fibers.push_back(tr);
        }
        if (complete && marked1 == b1 && marked2 == b2)
            K3_ASSERT(e_up == 72, "transformed fibers sum to Euler " << e_up
                                                                     << ", expected 72");
    }
    return out;
}

}  // namespace k3cover
