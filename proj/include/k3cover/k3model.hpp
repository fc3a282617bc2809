#pragma once

// A worked K3 model: Neron-Severi lattice with named basis + glue, declared
// curve classes with geometric attributes, and a registry of sheaf-level
// facts (nef, effective, declared h^0, ...).  On top of that sit genus,
// Riemann-Roch, the h^1 resolution policy, and branch-component analysis.

#include "k3cover/lattice.hpp"

#include <algorithm>
#include <map>

namespace k3cover {

struct CurveClass {
    std::string name;
    QVec v;
    bool rational = false;
    bool irreducible = false;
    bool smooth = false;
    bool section = false;
    bool fiber_component = false;

    bool operator==(const CurveClass&) const = default;
};

struct Facts {
    bool nef = false;
    bool big = false;
    bool pseudoample = false;
    bool effective = false;
    bool not_effective = false;
    bool irreducible_member = false;
    bool elliptic_fiber = false;
    std::optional<Int> h0;

    bool any() const {
        return nef || big || pseudoample || effective || not_effective ||
               irreducible_member || elliptic_fiber || h0.has_value();
    }
    bool operator==(const Facts&) const = default;
};

namespace detail {
inline std::string class_key(const QVec& v) {
    std::ostringstream oss;
    for (const auto& q : v) oss << q << ",";
    return oss.str();
}
}  // namespace detail

class FactRegistry {
  public:
    Facts& declare(const QVec& v) {
        auto& slot = by_key_[detail::class_key(v)];
        slot.first = v;
        return slot.second;
    }
    Facts lookup(const QVec& v) const {
        auto it = by_key_.find(detail::class_key(v));
        return it == by_key_.end() ? Facts{} : it->second.second;
    }
    // Key -> (class vector, facts), deterministically ordered.
    const std::map<std::string, std::pair<QVec, Facts>>& all() const { return by_key_; }
    bool operator==(const FactRegistry&) const = default;

  private:
    std::map<std::string, std::pair<QVec, Facts>> by_key_;
};

struct K3Model {
    std::string name = "model";
    Lattice ns;
    std::vector<CurveClass> curves;
    FactRegistry facts;
    // Classes singled out as elliptic-fiber classes live in `facts`; curves
    // are looked up by name:
    const CurveClass* find_curve(const std::string& nm) const {
        for (const auto& c : curves)
            if (c.name == nm) return &c;
        return nullptr;
    }
    const CurveClass& curve(const std::string& nm) const {
        const CurveClass* c = find_curve(nm);
        K3_CHECK(c != nullptr, "unknown curve '" << nm << "'");
        return *c;
    }
    bool operator==(const K3Model&) const = default;
};

inline QVec negate(const QVec& v) {
    QVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
    return w;
}

// Self-intersection and genus/Riemann-Roch on a K3: 2g - 2 = D.D and
// chi(O(D)) = D.D/2 + 2.
inline Int self_int(const K3Model& m, const QVec& v) {
    Rat s = norm(m.ns, v);
    K3_CHECK(is_integer(s), "class has non-integral self-intersection " << s);
    return numerator(s);
}

inline Int genus(const K3Model& m, const QVec& v) {
    Int s = self_int(m, v);
    K3_CHECK(s % 2 == 0, "odd self-intersection " << s << " in a K3 model");
    return s / 2 + 1;
}

inline Int riemann_roch_chi(const K3Model& m, const QVec& v) {
    Int s = self_int(m, v);
    K3_CHECK(s % 2 == 0, "odd self-intersection " << s << " in a K3 model");
    return s / 2 + 2;
}

// Full consistency pass over a model.  Throws with a specific message on the
// first violation.
inline void validate_model(const K3Model& m) {
    const Signature sig = signature(m.ns);
    K3_CHECK(sig.pos == 1 && sig.zero == 0,
             "Neron-Severi lattice of a projective K3 must have signature "
             "(1, rank-1); got " << str(sig));
    K3_CHECK(is_even(m.ns), "Neron-Severi lattice must be even");
    for (const auto& c : m.curves) {
        K3_CHECK(is_member(m.ns, c.v),
                 "curve '" << c.name << "' is not a lattice member");
        K3_CHECK(!is_zero(c.v), "curve '" << c.name << "' has zero class");
        if (c.rational && c.irreducible)
            K3_CHECK(self_int(m, c.v) == -2,
                     "irreducible rational curve '"
                         << c.name << "' must have self-intersection -2, got "
                         << self_int(m, c.v));
        if (c.irreducible)
            K3_CHECK(genus(m, c.v) >= 0, "irreducible curve '"
                                             << c.name << "' has negative genus");
    }
}

// --- cohomology ------------------------------------------------------------

struct Coh {
    MaybeInt h0, h1, h2;
    std::vector<std::string> notes;
    bool complete() const { return h0.is_exact() && h1.is_exact() && h2.is_exact(); }
};

namespace detail {

// If v is an integer multiple of a declared elliptic-fiber class, return the
// multiplier.
inline std::optional<Int> elliptic_multiple(const K3Model& m, const QVec& v) {
    // Fiber classes are declared on curves or basis vectors; scan those.
    std::vector<QVec> candidates;
    for (const auto& c : m.curves) candidates.push_back(c.v);
    for (std::size_t i = 0; i < m.ns.rank(); ++i)
        candidates.push_back(basis_vector(m.ns, i));
    for (const auto& e : candidates) {
        if (!m.facts.lookup(e).elliptic_fiber) continue;
        // v == n*e for an integer n?
        std::optional<Rat> ratio;
        bool ok = true;
        for (std::size_t i = 0; i < v.size() && ok; ++i) {
            if (e[i] == 0) {
                if (v[i] != 0) ok = false;
            } else if (!ratio) {
                ratio = v[i] / e[i];
            } else if (v[i] / e[i] != *ratio) {
                ok = false;
            }
        }
        if (ok && ratio && is_integer(*ratio) && *ratio != 0) return to_int(*ratio);
    }
    return std::nullopt;
}

// Classes usable as nef test divisors: declared nef/pseudoample/elliptic
// fibers, plus irreducible curves of non-negative self-intersection.
inline std::vector<QVec> nef_witnesses(const K3Model& m) {
    std::vector<QVec> out;
    for (const auto& c : m.curves) {
        Facts f = m.facts.lookup(c.v);
        if (f.nef || f.pseudoample || f.elliptic_fiber ||
            (c.irreducible && self_int(m, c.v) >= 0))
            out.push_back(c.v);
    }
    for (std::size_t i = 0; i < m.ns.rank(); ++i) {
        QVec b = basis_vector(m.ns, i);
        Facts f = m.facts.lookup(b);
        if (f.nef || f.pseudoample || f.elliptic_fiber) out.push_back(b);
    }
    return out;
}

// Exact-or-bounded h^0, by declared facts plus two derivations:
//   - a nef divisor pairing negatively with v kills all sections;
//   - chi(v) >= 1 with h^0(-v) = 0 forces h^0 >= chi (Riemann-Roch, h^2 = h^0(-v)).
inline MaybeInt h0_estimate(const K3Model& m, const QVec& v, int depth = 1) {
    Facts f = m.facts.lookup(v);
    if (f.h0) return MaybeInt::exact(*f.h0);
    if (is_zero(v)) return MaybeInt::exact(1);
    if (f.not_effective) return MaybeInt::exact(0);
    if ((f.nef && f.big) || f.pseudoample)
        return MaybeInt::exact(riemann_roch_chi(m, v));
    if (auto n = elliptic_multiple(m, v)) {
        if (*n >= 1) return MaybeInt::exact(*n + 1);
        return MaybeInt::exact(0);  // negative multiple of a moving class
    }
    for (const auto& w : nef_witnesses(m))
        if (pair(m.ns, v, w) < 0)
            return MaybeInt::exact(0);
    if (f.effective) return MaybeInt::at_least(1, "declared effective");
    if (depth > 0) {
        Int chi = riemann_roch_chi(m, v);
        if (chi >= 1) {
            MaybeInt back = h0_estimate(m, negate(v), depth - 1);
            if (back.is_exact() && back.value == 0)
                return MaybeInt::at_least(chi, "chi >= 1 and h0 of the dual vanishes");
        }
    }
    return MaybeInt::unknown("no fact or derivation applies");
}

}  // namespace detail

// The h^1 resolution policy.  Rules, in order:
//   0. the zero class: (1,0,1).
//   1. nef+big (or pseudoample) vanishing: (chi, 0, 0); dually (0, 0, chi).
//   2. multiples of an elliptic fiber class: nE -> (n+1, n-1, 0) for n >= 1,
//      and the Serre-dual values for n <= -1.
//   3. rigid (-2) classes: effective with an irreducible member -> (1, 0, 0);
//      dually (0, 0, 1).
//   4. classes with no sections either way: h1 = -chi (needs chi <= 0; the
//      classical isolated case is chi = -1, self-intersection -6).
//   5. declared h^0, with h^2 resolved through the dual class when possible.
// Anything else stays needs-input with whatever partial bounds are available.
inline Coh sheaf_cohomology(const K3Model& m, const QVec& v) {
    Coh out;
    const Int chi = riemann_roch_chi(m, v);
    const QVec mv = negate(v);
    const Facts f = m.facts.lookup(v);
    const Facts fm = m.facts.lookup(mv);

    auto set = [&](Int a, Int b, Int c, std::string note) {
        out.h0 = MaybeInt::exact(a);
        out.h1 = MaybeInt::exact(b);
        out.h2 = MaybeInt::exact(c);
        out.notes.push_back(std::move(note));
    };

    if (is_zero(v)) {
        set(1, 0, 1, "trivial class");
        return out;
    }
    if ((f.nef && f.big) || f.pseudoample) {
        K3_CHECK(chi >= 2, "nef and big class with chi " << chi << ": facts inconsistent");
        set(chi, 0, 0, "nef and big: higher cohomology vanishes");
        return out;
    }
    if ((fm.nef && fm.big) || fm.pseudoample) {
        set(0, 0, chi, "dual of nef and big");
        return out;
    }
    if (auto n = detail::elliptic_multiple(m, v)) {
        if (*n >= 1) {
            set(*n + 1, *n - 1, 0, "multiple of an elliptic fiber class");
            return out;
        }
        set(0, -*n - 1, -*n + 1, "negative multiple of an elliptic fiber class");
        return out;
    }
    if (self_int(m, v) == -2) {
        if (f.effective && f.irreducible_member) {
            set(1, 0, 0, "rigid: effective (-2) class with irreducible member");
            return out;
        }
        if (fm.effective && fm.irreducible_member) {
            set(0, 0, 1, "dual of a rigid (-2) class");
            return out;
        }
    }
    MaybeInt h0 = detail::h0_estimate(m, v);
    MaybeInt h2 = detail::h0_estimate(m, mv);  // Serre duality on a K3
    if (h0.is_exact() && h0.value == 0 && h2.is_exact() && h2.value == 0) {
        K3_CHECK(chi <= 0, "facts force h0 = h2 = 0 but chi = "
                               << chi << " > 0: inconsistent");
        set(0, -chi, 0, "no sections either way: h1 = -chi");
        return out;
    }
    if (f.h0 && h2.is_exact()) {
        Int h1 = *f.h0 + h2.value - chi;
        K3_CHECK(h1 >= 0, "declared h0 = " << *f.h0 << " forces negative h1");
        set(*f.h0, h1, h2.value, "declared h0");
        return out;
    }

    out.h0 = h0;
    out.h2 = h2;
    // h1 = h0 + h2 - chi, and h0, h2 >= 0 always, so every available lower
    // bound accumulates.
    Int lower = -chi;
    if (h0.state != MaybeInt::State::unknown) lower += h0.value;
    if (h2.state != MaybeInt::State::unknown) lower += h2.value;
    if (lower >= 1)
        out.h1 = MaybeInt::at_least(lower, "Riemann-Roch lower bound");
    else
        out.h1 = MaybeInt::unknown("policy exhausted; declare h0 or effectivity facts");
    out.notes.push_back("needs-input: no policy rule resolved the class exactly");
    return out;
}

// --- branch components -----------------------------------------------------

struct BranchComponent {
    std::vector<std::string> curves;  // names, in declaration order
    QVec cls;                         // class of the summed component
    IMat gram;                        // pairing matrix of the member curves
    bool a2_config = false;           // two (-2) rational curves meeting once
};

// Split a reduced curve collection into connected components of its
// intersection graph (edge when the pairing is nonzero).
inline std::vector<BranchComponent> connected_components(
    const K3Model& m, const std::vector<std::string>& names) {
    const std::size_t n = names.size();
    std::vector<const CurveClass*> cs;
    cs.reserve(n);
    for (const auto& nm : names) cs.push_back(&m.curve(nm));

    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };

    IMat pairs(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rat p = pair(m.ns, cs[i]->v, cs[j]->v);
            K3_CHECK(is_integer(p), "non-integral intersection between '"
                                        << cs[i]->name << "' and '" << cs[j]->name
                                        << "'");
            pairs.at(i, j) = pairs.at(j, i) = numerator(p);
            if (i != j && pairs.at(i, j) != 0) parent[find(i)] = find(j);
        }

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

    std::vector<BranchComponent> out;
    for (auto& [root, members] : groups) {
        (void)root;
        BranchComponent comp;
        comp.cls = QVec(m.ns.rank());
        comp.gram = IMat(members.size(), members.size());
        for (std::size_t a = 0; a < members.size(); ++a) {
            comp.curves.push_back(cs[members[a]]->name);
            comp.cls = add(comp.cls, cs[members[a]]->v);
            for (std::size_t b = 0; b < members.size(); ++b)
                comp.gram.at(a, b) = pairs.at(members[a], members[b]);
        }
        if (members.size() == 2) {
            const CurveClass& c1 = *cs[members[0]];
            const CurveClass& c2 = *cs[members[1]];
            comp.a2_config = c1.rational && c1.irreducible && c2.rational &&
                             c2.irreducible && comp.gram.at(0, 0) == -2 &&
                             comp.gram.at(1, 1) == -2 && comp.gram.at(0, 1) == 1;
        }
        out.push_back(std::move(comp));
    }
    // Deterministic order: by first curve's position in the input list.
    std::sort(out.begin(), out.end(),
              [&](const BranchComponent& x, const BranchComponent& y) {
                  auto pos = [&](const std::string& nm) {
                      return std::find(names.begin(), names.end(), nm) - names.begin();
                  };
                  return pos(x.curves.front()) < pos(y.curves.front());
              });
    return out;
}

}  // namespace k3cover
