#pragma once

// Lattices with named bases, integral Gram matrices, and rational glue
// vectors (overlattice generators).  This is the data layer everything else
// sits on: Neron-Severi models, branch component lattices, the shipped
// even-set lattices.

#include "k3cover/hnf.hpp"
#include "k3cover/matrix.hpp"
#include "k3cover/signature.hpp"
#include "k3cover/snf.hpp"

#include <map>
#include <numeric>

namespace k3cover {

struct Lattice {
    std::vector<std::string> names;  // basis of the integral part
    IMat gram;                       // pairing on that basis
    std::vector<QVec> glue;          // adjoined rational vectors, coords in basis

    std::size_t rank() const { return names.size(); }
    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        throw invalid_input("unknown basis class '" + name + "'");
    }
    bool operator==(const Lattice&) const = default;
};

inline Lattice make_lattice(std::vector<std::string> names, IMat gram) {
    K3_CHECK(gram.rows == gram.cols && gram.rows == names.size(),
             "Gram matrix shape does not match basis size");
    K3_CHECK(is_symmetric(gram), "Gram matrix must be symmetric");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            K3_CHECK(names[i] != names[j], "duplicate basis name '" << names[i] << "'");
    return Lattice{std::move(names), std::move(gram), {}};
}

inline Rat pair(const Lattice& lat, const QVec& v, const QVec& w) {
    return pair_rational(lat.gram, v, w);
}
inline Rat norm(const Lattice& lat, const QVec& v) { return pair(lat, v, v); }

inline QVec basis_vector(const Lattice& lat, std::size_t i) {
    QVec v(lat.rank());
    v[i] = 1;
    return v;
}

inline Signature signature(const Lattice& lat) {
    // Glue vectors span the same rational space, so they cannot change inertia.
    return signature_of(lat.gram);
}

namespace detail {

// Least common multiple of all denominators appearing in rows.
inline Int common_denominator(const std::vector<QVec>& rows) {
    Int d = 1;
    for (const auto& r : rows)
        for (const auto& q : r) d = lcm(d, denominator(q));
    return d;
}

// Stack the integral basis and the glue vectors, scale to integers, HNF.
// Returns the scale d and the HNF of d * (overlattice generators).
inline std::pair<Int, IMat> scaled_generators(const Lattice& lat) {
    const std::size_t n = lat.rank();
    Int d = common_denominator(lat.glue);
    IMat m(n + lat.glue.size(), n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = d;
    for (std::size_t g = 0; g < lat.glue.size(); ++g)
        for (std::size_t j = 0; j < n; ++j)
            m.at(n + g, j) = to_int(lat.glue[g][j] * d);
    return {d, hnf_rows(m)};
}

}  // namespace detail

// Basis of the full overlattice, as rational rows in the original basis.
inline std::vector<QVec> overlattice_basis(const Lattice& lat) {
    auto [d, h] = detail::scaled_generators(lat);
    K3_ASSERT(h.rows == lat.rank(), "overlattice basis lost rank");
    std::vector<QVec> rows(h.rows, QVec(lat.rank()));
    for (std::size_t i = 0; i < h.rows; ++i)
        for (std::size_t j = 0; j < h.cols; ++j)
            rows[i][j] = Rat(h.at(i, j), d);
    return rows;
}

// Is v (coords in the named basis) a member of the overlattice?
inline bool is_member(const Lattice& lat, const QVec& v) {
    K3_CHECK(v.size() == lat.rank(), "class has wrong coordinate length");
    auto [d, h] = detail::scaled_generators(lat);
    Int dv = 1;
    for (const auto& q : v) dv = lcm(dv, denominator(q));
    if (dv == 1 || d % dv == 0) {
        IVec w(v.size());
        bool integral = true;
        for (std::size_t j = 0; j < v.size(); ++j) {
            Rat s = v[j] * d;
            if (!is_integer(s)) { integral = false; break; }
            w[j] = numerator(s);
        }
        if (integral) return in_hnf_span(h, w);
    }
    // Denominator of v not compatible with the lattice scale: cannot be a member.
    return false;
}

// Replace basis+glue by an honest integral basis for the same overlattice.
// Names are synthesized; `basis_in_old` rows express the new basis in the old
// coordinates.
struct Flattened {
    Lattice lat;
    std::vector<QVec> basis_in_old;
};

inline Flattened flatten(const Lattice& lat) {
    auto rows = overlattice_basis(lat);
    const std::size_t n = lat.rank();
    IMat gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rat p = pair(lat, rows[i], rows[j]);
            K3_CHECK(is_integer(p), "glue produces non-integral pairing ("
                                        << p << ") between overlattice basis "
                                        << i << " and " << j);
            gram.at(i, j) = gram.at(j, i) = numerator(p);
        }
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = "f" + std::to_string(i + 1);
    return {make_lattice(std::move(names), std::move(gram)), std::move(rows)};
}

inline bool is_even(const Lattice& lat) {
    auto flat = flatten(lat);
    for (std::size_t i = 0; i < flat.lat.rank(); ++i)
        if (flat.lat.gram.at(i, i) % 2 != 0) return false;
    return true;
}

// Adjoin a rational glue vector, validating that the result is still an
// integral (and even, on the new generator) lattice.  Violations carry the
// name of the offending pairing.
inline Lattice adjoin_glue(Lattice lat, const QVec& v, const std::string& label = "glue") {
    K3_CHECK(v.size() == lat.rank(), "glue vector has wrong coordinate length");
    const Rat self = norm(lat, v);
    K3_CHECK(is_integer(self), "invalid glue: <" << label << "," << label
                                                 << "> = " << self
                                                 << " is not an integer");
    K3_CHECK(to_int(self) % 2 == 0, "invalid glue: <" << label << "," << label
                                                      << "> = " << self
                                                      << " is odd");
    for (std::size_t i = 0; i < lat.rank(); ++i) {
        Rat p = pair(lat, v, basis_vector(lat, i));
        K3_CHECK(is_integer(p), "invalid glue: <" << label << "," << lat.names[i]
                                                  << "> = " << p
                                                  << " is not an integer");
    }
    for (std::size_t g = 0; g < lat.glue.size(); ++g) {
        Rat p = pair(lat, v, lat.glue[g]);
        K3_CHECK(is_integer(p), "invalid glue: <" << label << ",glue" << (g + 1)
                                                  << "> = " << p
                                                  << " is not an integer");
    }
    lat.glue.push_back(v);
    return lat;
}

// Determinant of the Gram matrix of the overlattice (0 when degenerate).
inline Int bareiss_det(IMat m) {
    K3_ASSERT(m.rows == m.cols, "determinant of non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t s = k + 1;
            for (; s < n; ++s)
                if (m.at(s, k) != 0) break;
            if (s == n) return 0;
            m.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                K3_ASSERT(t % prev == 0, "Bareiss divisibility failed");
                m.at(i, j) = t / prev;
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

inline Int det(const Lattice& lat) { return bareiss_det(flatten(lat).lat.gram); }

// Discriminant group of a nondegenerate lattice: coker(G) as an abelian group.
struct DiscriminantGroup {
    IVec invariant_factors;  // the factors > 1, in divisibility order
    Int order = 1;
    std::string group;       // e.g. "Z/2 x Z/2 x Z/6"
};

inline DiscriminantGroup discriminant_group(const Lattice& lat) {
    auto flat = flatten(lat);
    K3_CHECK(bareiss_det(flat.lat.gram) != 0,
             "degenerate lattice has no (finite) discriminant group");
    IVec factors = invariant_factors(flat.lat.gram);
    DiscriminantGroup out;
    for (const auto& f : factors) {
        out.order *= f;
        if (f > 1) out.invariant_factors.push_back(f);
    }
    if (out.invariant_factors.empty()) {
        out.group = "trivial";
    } else {
        std::ostringstream oss;
        for (std::size_t i = 0; i < out.invariant_factors.size(); ++i) {
            if (i) oss << " x ";
            oss << "Z/" << out.invariant_factors[i];
        }
        out.group = oss.str();
    }
    return out;
}

// Is v/3 a member of the overlattice?  (The 3-divisibility test behind the
// existence of Galois triple cover data.)
inline bool is_three_divisible(const Lattice& lat, const QVec& v) {
    QVec third(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) third[i] = v[i] / 3;
    return is_member(lat, third);
}

// --- root enumeration ------------------------------------------------------

namespace detail {

struct LDL {
    std::vector<Rat> d;  // positive pivots
    QMat l;              // unit lower triangular
};

// Exact LDL^T of a positive definite rational matrix.  Only the lower
// triangle is maintained; no read ever touches the upper one.
inline LDL ldl_decompose(QMat a) {
    const std::size_t n = a.rows;
    LDL out;
    out.d.resize(n);
    out.l = QMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        K3_CHECK(a.at(k, k) > 0, "root enumeration requires a definite lattice");
        out.d[k] = a.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i)
            out.l.at(i, k) = a.at(i, k) / a.at(k, k);
        // Schur complement: a(i,j) -= a(i,k) * a(j,k) / d, column k unchanged.
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = k + 1; j <= i; ++j)
                a.at(i, j) -= out.l.at(i, k) * a.at(j, k);
        }
    }
    return out;
}

inline Int round_nearest(const Rat& q) {
    // floor(q + 1/2)
    Rat s = q + Rat(1, 2);
    Int fl = numerator(s) / denominator(s);
    if (s < 0 && fl * denominator(s) != numerator(s)) fl -= 1;
    return fl;
}

inline void enumerate_rec(const LDL& ldl, std::size_t level, const Rat& rem,
                          IVec& x, std::vector<IVec>& out) {
    // Q(x) = sum_k d[k] * (x_k + sum_{j>k} l(j,k) x_j)^2, processed from the
    // last coordinate down so the offsets only involve chosen coordinates.
    const std::size_t k = level - 1;
    Rat off;
    for (std::size_t j = k + 1; j < x.size(); ++j)
        if (x[j] != 0) off += ldl.l.at(j, k) * Rat(x[j]);
    auto term = [&](const Int& t) { Rat s = Rat(t) + off; return ldl.d[k] * s * s; };
    const Int center = round_nearest(-off);
    for (Int t = center;; --t) {
        Rat tv = term(t);
        if (tv > rem) break;
        x[k] = t;
        if (k == 0) {
            if (tv == rem) out.push_back(x);
        } else {
            enumerate_rec(ldl, k, rem - tv, x, out);
        }
    }
    for (Int t = center + 1;; ++t) {
        Rat tv = term(t);
        if (tv > rem) break;
        x[k] = t;
        if (k == 0) {
            if (tv == rem) out.push_back(x);
        } else {
            enumerate_rec(ldl, k, rem - tv, x, out);
        }
    }
    x[k] = 0;
}

}  // namespace detail

// All overlattice vectors v with v.v == target (target != 0, |target| <= 8,
// rank <= 16, lattice definite of the matching sign).  Vectors come back in
// the original named-basis coordinates; v and -v are both listed.
inline std::vector<QVec> enumerate_roots(const Lattice& lat, const Int& target) {
    K3_CHECK(target != 0, "root norm must be nonzero");
    K3_CHECK(abs(target) <= 8, "root enumeration supports |norm| <= 8");
    K3_CHECK(lat.rank() <= 16, "root enumeration supports rank <= 16");
    auto flat = flatten(lat);
    const Signature sig = signature_of(flat.lat.gram);
    if (target < 0)
        K3_CHECK(is_negative_definite(sig),
                 "root enumeration with negative norm requires a negative "
                 "definite lattice, got signature " << str(sig));
    else
        K3_CHECK(sig.neg == 0 && sig.zero == 0,
                 "root enumeration with positive norm requires a positive "
                 "definite lattice, got signature " << str(sig));

    QMat p = to_rational(flat.lat.gram);
    if (target < 0)
        for (auto& e : p.a) e = -e;
    auto ldl = detail::ldl_decompose(std::move(p));

    std::vector<IVec> raw;
    IVec x(lat.rank(), Int(0));
    if (lat.rank() > 0)
        detail::enumerate_rec(ldl, lat.rank(), Rat(abs(target)), x, raw);

    std::vector<QVec> out;
    out.reserve(raw.size());
    for (const auto& xi : raw) {
        QVec v(lat.rank());
        for (std::size_t i = 0; i < xi.size(); ++i) {
            if (xi[i] == 0) continue;
            for (std::size_t j = 0; j < lat.rank(); ++j)
                v[j] += Rat(xi[i]) * flat.basis_in_old[i][j];
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Rank 2, even, negative definite, determinant 3 pins the lattice A2(-1).
inline bool is_a2_minus1(const Lattice& lat) {
    if (flatten(lat).lat.rank() != 2) return false;
    if (!is_even(lat)) return false;
    if (!is_negative_definite(signature(lat))) return false;
    return det(lat) == 3;
}

// --- K3 embeddability ------------------------------------------------------

struct EmbedsVerdict {
    enum class Kind { yes_sufficient, unknown } kind;
    std::string reason;
};

// One-sided sufficient criterion: an even hyperbolic lattice of rank <= 12
// always arises inside the Neron-Severi lattice of some projective K3.
// Anything outside that window is reported unknown, never guessed.
inline EmbedsVerdict embeds_in_k3_lattice(const Lattice& lat) {
    if (!is_even(lat))
        return {EmbedsVerdict::Kind::unknown,
                "lattice is not even; criterion does not apply"};
    const Signature sig = signature(lat);
    if (sig.pos != 1 || sig.zero != 0)
        return {EmbedsVerdict::Kind::unknown,
                "criterion needs signature (1, rank-1), got " + str(sig)};
    if (lat.rank() > 12)
        return {EmbedsVerdict::Kind::unknown,
                "rank " + std::to_string(lat.rank()) +
                    " exceeds the rank-12 window of the sufficient criterion"};
    return {EmbedsVerdict::Kind::yes_sufficient,
            "even hyperbolic of rank <= 12"};
}

}  // namespace k3cover
