#pragma once

// Stock lattices used across tests and the scenario catalog: A2(-1), the two
// even-set overlattices of sums of (-2)-classes, and the rank-16/15 lattices
// built from them together with a polarization class.

#include "k3cover/lattice.hpp"

namespace k3cover {
namespace lattices {

inline Lattice a2_minus1() {
    return make_lattice({"e1", "e2"}, IMat{{Int(-2), Int(1)}, {Int(1), Int(-2)}});
}

// k disjoint (-2)-classes N1..Nk (optionally prefixed), Gram -2*Id.
inline Lattice a1_sum(std::size_t k, const std::string& prefix = "N") {
    std::vector<std::string> names;
    IMat gram(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        names.push_back(prefix + std::to_string(i + 1));
        gram.at(i, i) = -2;
    }
    return make_lattice(std::move(names), std::move(gram));
}

// Rank-1 lattice <d> with a named generator.
inline Lattice span_of_square(const std::string& name, Int d) {
    return make_lattice({name}, IMat{{std::move(d)}});
}

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
    std::vector<std::string> names = a.names;
    names.insert(names.end(), b.names.begin(), b.names.end());
    const std::size_t n = a.rank(), m = b.rank();
    IMat gram(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram.at(i, j) = a.gram.at(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) gram.at(n + i, n + j) = b.gram.at(i, j);
    Lattice out = make_lattice(std::move(names), std::move(gram));
    for (const auto& g : a.glue) {
        QVec v(n + m);
        for (std::size_t j = 0; j < n; ++j) v[j] = g[j];
        out.glue.push_back(std::move(v));
    }
    for (const auto& g : b.glue) {
        QVec v(n + m);
        for (std::size_t j = 0; j < m; ++j) v[n + j] = g[j];
        out.glue.push_back(std::move(v));
    }
    return out;
}

namespace detail {
// Glue vector (sum of the named classes) / divisor.
inline QVec half_sum(const Lattice& lat, const std::vector<std::string>& names,
                     Int divisor = 2) {
    QVec v(lat.rank());
    for (const auto& n : names) v[lat.index_of(n)] = Rat(1, divisor);
    return v;
}
}  // namespace detail

// The even-set overlattice of 15 disjoint (-2)-classes whose double cover
// data is four independent half-sums (discriminant order 2^7).
inline Lattice even_set_15() {
    Lattice lat = a1_sum(15);
    auto v1 = detail::half_sum(lat, {"N1", "N2", "N3", "N4", "N5", "N6", "N7", "N8"});
    auto v2 = detail::half_sum(lat, {"N1", "N2", "N3", "N4", "N9", "N10", "N11", "N12"});
    auto v3 = detail::half_sum(lat, {"N1", "N2", "N5", "N6", "N9", "N10", "N13", "N14"});
    auto v4 = detail::half_sum(lat, {"N1", "N3", "N5", "N7", "N9", "N11", "N13", "N15"});
    lat = adjoin_glue(lat, v1, "v1");
    lat = adjoin_glue(lat, v2, "v2");
    lat = adjoin_glue(lat, v3, "v3");
    lat = adjoin_glue(lat, v4, "v4");
    return lat;
}

// The analogous overlattice of 14 disjoint (-2)-classes with three half-sums
// (discriminant order 2^8).
inline Lattice even_set_14() {
    Lattice lat = a1_sum(14);
    auto v1 = detail::half_sum(lat, {"N1", "N2", "N3", "N4", "N5", "N6", "N7", "N8"});
    auto v2 = detail::half_sum(lat, {"N1", "N2", "N3", "N4", "N9", "N10", "N11", "N12"});
    auto v3 = detail::half_sum(lat, {"N1", "N2", "N5", "N6", "N9", "N10", "N13", "N14"});
    lat = adjoin_glue(lat, v1, "v1");
    lat = adjoin_glue(lat, v2, "v2");
    lat = adjoin_glue(lat, v3, "v3");
    return lat;
}

// <6> + even_set_15 (rank 16, det 768), and its index-2 overlattice obtained
// by adjoining (H + N1 + ... + N15)/2 (det 192).
inline Lattice rank16_base() {
    return direct_sum(span_of_square("H", 6), even_set_15());
}

inline Lattice rank16_prime() {
    Lattice lat = rank16_base();
    QVec v(lat.rank(), Rat(1, 2));  // (H + sum N_i)/2
    return adjoin_glue(lat, v, "(H+sumN)/2");
}

// <4> + even_set_14 (rank 15, det 1024), and its index-2 overlattice obtained
// by adjoining (H - N1 - ... - N14)/2 (det 256).
inline Lattice rank15_base() {
    return direct_sum(span_of_square("H", 4), even_set_14());
}

inline Lattice rank15_prime() {
    Lattice lat = rank15_base();
    QVec v(lat.rank(), Rat(-1, 2));
    v[0] = Rat(1, 2);
    return adjoin_glue(lat, v, "(H-sumN)/2");
}

}  // namespace lattices
}  // namespace k3cover
