#pragma once

// Exact signature of a symmetric rational matrix by congruence
// diagonalization (simultaneous row/column operations preserve inertia, so
// counting pivot signs gives the signature by Sylvester's law).

#include "k3cover/matrix.hpp"

namespace k3cover {

struct Signature {
    int pos = 0, neg = 0, zero = 0;
    int rank() const { return pos + neg; }
    bool operator==(const Signature&) const = default;
};

inline std::string str(const Signature& s) {
    std::ostringstream oss;
    oss << "(" << s.pos << "," << s.neg;
    if (s.zero) oss << ";" << s.zero << " null";
    oss << ")";
    return oss.str();
}

inline Signature signature_of(QMat a) {
    K3_CHECK(is_symmetric(a), "signature requires a symmetric matrix");
    const std::size_t n = a.rows;
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (a.at(k, k) == 0) {
            // Prefer swapping in a nonzero diagonal entry.
            std::size_t j = k + 1;
            for (; j < n; ++j)
                if (a.at(j, j) != 0) break;
            if (j < n) {
                a.swap_rows(k, j);
                a.swap_cols(k, j);
            } else {
                // All remaining diagonal entries vanish; use e_k += e_j on a
                // nonzero off-diagonal to create 2*a(k,j) on the diagonal.
                for (j = k + 1; j < n; ++j)
                    if (a.at(k, j) != 0) break;
                if (j == n) {
                    ++sig.zero;  // row k is zero in the active block
                    continue;
                }
                for (std::size_t c = 0; c < n; ++c) a.at(k, c) += a.at(j, c);
                for (std::size_t r = 0; r < n; ++r) a.at(r, k) += a.at(r, j);
            }
        }
        const Rat pivot = a.at(k, k);
        K3_ASSERT(pivot != 0, "lost pivot during diagonalization");
        if (pivot > 0)
            ++sig.pos;
        else
            ++sig.neg;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            const Rat f = a.at(i, k) / pivot;
            // Congruence step E A E^T with E = I - f e_i e_k^T: subtract
            // f*(row k) from row i, then f*(current column k) from column i.
            for (std::size_t c = k; c < n; ++c) a.at(i, c) -= f * a.at(k, c);
            for (std::size_t r = k; r < n; ++r) a.at(r, i) -= f * a.at(r, k);
        }
    }
    return sig;
}

inline Signature signature_of(const IMat& a) { return signature_of(to_rational(a)); }

inline bool is_negative_definite(const Signature& s) {
    return s.pos == 0 && s.zero == 0;
}

}  // namespace k3cover
