#pragma once

// Row-style Hermite normal form over the integers, plus Z-span membership.
// Used to flatten glued lattices (integral span + rational glue vectors) to an
// honest integral basis and to test whether a rational class lies in a lattice.

#include "k3cover/matrix.hpp"

#include <algorithm>

namespace k3cover {

// Returns H whose rows Z-span the same module as the rows of m, with zero rows
// dropped, positive pivots in staircase position, and entries above each pivot
// reduced into [0, pivot).
inline IMat hnf_rows(IMat m) {
    const std::size_t rows = m.rows, cols = m.cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Fold rows r.. until at most one has a nonzero entry in column c.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (m.at(i, c) == 0) continue;
                if (best == rows ||
                    abs(m.at(i, c)) < abs(m.at(best, c)))
                    best = i;
            }
            if (best == rows) break;  // column is zero below r
            m.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m.at(i, c) == 0) continue;
                Int q = m.at(i, c) / m.at(r, c);  // truncated division is fine:
                // remainder shrinks |entry| each pass, so the loop terminates.
                for (std::size_t k = c; k < cols; ++k)
                    m.at(i, k) -= q * m.at(r, k);
                if (m.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m.at(r, c) == 0) continue;
        if (m.at(r, c) < 0)
            for (std::size_t k = c; k < cols; ++k) m.at(r, k) = -m.at(r, k);
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Int q = m.at(i, c) / m.at(r, c);
            if (m.at(i, c) - q * m.at(r, c) < 0) q -= 1;
            if (q != 0)
                for (std::size_t k = c; k < cols; ++k)
                    m.at(i, k) -= q * m.at(r, k);
        }
        ++r;
    }
    IMat h(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < cols; ++k) h.at(i, k) = m.at(i, k);
    return h;
}

// Does integer vector v lie in the Z-span of the rows of the HNF matrix h?
inline bool in_hnf_span(const IMat& h, IVec v) {
    K3_ASSERT(v.size() == h.cols, "membership size mismatch");
    std::size_t row = 0;
    for (std::size_t c = 0; c < h.cols; ++c) {
        const bool have_pivot = row < h.rows && h.at(row, c) != 0;
        if (v[c] == 0) {
            if (have_pivot) ++row;
            continue;
        }
        if (!have_pivot) return false;
        if (v[c] % h.at(row, c) != 0) return false;
        Int q = v[c] / h.at(row, c);
        for (std::size_t k = c; k < h.cols; ++k) v[k] -= q * h.at(row, k);
        ++row;
    }
    return is_zero(v);
}

}  // namespace k3cover
