#pragma once

// Smith normal form over the integers: invariant factors d1 | d2 | ... | dr.
// Feeds discriminant-group computations; matrices are small (rank <= ~22).

#include "k3cover/matrix.hpp"

namespace k3cover {

inline IVec invariant_factors(IMat m) {
    IVec out;
    std::size_t t = 0;
    const std::size_t n = std::min(m.rows, m.cols);
    while (t < n) {
        // Locate the entry of least nonzero magnitude in the trailing block.
        std::size_t pi = m.rows, pj = m.cols;
        for (std::size_t i = t; i < m.rows; ++i)
            for (std::size_t j = t; j < m.cols; ++j) {
                if (m.at(i, j) == 0) continue;
                if (pi == m.rows || abs(m.at(i, j)) < abs(m.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m.rows) break;  // trailing block is zero
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);

        bool dirty = false;
        for (std::size_t i = t + 1; i < m.rows; ++i) {
            if (m.at(i, t) == 0) continue;
            Int q = m.at(i, t) / m.at(t, t);
            for (std::size_t k = t; k < m.cols; ++k) m.at(i, k) -= q * m.at(t, k);
            if (m.at(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < m.cols; ++j) {
            if (m.at(t, j) == 0) continue;
            Int q = m.at(t, j) / m.at(t, t);
            for (std::size_t k = t; k < m.rows; ++k) m.at(k, j) -= q * m.at(k, t);
            if (m.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;  // smaller remainders appeared; re-pick pivot

        // Row and column t are clear. Enforce divisibility of the rest of the
        // block by the pivot; if violated, fold the offending row in and redo.
        bool divides_all = true;
        for (std::size_t i = t + 1; i < m.rows && divides_all; ++i)
            for (std::size_t j = t + 1; j < m.cols && divides_all; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    for (std::size_t k = t; k < m.cols; ++k)
                        m.at(t, k) += m.at(i, k);
                    divides_all = false;
                }
        if (!divides_all) continue;

        if (m.at(t, t) < 0) m.at(t, t) = -m.at(t, t);
        out.push_back(m.at(t, t));
        ++t;
    }
    return out;
}

}  // namespace k3cover
