#pragma once

// Independent reference implementations used only by the tests.  Each one
// recomputes a quantity the library also computes, by a different route:
//   * signature via the characteristic polynomial and Descartes' rule,
//   * invariant factors via gcds of all k x k minors,
//   * root counts via plain box enumeration.
// None of them share code with the library beyond the matrix container.

#include <functional>
#include <random>
#include <vector>

#include "k3cover/lattice.hpp"

namespace oracles {

using namespace k3cover;

// Deterministic RNG for all randomized tests.
inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed1234u);
    return gen;
}

inline int rand_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng());
}

inline IMat random_symmetric(std::size_t n, int bound) {
    IMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Int v = rand_int(-bound, bound);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

// Determinant by Laplace expansion along the first row (fine for n <= 6).
inline Int laplace_det(const IMat& m, std::vector<std::size_t> rows,
                       std::vector<std::size_t> cols) {
    const std::size_t n = rows.size();
    if (n == 0) return 1;
    if (n == 1) return m.at(rows[0], cols[0]);
    Int acc = 0;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(rows[0], cols[j]) == 0) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        Int term = m.at(rows[0], cols[j]) * laplace_det(m, sub_rows, sub_cols);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

inline Int laplace_det(const IMat& m) {
    std::vector<std::size_t> idx(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) idx[i] = i;
    return laplace_det(m, idx, idx);
}

// All k-element subsets of {0, ..., n-1}.
inline void subsets(std::size_t n, std::size_t k,
                    const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> pick(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                            std::size_t depth) {
        if (depth == k) {
            f(pick);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

// Signature of a symmetric integer matrix from its characteristic polynomial:
// the coefficient of x^(n-k) is (-1)^k e_k with e_k the sum of principal
// k x k minors, all roots are real, and Descartes' rule is exact when every
// root is real.
inline Signature char_poly_signature(const IMat& a) {
    const std::size_t n = a.rows;
    std::vector<Int> e(n + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Int sum = 0;
        subsets(n, k, [&](const std::vector<std::size_t>& idx) {
            sum += laplace_det(a, idx, idx);
        });
        e[k] = sum;
    }
    // p(x) = sum_k (-1)^k e_k x^(n-k); count sign variations of p(x) and
    // p(-x) over the nonzero coefficients.
    auto variations = [&](bool flip) {
        int var = 0, last = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            Int coeff = (k % 2 == 0) ? e[k] : -e[k];
            if (flip && (n - k) % 2 == 1) coeff = -coeff;
            if (coeff == 0) continue;
            int s = coeff > 0 ? 1 : -1;
            if (last != 0 && s != last) ++var;
            last = s;
        }
        return var;
    };
    Signature sig;
    sig.pos = variations(false);
    sig.neg = variations(true);
    sig.zero = static_cast<int>(n) - sig.pos - sig.neg;
    return sig;
}

// Invariant factors via determinantal divisors: d_k = gcd of all k x k
// minors, s_k = d_k / d_(k-1).
inline IVec determinantal_divisors(const IMat& m) {
    const std::size_t n = std::min(m.rows, m.cols);
    IVec out;
    Int prev = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Int g = 0;
        subsets(m.rows, k, [&](const std::vector<std::size_t>& rows) {
            subsets(m.cols, k, [&](const std::vector<std::size_t>& cols) {
                g = boost::multiprecision::gcd(g, laplace_det(m, rows, cols));
            });
        });
        if (g == 0) break;  // rank reached
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// Count lattice vectors of a given norm by searching an integer coordinate
// box around the origin (coordinates taken in the flattened overlattice
// basis).  Only usable when the box provably contains all solutions; for
// the negative definite test lattices used here a small box suffices.
inline std::size_t count_roots_box(const Lattice& lat, const Int& target, int box) {
    Lattice flat = flatten(lat).lat;
    const std::size_t n = flat.gram.rows;
    std::vector<int> c(n, -box);
    std::size_t count = 0;
    while (true) {
        QVec v(n);
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = c[i];
            if (c[i] != 0) zero = false;
        }
        if (!zero && norm(flat, v) == Rat(target)) ++count;
        std::size_t i = 0;
        while (i < n && c[i] == box) c[i++] = -box;
        if (i == n) break;
        ++c[i];
    }
    return count;
}

}  // namespace oracles
