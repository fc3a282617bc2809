#pragma once

// Dense matrices over exact scalar types.  Sizes here are tiny (Neron-Severi
// ranks, at most ~22), so everything is plain row-major storage and O(n^3)
// algorithms without pivot heuristics beyond exactness needs.

#include "k3cover/basics.hpp"

#include <cstddef>
#include <initializer_list>

namespace k3cover {

template <class T>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    Mat(std::initializer_list<std::initializer_list<T>> rows_init) {
        rows = rows_init.size();
        cols = rows ? rows_init.begin()->size() : 0;
        a.reserve(rows * cols);
        for (const auto& r : rows_init) {
            K3_ASSERT(r.size() == cols, "ragged initializer");
            for (const auto& x : r) a.push_back(x);
        }
    }

    T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols; ++k) std::swap(at(i, k), at(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows; ++k) std::swap(at(k, i), at(k, j));
    }
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;
template <class T>
using Vec = std::vector<T>;
using IVec = Vec<Int>;
using QVec = Vec<Rat>;

template <class T>
Mat<T> transpose(const Mat<T>& m) {
    Mat<T> t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

template <class T>
Mat<T> mul(const Mat<T>& x, const Mat<T>& y) {
    K3_ASSERT(x.cols == y.rows, "matrix shape mismatch in mul");
    Mat<T> z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const T& xik = x.at(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

template <class T>
bool is_symmetric(const Mat<T>& m) {
    if (m.rows != m.cols) return false;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = i + 1; j < m.cols; ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

inline QMat to_rational(const IMat& m) {
    QMat q(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
    return q;
}

// v^T * G * w for a symmetric pairing matrix G.
template <class T>
T pair_with(const Mat<T>& g, const Vec<T>& v, const Vec<T>& w) {
    K3_ASSERT(v.size() == g.rows && w.size() == g.cols, "pairing size mismatch");
    T out{};
    for (std::size_t i = 0; i < g.rows; ++i) {
        if (v[i] == 0) continue;
        T row{};
        for (std::size_t j = 0; j < g.cols; ++j)
            if (w[j] != 0) row += g.at(i, j) * w[j];
        out += v[i] * row;
    }
    return out;
}

inline Rat pair_rational(const IMat& g, const QVec& v, const QVec& w) {
    K3_ASSERT(v.size() == g.rows && w.size() == g.cols, "pairing size mismatch");
    Rat out;
    for (std::size_t i = 0; i < g.rows; ++i) {
        if (v[i] == 0) continue;
        Rat row;
        for (std::size_t j = 0; j < g.cols; ++j)
            if (w[j] != 0) row += Rat(g.at(i, j)) * w[j];
        out += v[i] * row;
    }
    return out;
}

template <class T>
Vec<T> add(const Vec<T>& x, const Vec<T>& y) {
    K3_ASSERT(x.size() == y.size(), "vector size mismatch");
    Vec<T> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

template <class T>
Vec<T> scale(const T& c, const Vec<T>& x) {
    Vec<T> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = c * x[i];
    return z;
}

template <class T>
bool is_zero(const Vec<T>& x) {
    for (const auto& v : x)
        if (v != 0) return false;
    return true;
}

}  // namespace k3cover
