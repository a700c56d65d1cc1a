#pragma once

#include <cassert>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "parorbit/field.hpp"

namespace parorbit {

struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Dense matrix over an exact field. Row-major.
template <class F>
struct Mat {
    using Elem = typename F::Elem;

    F field;
    int rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat(F f, int r, int c) : field(f), rows(r), cols(c), a(static_cast<size_t>(r) * c, f.zero()) {}

    Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Elem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(F f, int n) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    static Mat from_ints(F f, int r, int c, std::initializer_list<int64_t> vals) {
        Mat m(f, r, c);
        auto it = vals.begin();
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = f.from_int(*it++);
        return m;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!field.is_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols) return false;
        for (size_t i = 0; i < x.a.size(); ++i)
            if (!x.field.eq(x.a[i], y.a[i])) return false;
        return true;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols) throw SizeMismatch("matrix add shape");
        Mat r = x;
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.field.add(x.a[i], y.a[i]);
        return r;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols) throw SizeMismatch("matrix sub shape");
        Mat r = x;
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.field.sub(x.a[i], y.a[i]);
        return r;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows) throw SizeMismatch("matrix mul shape");
        Mat r(x.field, x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const auto& v = x.at(i, k);
                if (x.field.is_zero(v)) continue;
                for (int j = 0; j < y.cols; ++j)
                    r.at(i, j) = x.field.add(r.at(i, j), x.field.mul(v, y.at(k, j)));
            }
        return r;
    }

    Mat scaled(const Elem& c) const {
        Mat r = *this;
        for (auto& x : r.a) x = field.mul(x, c);
        return r;
    }

    Mat transpose() const {
        Mat r(field, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Mat pow(int e) const {
        assert(rows == cols);
        Mat r = identity(field, rows), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    Mat submatrix(int r0, int c0, int r, int c) const {
        Mat m(field, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = at(r0 + i, c0 + j);
        return m;
    }

    void paste(int r0, int c0, const Mat& m) {
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) at(r0 + i, c0 + j) = m.at(i, j);
    }
};

// In-place reduced row echelon form; returns rank. Optionally records pivot columns.
template <class F>
int rref_inplace(Mat<F>& m, std::vector<int>* pivots = nullptr) {
    const F& f = m.field;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, col))) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        auto d = f.inv(m.at(rank, col));
        for (int j = col; j < m.cols; ++j) m.at(rank, j) = f.mul(m.at(rank, j), d);
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank) continue;
            auto c = m.at(i, col);
            if (f.is_zero(c)) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(rank, j)));
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

template <class F>
std::pair<Mat<F>, int> rref(const Mat<F>& m) {
    Mat<F> r = m;
    int rank = rref_inplace(r);
    return {r, rank};
}

template <class F>
int rank(const Mat<F>& m) {
    Mat<F> r = m;
    return rref_inplace(r);
}

// Basis of the right kernel {v : m v = 0}, rows of the result, in reduced
// echelon form (unique per subspace).
template <class F>
Mat<F> kernel_basis(const Mat<F>& m) {
    const F& f = m.field;
    Mat<F> r = m;
    std::vector<int> piv;
    rref_inplace(r, &piv);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    int nfree = m.cols - static_cast<int>(piv.size());
    Mat<F> ker(f, nfree, m.cols);
    int row = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_piv[c]) continue;
        ker.at(row, c) = f.one();
        for (size_t pi = 0; pi < piv.size(); ++pi)
            ker.at(row, piv[pi]) = f.neg(r.at(static_cast<int>(pi), c));
        ++row;
    }
    rref_inplace(ker);  // canonical form
    return ker;
}

// Solve m x = b for a single column b; returns false if inconsistent.
template <class F>
bool solve(const Mat<F>& m, const Mat<F>& b, Mat<F>& x) {
    if (b.rows != m.rows || b.cols != 1) throw SizeMismatch("solve shape");
    const F& f = m.field;
    Mat<F> aug(f, m.rows, m.cols + 1);
    aug.paste(0, 0, m);
    aug.paste(0, m.cols, b);
    std::vector<int> piv;
    rref_inplace(aug, &piv);
    for (int c : piv)
        if (c == m.cols) return false;
    x = Mat<F>(f, m.cols, 1);
    for (size_t i = 0; i < piv.size(); ++i) x.at(piv[i], 0) = aug.at(static_cast<int>(i), m.cols);
    return true;
}

template <class F>
bool invert(const Mat<F>& m, Mat<F>& out) {
    if (m.rows != m.cols) throw SizeMismatch("invert: not square");
    const F& f = m.field;
    Mat<F> aug(f, m.rows, 2 * m.cols);
    aug.paste(0, 0, m);
    aug.paste(0, m.cols, Mat<F>::identity(f, m.rows));
    int rk = rref_inplace(aug);
    if (rk != m.rows) return false;
    out = aug.submatrix(0, m.cols, m.rows, m.cols);
    return true;
}

template <class F>
bool is_invertible(const Mat<F>& m) {
    return m.rows == m.cols && rank(m) == m.rows;
}

template <class F>
typename F::Elem trace(const Mat<F>& m) {
    auto t = m.field.zero();
    for (int i = 0; i < m.rows; ++i) t = m.field.add(t, m.at(i, i));
    return t;
}

// Stack rows of several matrices with equal column count.
template <class F>
Mat<F> vstack(const F& f, const std::vector<Mat<F>>& parts, int cols) {
    int total = 0;
    for (const auto& p : parts) total += p.rows;
    Mat<F> r(f, total, cols);
    int row = 0;
    for (const auto& p : parts) {
        r.paste(row, 0, p);
        row += p.rows;
    }
    return r;
}

}  // namespace parorbit
