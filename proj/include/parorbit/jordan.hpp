#pragma once

#include <algorithm>

#include "parorbit/errors.hpp"
#include "parorbit/matrix.hpp"

namespace parorbit {

// Incremental row-echelon span, for membership tests and complements.
template <class F>
struct EchelonSpan {
    F field;
    int n;
    std::vector<std::vector<typename F::Elem>> rows;  // reduced, one pivot each
    std::vector<int> pivots;

    EchelonSpan(F f, int ambient) : field(f), n(ambient) {}

    int dim() const { return static_cast<int>(rows.size()); }

    // reduce v against the span; returns the residual
    std::vector<typename F::Elem> reduce(std::vector<typename F::Elem> v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            const auto& c = v[pivots[r]];
            if (field.is_zero(c)) continue;
            auto coef = c;
            for (int j = 0; j < n; ++j) v[j] = field.sub(v[j], field.mul(coef, rows[r][j]));
        }
        return v;
    }

    bool contains(const std::vector<typename F::Elem>& v) const {
        auto r = reduce(v);
        for (const auto& x : r)
            if (!field.is_zero(x)) return false;
        return true;
    }

    // returns true if v enlarged the span
    bool add(std::vector<typename F::Elem> v) {
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < n; ++j)
            if (!field.is_zero(v[j])) { p = j; break; }
        if (p < 0) return false;
        auto d = field.inv(v[p]);
        for (int j = 0; j < n; ++j) v[j] = field.mul(v[j], d);
        // keep rows reduced against the new one
        for (size_t r = 0; r < rows.size(); ++r) {
            auto c = rows[r][p];
            if (field.is_zero(c)) continue;
            for (int j = 0; j < n; ++j)
                rows[r][j] = field.sub(rows[r][j], field.mul(c, v[j]));
        }
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

template <class F>
std::vector<typename F::Elem> column_of(const Mat<F>& m, int j) {
    std::vector<typename F::Elem> v(m.rows, m.field.zero());
    for (int i = 0; i < m.rows; ++i) v[i] = m.at(i, j);
    return v;
}

template <class F>
std::vector<typename F::Elem> mat_apply(const Mat<F>& m, const std::vector<typename F::Elem>& v) {
    const F& f = m.field;
    std::vector<typename F::Elem> r(m.rows, f.zero());
    for (int i = 0; i < m.rows; ++i) {
        auto acc = f.zero();
        for (int j = 0; j < m.cols; ++j) acc = f.add(acc, f.mul(m.at(i, j), v[j]));
        r[i] = acc;
    }
    return r;
}

template <class F>
struct JordanBasis {
    Mat<F> basis;                 // columns are the chain vectors
    std::vector<int> partition;   // chain lengths, non-increasing
    // column index of v_{i,j}: chain i (0-based), depth j (1-based, f v_j = v_{j-1})
    int col(int chain, int j) const {
        int off = 0;
        for (int c = 0; c < chain; ++c) off += partition[c];
        return off + j - 1;
    }
};

// Deterministic Jordan chain basis of a nilpotent matrix.
//
// Chain tops of depth s are chosen greedily, in the canonical order induced by
// the reduced-echelon basis of ker(m^s), skipping ker(m^{s-1}) + m * (higher
// chains). Chains are sorted by length, ties by leading coordinate of the top.
template <class F>
JordanBasis<F> nilpotent_jordan_basis(const Mat<F>& m) {
    if (m.rows != m.cols) throw SizeMismatch("nilpotent_jordan_basis: not square");
    const F& f = m.field;
    const int n = m.rows;
    if (n == 0) return {Mat<F>(f, 0, 0), {}};

    // kernel flag K_s = ker(m^s)
    std::vector<Mat<F>> kflag;  // echelon row bases
    kflag.push_back(Mat<F>(f, 0, n));
    Mat<F> p = Mat<F>::identity(f, n);
    int depth = 0;
    while (depth < n) {
        p = p * m;
        Mat<F> ker = kernel_basis(p);  // note: rows are kernel vectors of m^(depth+1)
        ++depth;
        kflag.push_back(ker);
        if (ker.rows == n) break;
    }
    if (kflag.back().rows != n) throw NotNilpotent("matrix is not nilpotent");
    const int d = depth;

    struct Chain {
        std::vector<std::vector<typename F::Elem>> vecs;  // vecs[j-1] = v_{i,j}
    };
    std::vector<Chain> chains;

    EchelonSpan<F> used(f, n);  // span of all chain vectors selected so far
    for (int s = d; s >= 1; --s) {
        // candidates: echelon basis rows of K_s, skipped if already in
        // K_{s-1} + m * (tops of depth > s)   (== `used` + K_{s-1} here)
        EchelonSpan<F> blocked(f, n);
        for (int r = 0; r < kflag[s - 1].rows; ++r) {
            std::vector<typename F::Elem> row(n, f.zero());
            for (int j = 0; j < n; ++j) row[j] = kflag[s - 1].at(r, j);
            blocked.add(row);
        }
        for (const auto& c : chains) {
            // m * (chain vectors) are chain vectors again except at depth 1;
            // the image of the whole chain is spanned by vecs[0..len-2]
            for (size_t j = 0; j + 1 < c.vecs.size(); ++j) blocked.add(c.vecs[j]);
        }
        for (int r = 0; r < kflag[s].rows; ++r) {
            std::vector<typename F::Elem> top(n, f.zero());
            for (int j = 0; j < n; ++j) top[j] = kflag[s].at(r, j);
            if (blocked.contains(top)) continue;
            blocked.add(top);
            Chain c;
            c.vecs.assign(s, std::vector<typename F::Elem>(n, f.zero()));
            c.vecs[s - 1] = top;
            for (int j = s - 1; j >= 1; --j) c.vecs[j - 1] = mat_apply(m, c.vecs[j]);
            for (const auto& v : c.vecs) used.add(v);
            chains.push_back(std::move(c));
        }
    }

    std::stable_sort(chains.begin(), chains.end(), [&](const Chain& x, const Chain& y) {
        if (x.vecs.size() != y.vecs.size()) return x.vecs.size() > y.vecs.size();
        const auto& a = x.vecs.back();
        const auto& b = y.vecs.back();
        for (int j = 0; j < n; ++j) {
            bool az = f.is_zero(a[j]), bz = f.is_zero(b[j]);
            if (az != bz) return !az;  // earlier leading coordinate first
        }
        return false;
    });

    JordanBasis<F> out{Mat<F>(f, n, n), {}};
    int col = 0;
    for (const auto& c : chains) {
        out.partition.push_back(static_cast<int>(c.vecs.size()));
        for (const auto& v : c.vecs) {
            for (int i = 0; i < n; ++i) out.basis.at(i, col) = v[i];
            ++col;
        }
    }
    if (col != n) throw std::logic_error("jordan: chain vectors do not span");
    return out;
}

// The nilpotent Jordan matrix of a partition: ones on the superdiagonal of
// each block, J e_j = e_{j-1}.
template <class F>
Mat<F> jordan_matrix(F f, const std::vector<int>& partition) {
    int n = 0;
    for (int p : partition) n += p;
    Mat<F> m(f, n, n);
    int off = 0;
    for (int p : partition) {
        for (int j = 1; j < p; ++j) m.at(off + j - 1, off + j) = f.one();
        off += p;
    }
    return m;
}

// partition of n as the conjugate of the kernel-dimension increments
template <class F>
std::vector<int> nilpotent_type(const Mat<F>& m) {
    return nilpotent_jordan_basis(m).partition;
}

}  // namespace parorbit
