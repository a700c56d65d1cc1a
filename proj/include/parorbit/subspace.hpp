#pragma once

#include "parorbit/matrix.hpp"

namespace parorbit {

// Subspace of K^n, stored as a reduced-echelon row basis, which is unique per
// subspace. Equality is therefore entrywise comparison.
template <class F>
struct Subspace {
    int ambient_dim;
    Mat<F> basis;  // dim x ambient_dim, reduced echelon, full row rank

    static Subspace zero(F f, int n) { return {n, Mat<F>(f, 0, n)}; }

    static Subspace full(F f, int n) { return {n, Mat<F>::identity(f, n)}; }

    static Subspace span_rows(const Mat<F>& rows) {
        Mat<F> r = rows;
        int rk = rref_inplace(r);
        return {rows.cols, r.submatrix(0, 0, rk, rows.cols)};
    }

    int dim() const { return basis.rows; }

    bool contains(const Mat<F>& row_vec) const {
        Mat<F> aug = vstack(basis.field, {basis, row_vec}, ambient_dim);
        return rank(aug) == dim();
    }

    bool operator==(const Subspace& o) const {
        return ambient_dim == o.ambient_dim && basis == o.basis;
    }

    Subspace sum(const Subspace& o) const {
        return span_rows(vstack(basis.field, {basis, o.basis}, ambient_dim));
    }

    // Intersection via kernel of the stacked transposes.
    Subspace intersect(const Subspace& o) const {
        const F& f = basis.field;
        // v in both spans  <=>  v = x^T basis = y^T o.basis;
        // solve [basis^T | -o.basis^T] (x;y) = 0 and read off v.
        Mat<F> lhs(f, ambient_dim, dim() + o.dim());
        lhs.paste(0, 0, basis.transpose());
        Mat<F> nego = o.basis.transpose();
        for (auto& x : nego.a) x = f.neg(x);
        lhs.paste(0, dim(), nego);
        Mat<F> ker = kernel_basis(lhs);
        Mat<F> vecs(f, ker.rows, ambient_dim);
        for (int i = 0; i < ker.rows; ++i)
            for (int j = 0; j < ambient_dim; ++j) {
                auto acc = f.zero();
                for (int k = 0; k < dim(); ++k)
                    acc = f.add(acc, f.mul(ker.at(i, k), basis.at(k, j)));
                vecs.at(i, j) = acc;
            }
        return span_rows(vecs);
    }
};

}  // namespace parorbit
