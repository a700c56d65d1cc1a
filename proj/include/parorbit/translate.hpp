#pragma once

#include "parorbit/jordan.hpp"
#include "parorbit/parabolic.hpp"
#include "parorbit/quiver.hpp"

namespace parorbit {

// An x-nilpotent element N of the parabolic corresponds to the Qp
// representation with vertex spaces K^{d_i}, loop i the leading d_i x d_i
// corner of N and every connecting arrow the canonical embedding. Conjugate
// matrices give isomorphic representations and conversely.
template <class F>
Rep<F> matrix_to_rep(const ParabolicShape& shape, const Mat<F>& N, int x) {
    if (!in_nilpotent_cone(shape, N, x))
        throw NotInCone("matrix_to_rep: matrix outside the x-nilpotent cone of the parabolic");
    const F& f = N.field;
    QuiverPreset q = QuiverPreset::qp(shape.p(), x);
    Rep<F> r(q, f, shape.dims);
    for (int i = 0; i + 1 < shape.p(); ++i) {  // canonical embeddings
        Mat<F> e(f, shape.dims[i + 1], shape.dims[i]);
        for (int k = 0; k < shape.dims[i]; ++k) e.at(k, k) = f.one();
        r.map(i) = std::move(e);
    }
    for (int i = 0; i < shape.p(); ++i)
        r.map(shape.p() - 1 + i) = N.submatrix(0, 0, shape.dims[i], shape.dims[i]);
    r.validate();
    return r;
}

// Inverse direction: re-choose bases so each connecting arrow becomes the
// canonical embedding; the top loop in the final basis is the matrix. Only
// representations with injective connecting arrows qualify.
template <class F>
std::pair<ParabolicShape, Mat<F>> rep_to_matrix(const Rep<F>& r) {
    if (r.preset.kind != QuiverPreset::Kind::Qp)
        throw PresetMismatch("rep_to_matrix: needs a Qp representation");
    const F& f = r.field;
    const int p = r.preset.p;
    std::vector<int> blocks;
    for (int i = 0; i < p; ++i) {
        int prev = i == 0 ? 0 : r.dims[i - 1];
        if (r.dims[i] - prev < 1)
            throw NotInjectiveArrows("rep_to_matrix: dimension vector not strictly increasing");
        blocks.push_back(r.dims[i] - prev);
    }
    ParabolicShape shape{BlockVector(blocks)};
    const int n = r.dims[p - 1];

    // T_i : K^{d_i} -> M_i with  arrow_i T_i = T_{i+1} (canonical embedding)
    std::vector<Mat<F>> T;
    T.push_back(Mat<F>::identity(f, r.dims[0]));
    for (int i = 1; i < p; ++i) {
        const Mat<F>& A = r.map(i - 1);  // arrow i-1 -> i
        if (rank(A) != r.dims[i - 1])
            throw NotInjectiveArrows("rep_to_matrix: arrow " + std::to_string(i) + " not injective");
        Mat<F> img = A * T[i - 1];  // d_i x d_{i-1}
        // extend the image columns to a basis with echelon complements
        EchelonSpan<F> span(f, r.dims[i]);
        for (int c = 0; c < img.cols; ++c) span.add(column_of(img, c));
        Mat<F> Ti(f, r.dims[i], r.dims[i]);
        Ti.paste(0, 0, img);
        int col = img.cols;
        for (int s = 0; s < r.dims[i] && col < r.dims[i]; ++s) {
            std::vector<typename F::Elem> e(r.dims[i], f.zero());
            e[s] = f.one();
            if (!span.add(e)) continue;
            for (int row = 0; row < r.dims[i]; ++row) Ti.at(row, col) = e[row];
            ++col;
        }
        if (col != r.dims[i]) throw std::logic_error("rep_to_matrix: basis completion failed");
        T.push_back(std::move(Ti));
    }
    Mat<F> Tinv(f, 0, 0);
    if (!invert(T[p - 1], Tinv)) throw std::logic_error("rep_to_matrix: singular basis");
    Mat<F> N = Tinv * r.map(p - 1 + p - 1) * T[p - 1];
    if (!in_nilpotent_cone(shape, N, r.preset.x))
        throw std::logic_error("rep_to_matrix: result escaped the cone");
    return {shape, N};
}

// Levi translations. A Levi-conjugation orbit on the nilradical (resp. the
// nilpotent cone) corresponds to a representation of the complete acyclic
// quiver on p vertices (resp. with loops added). Arrow (i -> j) carries the
// transposed (i,j) block; loops carry transposed diagonal blocks. The
// transpose intertwines block conjugation with base change composed with the
// group automorphism g -> g^{-T}, so orbits map to isomorphism classes
// bijectively.
template <class F>
Rep<F> matrix_to_levi_rep(const ParabolicShape& shape, const Mat<F>& N, bool with_loops, int x) {
    const F& f = N.field;
    QuiverPreset q = with_loops ? QuiverPreset::levi_cone(shape.p(), x)
                                : QuiverPreset::levi_nilradical(shape.p());
    Rep<F> r(q, f, shape.bv.blocks);
    int e = 0;
    for (int i = 0; i < shape.p(); ++i)
        for (int j = i + 1; j < shape.p(); ++j) {
            int r0 = i == 0 ? 0 : shape.dims[i - 1];
            int c0 = j == 0 ? 0 : shape.dims[j - 1];
            r.map(e++) =
                N.submatrix(r0, c0, shape.bv.blocks[i], shape.bv.blocks[j]).transpose();
        }
    if (with_loops)
        for (int i = 0; i < shape.p(); ++i) {
            int r0 = i == 0 ? 0 : shape.dims[i - 1];
            r.map(e++) =
                N.submatrix(r0, r0, shape.bv.blocks[i], shape.bv.blocks[i]).transpose();
        }
    r.validate();
    return r;
}

}  // namespace parorbit
