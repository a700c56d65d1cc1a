#pragma once

#include "parorbit/jordan.hpp"
#include "parorbit/quiver.hpp"
#include "parorbit/subspace.hpp"

namespace parorbit {

// Modules over the commuting grid that drive the Delta-filtration machinery.
// All four are 0/1-dimensional with identity maps on their support:
//   projective P(i,j): rows >= i, cols >= j      standard D(i,j): row i, cols >= j
//   costandard V(i,j): rows <= i, col j          tilting  T(i,j): rows <= i, cols >= j
enum class GridModule { projective, standard, costandard, tilting };

template <class F>
Rep<F> grid_module(const QuiverPreset& q, F f, GridModule kind, int i, int j) {
    if (q.kind != QuiverPreset::Kind::covering)
        throw PresetMismatch("grid_module: needs a covering preset");
    q.grid_vertex(i, j);  // range check
    auto in_support = [&](int k, int l) {
        switch (kind) {
            case GridModule::projective: return k >= i && l >= j;
            case GridModule::standard: return k == i && l >= j;
            case GridModule::costandard: return k <= i && l == j;
            case GridModule::tilting: return k <= i && l >= j;
        }
        return false;
    };
    std::vector<int> dims(q.num_vertices(), 0);
    for (int k = 1; k <= q.n_rows; ++k)
        for (int l = 1; l <= q.p; ++l)
            if (in_support(k, l)) dims[q.grid_vertex(k, l)] = 1;
    Rep<F> r(q, f, dims);
    for (int k = 1; k <= q.n_rows; ++k)
        for (int l = 1; l < q.p; ++l)
            if (in_support(k, l) && in_support(k, l + 1))
                r.map(q.grid_horizontal(k, l)).at(0, 0) = f.one();
    for (int k = 1; k < q.n_rows; ++k)
        for (int l = 1; l <= q.p; ++l)
            if (in_support(k, l) && in_support(k + 1, l))
                r.map(q.grid_vertical(k, l)).at(0, 0) = f.one();
    r.validate();
    return r;
}

template <class F>
bool horizontals_injective(const Rep<F>& r) {
    const QuiverPreset& q = r.preset;
    for (int k = 1; k <= q.n_rows; ++k)
        for (int l = 1; l < q.p; ++l) {
            const Mat<F>& m = r.map(q.grid_horizontal(k, l));
            if (rank(m) != m.cols) return false;
        }
    return true;
}

// Push-down to Qp: column sums as dimensions, horizontal maps assembled
// blockwise row-by-row into the connecting arrows, vertical maps into the
// loops (shifting one row down).
template <class F>
Rep<F> push_down(const Rep<F>& r) {
    const QuiverPreset& q = r.preset;
    if (q.kind != QuiverPreset::Kind::covering)
        throw PresetMismatch("push_down: needs a covering representation");
    r.validate();
    const F& f = r.field;
    const int p = q.p, nr = q.n_rows;

    std::vector<int> col_dim(p, 0);
    std::vector<std::vector<int>> row_offset(p, std::vector<int>(nr + 1, 0));
    for (int l = 0; l < p; ++l) {
        for (int k = 0; k < nr; ++k) {
            row_offset[l][k] = col_dim[l];
            col_dim[l] += r.dims[k * p + l];
        }
        row_offset[l][nr] = col_dim[l];
    }

    Rep<F> out(QuiverPreset::qp(p, q.x), f, col_dim);
    for (int l = 1; l < p; ++l) {  // connecting arrows
        Mat<F>& A = out.map(l - 1);
        for (int k = 1; k <= nr; ++k) {
            const Mat<F>& h = r.map(q.grid_horizontal(k, l));
            A.paste(row_offset[l][k - 1], row_offset[l - 1][k - 1], h);
        }
    }
    for (int l = 1; l <= p; ++l) {  // loops
        Mat<F>& B = out.map(p - 1 + (l - 1));
        for (int k = 1; k < nr; ++k) {
            const Mat<F>& v = r.map(q.grid_vertical(k, l));
            B.paste(row_offset[l - 1][k], row_offset[l - 1][k - 1], v);
        }
    }
    out.validate();
    return out;
}

// Vertical shift of a covering representation by one row (down), dropping
// anything that falls off the bottom; used to exercise translate-invariance.
template <class F>
Rep<F> vertical_shift(const Rep<F>& r) {
    const QuiverPreset& q = r.preset;
    std::vector<int> dims(q.num_vertices(), 0);
    for (int k = 1; k + 1 <= q.n_rows; ++k)
        for (int l = 1; l <= q.p; ++l) dims[q.grid_vertex(k + 1, l)] = r.dims[q.grid_vertex(k, l)];
    if (std::accumulate(dims.begin(), dims.end(), 0) != r.total_dim())
        throw IndexOutOfGrid("vertical_shift: representation touches the bottom row");
    Rep<F> out(q, r.field, dims);
    for (int k = 1; k + 1 <= q.n_rows; ++k)
        for (int l = 1; l < q.p; ++l)
            out.map(q.grid_horizontal(k + 1, l)) = r.map(q.grid_horizontal(k, l));
    for (int k = 1; k + 2 <= q.n_rows; ++k)
        for (int l = 1; l <= q.p; ++l)
            out.map(q.grid_vertical(k + 1, l)) = r.map(q.grid_vertical(k, l));
    out.validate();
    return out;
}

// Per-vertex subspaces closed under all arrow maps.
template <class F>
struct SubRep {
    std::vector<Mat<F>> rows;  // echelon row bases, one per vertex

    static SubRep full(const Rep<F>& r) {
        SubRep s;
        for (int d : r.dims) s.rows.push_back(Mat<F>::identity(r.field, d));
        return s;
    }
    static SubRep zero(const Rep<F>& r) {
        SubRep s;
        for (int d : r.dims) s.rows.push_back(Mat<F>(r.field, 0, d));
        return s;
    }
    int dim_at(int v) const { return rows[v].rows; }
};

template <class F>
bool subrep_closed(const Rep<F>& r, const SubRep<F>& s) {
    const auto& as = r.preset.arrows();
    for (size_t e = 0; e < as.size(); ++e) {
        const Mat<F>& img = r.maps[e] * s.rows[as[e].src].transpose();
        Mat<F> target = s.rows[as[e].dst];
        for (int c = 0; c < img.cols; ++c) {
            Mat<F> aug = vstack(r.field, {target, img.submatrix(0, c, img.rows, 1).transpose()},
                                img.rows);
            if (rank(aug) != target.rows) return false;
        }
    }
    return true;
}

// Quotient representation r / s via echelon complements: at each vertex the
// non-pivot coordinates of the subspace basis serve as quotient coordinates.
template <class F>
Rep<F> quotient_rep(const Rep<F>& r, const SubRep<F>& s) {
    const F& f = r.field;
    const int nv = r.preset.num_vertices();
    std::vector<Mat<F>> w;           // echelonized sub bases
    std::vector<std::vector<int>> comp(nv);  // complement coordinates
    std::vector<int> qdims(nv);
    for (int v = 0; v < nv; ++v) {
        Mat<F> b = s.rows[v];
        std::vector<int> piv;
        rref_inplace(b, &piv);
        b = b.submatrix(0, 0, static_cast<int>(piv.size()), r.dims[v]);
        std::vector<bool> is_piv(r.dims[v], false);
        for (int c : piv) is_piv[c] = true;
        for (int c = 0; c < r.dims[v]; ++c)
            if (!is_piv[c]) comp[v].push_back(c);
        qdims[v] = static_cast<int>(comp[v].size());
        w.push_back(std::move(b));
    }
    Rep<F> out(r.preset, f, qdims);
    const auto& as = r.preset.arrows();
    for (size_t e = 0; e < as.size(); ++e) {
        int sv = as[e].src, dv = as[e].dst;
        Mat<F>& Q = out.maps[e];
        for (size_t c = 0; c < comp[sv].size(); ++c) {
            // image of the c-th complement coordinate, reduced mod the sub
            std::vector<typename F::Elem> y(r.dims[dv], f.zero());
            for (int i = 0; i < r.dims[dv]; ++i) y[i] = r.maps[e].at(i, comp[sv][c]);
            for (int row = 0; row < w[dv].rows; ++row) {
                int pcol = -1;
                for (int j = 0; j < r.dims[dv]; ++j)
                    if (!f.is_zero(w[dv].at(row, j))) { pcol = j; break; }
                const auto coef = y[pcol];
                if (f.is_zero(coef)) continue;
                for (int j = 0; j < r.dims[dv]; ++j)
                    y[j] = f.sub(y[j], f.mul(coef, w[dv].at(row, j)));
            }
            for (size_t i = 0; i < comp[dv].size(); ++i) Q.at(static_cast<int>(i), static_cast<int>(c)) = y[comp[dv][i]];
        }
    }
    out.validate();
    return out;
}

// Restrict r to a subrepresentation: coordinates in the given bases.
template <class F>
Rep<F> restrict_rep(const Rep<F>& r, const SubRep<F>& s) {
    const F& f = r.field;
    const int nv = r.preset.num_vertices();
    std::vector<int> dims(nv);
    for (int v = 0; v < nv; ++v) dims[v] = s.rows[v].rows;
    Rep<F> out(r.preset, f, dims);
    const auto& as = r.preset.arrows();
    for (size_t e = 0; e < as.size(); ++e) {
        int sv = as[e].src, dv = as[e].dst;
        // solve target_basis^T * X = map * src_basis^T
        Mat<F> rhs = r.maps[e] * s.rows[sv].transpose();
        Mat<F> lhs = s.rows[dv].transpose();
        for (int c = 0; c < rhs.cols; ++c) {
            Mat<F> col = rhs.submatrix(0, c, rhs.rows, 1);
            Mat<F> x(f, lhs.cols, 1);
            if (!solve(lhs, col, x))
                throw std::invalid_argument("restrict_rep: not a subrepresentation");
            for (int i = 0; i < lhs.cols; ++i) out.maps[e].at(i, c) = x.at(i, 0);
        }
    }
    out.validate();
    return out;
}

// Greedy Delta-filtration of an injective-horizontal grid representation.
// Peels standard quotients top-down: x = least row meeting the last column,
// y = least occupied column of that row, and the next layer removes one
// dimension at (x,y) together with its images along the row.
template <class F>
std::vector<std::pair<int, int>> delta_filtration(const Rep<F>& r, bool verify_quotients = true) {
    const QuiverPreset& q = r.preset;
    if (q.kind != QuiverPreset::Kind::covering)
        throw PresetMismatch("delta_filtration: needs a covering representation");
    if (!horizontals_injective(r))
        throw NotDeltaFiltered("delta_filtration: a horizontal map is not injective");
    const F& f = r.field;
    const int p = q.p, nr = q.n_rows;

    SubRep<F> cur = SubRep<F>::full(r);
    std::vector<std::pair<int, int>> labels;
    while (true) {
        int x = -1;
        for (int k = 1; k <= nr && x < 0; ++k)
            if (cur.dim_at(q.grid_vertex(k, p)) > 0) x = k;
        if (x < 0) {
            for (int v = 0; v < q.num_vertices(); ++v)
                if (cur.dim_at(v) > 0)
                    throw NotDeltaFiltered("delta_filtration: leftover mass off the last column");
            break;
        }
        int y = -1;
        for (int l = 1; l <= p && y < 0; ++l)
            if (cur.dim_at(q.grid_vertex(x, l)) > 0) y = l;

        SubRep<F> next = cur;
        // drop the first basis vector at (x,y); push the rest along the row
        Mat<F> kept = cur.rows[q.grid_vertex(x, y)];
        Mat<F> h = kept.submatrix(1, 0, kept.rows - 1, kept.cols);
        next.rows[q.grid_vertex(x, y)] = h;
        Mat<F> carry = h;
        for (int l = y; l < p; ++l) {
            carry = (r.map(q.grid_horizontal(x, l)) * carry.transpose()).transpose();
            next.rows[q.grid_vertex(x, l + 1)] = Subspace<F>::span_rows(carry).basis;
        }

        if (verify_quotients) {
            Rep<F> layer = restrict_rep(r, cur);
            // express `next` in layer coordinates
            SubRep<F> inner;
            for (int v = 0; v < q.num_vertices(); ++v) {
                Mat<F> lhs = cur.rows[v].transpose();
                Mat<F> coords(f, next.rows[v].rows, cur.rows[v].rows);
                for (int i = 0; i < next.rows[v].rows; ++i) {
                    Mat<F> colv(f, r.dims[v], 1);
                    for (int j = 0; j < r.dims[v]; ++j) colv.at(j, 0) = next.rows[v].at(i, j);
                    Mat<F> sol(f, cur.rows[v].rows, 1);
                    if (!solve(lhs, colv, sol))
                        throw std::logic_error("delta_filtration: layer coordinates");
                    for (int j = 0; j < cur.rows[v].rows; ++j) coords.at(i, j) = sol.at(j, 0);
                }
                inner.rows.push_back(std::move(coords));
            }
            Rep<F> quot = quotient_rep(layer, inner);
            Rep<F> D = grid_module(q, f, GridModule::standard, x, y);
            if (!is_isomorphic(quot, D))
                throw NotDeltaFiltered("delta_filtration: layer quotient is not standard");
        }
        labels.emplace_back(x, y);
        cur = next;
    }
    return labels;
}

// Trace of r along the tilting module: the per-vertex span of the images of
// every homomorphism T(i,j) -> r. It is a subrepresentation.
template <class F>
SubRep<F> tilting_trace(const Rep<F>& r) {
    const QuiverPreset& q = r.preset;
    const F& f = r.field;
    std::vector<EchelonSpan<F>> spans;
    for (int v = 0; v < q.num_vertices(); ++v) spans.emplace_back(f, r.dims[v]);
    for (int i = 1; i <= q.n_rows; ++i)
        for (int j = 1; j <= q.p; ++j) {
            Rep<F> T = grid_module(q, f, GridModule::tilting, i, j);
            HomBasis<F> H = hom_space(T, r);
            for (const auto& tuple : H.basis)
                for (int v = 0; v < q.num_vertices(); ++v)
                    for (int c = 0; c < tuple[v].cols; ++c)
                        spans[static_cast<size_t>(v)].add(column_of(tuple[v], c));
        }
    SubRep<F> s;
    for (int v = 0; v < q.num_vertices(); ++v) {
        Mat<F> b(f, spans[v].dim(), r.dims[v]);
        for (int i = 0; i < spans[v].dim(); ++i)
            for (int j = 0; j < r.dims[v]; ++j) b.at(i, j) = spans[v].rows[i][j];
        rref_inplace(b);
        s.rows.push_back(std::move(b));
    }
    return s;
}

// phi(M) = M / trace_T(M).
template <class F>
Rep<F> phi_quotient(const Rep<F>& r) {
    return quotient_rep(r, tilting_trace(r));
}

// Reinterpret a representation with empty first row on the grid one row
// shorter.
template <class F>
Rep<F> drop_first_row(const Rep<F>& r) {
    const QuiverPreset& q = r.preset;
    for (int l = 1; l <= q.p; ++l)
        if (r.dims[q.grid_vertex(1, l)] != 0)
            throw IndexOutOfGrid("drop_first_row: first row not empty");
    QuiverPreset q2 = QuiverPreset::covering(q.p, q.n_rows - 1, std::min(q.x, q.n_rows - 1));
    std::vector<int> dims(q2.num_vertices());
    for (int k = 1; k <= q2.n_rows; ++k)
        for (int l = 1; l <= q.p; ++l) dims[q2.grid_vertex(k, l)] = r.dims[q.grid_vertex(k + 1, l)];
    Rep<F> out(q2, r.field, dims);
    for (int k = 1; k <= q2.n_rows; ++k)
        for (int l = 1; l < q.p; ++l)
            out.map(q2.grid_horizontal(k, l)) = r.map(q.grid_horizontal(k + 1, l));
    for (int k = 1; k < q2.n_rows; ++k)
        for (int l = 1; l <= q.p; ++l)
            out.map(q2.grid_vertical(k, l)) = r.map(q.grid_vertical(k + 1, l));
    out.validate();
    return out;
}

}  // namespace parorbit
