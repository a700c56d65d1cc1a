#pragma once

#include <algorithm>
#include <optional>

#include "parorbit/jordan.hpp"
#include "parorbit/quiver.hpp"
#include "parorbit/subspace.hpp"
#include "parorbit/translate.hpp"

namespace parorbit {

// ---------------------------------------------------------------------------
// Labeled Young diagrams.
//
// State for normalizing a pair (U <= V, f) with f nilpotent and U f-stable:
// V carries a Jordan basis (v_{i,j}) of type lambda, U a chain basis with
// tops u_m of type mu, and gamma^m_{i,j} are the coordinates of u_m in the
// v-basis. Base changes below keep both sides in Jordan form; their effect on
// gamma is recomputed from the transformed bases, never patched directly, and
// the documented pictorial effect is asserted afterwards.
// ---------------------------------------------------------------------------

template <class F>
struct GammaTable {
    // gamma[i][j] = h-tuple at box (i,j), 0-based
    std::vector<std::vector<std::vector<typename F::Elem>>> box;
};

struct LabeledDiagramShape {
    std::vector<int> lambda;
    std::vector<int> mu;
    int h() const { return static_cast<int>(mu.size()); }
    int g() const { return static_cast<int>(lambda.size()); }
    int k() const {
        int s = 0;
        for (int x : lambda) s += x;
        return s;
    }
    int l() const {
        int s = 0;
        for (int x : mu) s += x;
        return s;
    }
};

template <class F>
struct PairModel {
    F field;
    LabeledDiagramShape shape;
    Mat<F> f0;      // Jordan matrix of lambda, fixed model coordinates
    Mat<F> vbasis;  // columns = current v_{i,j}, chain-major, depth ascending
    std::vector<std::vector<typename F::Elem>> utops;  // current chain tops u_m

    int vcol(int i, int j) const {  // 0-based chain i, 1-based depth j
        int off = 0;
        for (int c = 0; c < i; ++c) off += shape.lambda[c];
        return off + j - 1;
    }

    static PairModel from_gamma(F f, LabeledDiagramShape sh, const GammaTable<F>& g) {
        PairModel m{f, sh, jordan_matrix(f, sh.lambda), Mat<F>::identity(f, sh.k()), {}};
        for (int mm = 0; mm < sh.h(); ++mm) {
            std::vector<typename F::Elem> u(sh.k(), f.zero());
            for (int i = 0; i < sh.g(); ++i)
                for (int j = 1; j <= sh.lambda[i]; ++j) {
                    const auto& c = g.box[i][j - 1][mm];
                    if (f.is_zero(c)) continue;
                    if (j > sh.mu[mm])
                        throw InvalidDiagram("gamma below the depth bound mu_m");
                    u[m.vcol(i, j)] = c;
                }
            m.utops.push_back(std::move(u));
        }
        m.validate();
        return m;
    }

    // chain vectors u_{m,t} = f0^{mu_m - t}(u_m) must be independent
    void validate() const {
        EchelonSpan<F> span(field, shape.k());
        for (int m = 0; m < shape.h(); ++m) {
            auto v = utops[m];
            for (int t = shape.mu[m]; t >= 1; --t) {
                if (!span.add(v)) throw InvalidDiagram("chain vectors are dependent");
                v = mat_apply(f0, v);
            }
            for (const auto& c : v)
                if (!field.is_zero(c)) throw InvalidDiagram("top exceeds its depth bound");
        }
        // vbasis must carry f0 to the Jordan shift on chain coordinates
        Mat<F> vin(field, 0, 0);
        if (!invert(vbasis, vin)) throw InvalidDiagram("v-basis is singular");
        if (!(vin * f0 * vbasis == jordan_matrix(field, shape.lambda)))
            throw InvalidDiagram("v-basis does not keep f in Jordan form");
    }

    GammaTable<F> gamma() const {
        Mat<F> vin(field, 0, 0);
        if (!invert(vbasis, vin)) throw InvalidDiagram("v-basis is singular");
        GammaTable<F> g;
        g.box.resize(shape.g());
        for (int i = 0; i < shape.g(); ++i)
            g.box[i].assign(shape.lambda[i],
                            std::vector<typename F::Elem>(shape.h(), field.zero()));
        for (int m = 0; m < shape.h(); ++m) {
            auto coords = mat_apply(vin, utops[m]);
            for (int i = 0; i < shape.g(); ++i)
                for (int j = 1; j <= shape.lambda[i]; ++j)
                    g.box[i][j - 1][m] = coords[vcol(i, j)];
        }
        return g;
    }

    // the subspace U spanned by all chain vectors, as row basis
    Subspace<F> u_space() const {
        Mat<F> rows(field, shape.l(), shape.k());
        int r = 0;
        for (int m = 0; m < shape.h(); ++m) {
            auto v = utops[m];
            for (int t = shape.mu[m]; t >= 1; --t) {
                for (int c = 0; c < shape.k(); ++c) rows.at(r, c) = v[c];
                v = mat_apply(f0, v);
                ++r;
            }
        }
        return Subspace<F>::span_rows(rows);
    }

    // the corresponding two-vertex representation (U -> V with both nilpotent
    // actions); used for isomorphism checks on move soundness
    Rep<F> to_rep(int x) const {
        const int k = shape.k(), l = shape.l();
        Rep<F> r(QuiverPreset::qp(2, x), field, {l, k});
        // basis of U: the chain vectors, giving f|U in Jordan form mu
        Mat<F> incl(field, k, l);
        int c = 0;
        for (int m = 0; m < shape.h(); ++m) {
            std::vector<std::vector<typename F::Elem>> chain;
            auto v = utops[m];
            chain.push_back(v);
            for (int t = 1; t < shape.mu[m]; ++t) chain.push_back(mat_apply(f0, chain.back()));
            // store depth-ascending
            for (int t = shape.mu[m] - 1; t >= 0; --t) {
                for (int i = 0; i < k; ++i) incl.at(i, c) = chain[t][i];
                ++c;
            }
        }
        r.map(0) = incl;
        r.map(1) = jordan_matrix(field, shape.mu);  // loop on U
        r.map(2) = f0;                              // loop on V
        r.validate();
        return r;
    }
};

// Construct the model from a concrete f-stable pair.
template <class F>
PairModel<F> diagram_from_pair(const Subspace<F>& U, const Mat<F>& f) {
    const F& fl = f.field;
    const int k = f.rows;
    JordanBasis<F> jv = nilpotent_jordan_basis(f);

    // f restricted to U, in U coordinates
    const int l = U.dim();
    Mat<F> fu(fl, l, l);
    for (int c = 0; c < l; ++c) {
        std::vector<typename F::Elem> v(k, fl.zero());
        for (int j = 0; j < k; ++j) v[j] = U.basis.at(c, j);
        auto fv = mat_apply(f, v);
        Mat<F> rhs(fl, k, 1);
        for (int j = 0; j < k; ++j) rhs.at(j, 0) = fv[j];
        Mat<F> x(fl, l, 1);
        if (!solve(U.basis.transpose(), rhs, x))
            throw NotStable("diagram_from_pair: subspace is not f-stable");
        for (int r = 0; r < l; ++r) fu.at(r, c) = x.at(r, 0);
    }
    JordanBasis<F> ju = nilpotent_jordan_basis(fu);

    LabeledDiagramShape sh{jv.partition, ju.partition};
    PairModel<F> m{fl, sh, jordan_matrix(fl, sh.lambda), Mat<F>::identity(fl, k), {}};

    // express everything in the v-chain coordinates: model coord of a vector w
    // is jv.basis^{-1} w
    Mat<F> vbinv(fl, 0, 0);
    if (!invert(jv.basis, vbinv)) throw std::logic_error("diagram_from_pair: singular basis");
    for (int chain = 0; chain < static_cast<int>(ju.partition.size()); ++chain) {
        int depth = ju.partition[chain];
        // top of the chain in ambient coordinates: U.basis^T * ju.basis column
        int col = ju.col(chain, depth);
        std::vector<typename F::Elem> top(k, fl.zero());
        for (int r = 0; r < l; ++r) {
            const auto& c = ju.basis.at(r, col);
            if (fl.is_zero(c)) continue;
            for (int j = 0; j < k; ++j)
                top[j] = fl.add(top[j], fl.mul(c, U.basis.at(r, j)));
        }
        m.utops.push_back(mat_apply(vbinv, top));
    }
    m.validate();
    return m;
}

// ---------------------------------------------------------------------------
// Base changes (moves).
// ---------------------------------------------------------------------------

template <class F>
struct BaseChange {
    enum class Kind { M, C, B, D, E };
    Kind kind;

    // M: scale chain `i` by omega
    // C: pivot (i, j) with unit entry m; kills entry m on the quadrant NW of
    //    the pivot (coefficients taken from the current gamma table)
    // B: rows (i0, j0), (i1, j1) with i0 < i1, j0 > j1, weight omega
    // D: column class j, matrix A (h x h)
    // E: chain m, target column j < mu_m (coefficients from gamma)
    int i = 0, j = 0, m = 0;
    int i1 = 0, j1 = 0;
    typename F::Elem omega{};
    std::optional<Mat<F>> A;

    static BaseChange scale(int i, typename F::Elem w) { return {Kind::M, i, 0, 0, 0, 0, w, {}}; }
    static BaseChange quad_kill(int i, int j, int m) { return {Kind::C, i, j, m, 0, 0, {}, {}}; }
    static BaseChange cross(int i0, int j0, int i1, int j1, typename F::Elem w) {
        return {Kind::B, i0, j0, 0, i1, j1, w, {}};
    }
    static BaseChange mix(int j, Mat<F> a) {
        return {Kind::D, 0, j, 0, 0, 0, {}, std::move(a)};
    }
    static BaseChange depth_kill(int m, int j) { return {Kind::E, 0, j, m, 0, 0, {}, {}}; }

    std::string str() const {
        switch (kind) {
            case Kind::M: return "M(i=" + std::to_string(i) + ")";
            case Kind::C:
                return "C(i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                       ",m=" + std::to_string(m) + ")";
            case Kind::B:
                return "B((" + std::to_string(i) + "," + std::to_string(j) + "),(" +
                       std::to_string(i1) + "," + std::to_string(j1) + "))";
            case Kind::D: return "D(j=" + std::to_string(j) + ")";
            case Kind::E:
                return "E(m=" + std::to_string(m) + ",j=" + std::to_string(j) + ")";
        }
        return "?";
    }
};

namespace young_detail {

template <class F>
bool tuple_zero(const F& f, const std::vector<typename F::Elem>& t) {
    for (const auto& x : t)
        if (!f.is_zero(x)) return false;
    return true;
}

template <class F>
bool tuple_eq(const F& f, const std::vector<typename F::Elem>& a,
              const std::vector<typename F::Elem>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (!f.eq(a[i], b[i])) return false;
    return true;
}

// is t a standard basis vector e_s? returns s (0-based) or -1
template <class F>
int basis_index(const F& f, const std::vector<typename F::Elem>& t) {
    int idx = -1;
    for (size_t i = 0; i < t.size(); ++i) {
        if (f.is_zero(t[i])) continue;
        if (idx >= 0 || !f.eq(t[i], f.one())) return -1;
        idx = static_cast<int>(i);
    }
    return idx;
}

// largest index with a nonzero entry, or -1
template <class F>
int top_index(const F& f, const std::vector<typename F::Elem>& t) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i)
        if (!f.is_zero(t[i])) return i;
    return -1;
}

}  // namespace young_detail

// The admissibility condition on a V-side base change written in chain
// coordinates: omega(i,j -> i',j') vanishes when j' > j or when the remaining
// chain above the target is longer than above the source, and propagates down
// the chains. Equivalently, the matrix commutes with the Jordan shift.
template <class F>
bool stab_condition(const F& f, const std::vector<int>& lambda, const Mat<F>& w) {
    LabeledDiagramShape sh{lambda, {}};
    PairModel<F> dummy{f, sh, jordan_matrix(f, lambda), Mat<F>::identity(f, 0), {}};
    Mat<F> J = jordan_matrix(f, lambda);
    return (J * w == w * J) && is_invertible(w);
}

template <class F>
class MoveEngine {
public:
    explicit MoveEngine(PairModel<F> model) : m_(std::move(model)) {}

    const PairModel<F>& model() const { return m_; }
    PairModel<F>& model() { return m_; }
    const std::vector<BaseChange<F>>& log() const { return log_; }

    // apply one move; validates preconditions, transforms bases, recomputes
    // gamma and asserts the documented effect
    void apply(const BaseChange<F>& bc) {
        const F& f = m_.field;
        GammaTable<F> before = m_.gamma();
        switch (bc.kind) {
            case BaseChange<F>::Kind::M: apply_M(bc, before); break;
            case BaseChange<F>::Kind::C: apply_C(bc, before); break;
            case BaseChange<F>::Kind::B: apply_B(bc, before); break;
            case BaseChange<F>::Kind::D: apply_D(bc, before); break;
            case BaseChange<F>::Kind::E: apply_E(bc, before); break;
        }
        m_.validate();
        log_.push_back(bc);
        (void)f;
    }

private:
    PairModel<F> m_;
    std::vector<BaseChange<F>> log_;

    void scale_chain(int i, const typename F::Elem& w) {
        const F& f = m_.field;
        for (int j = 1; j <= m_.shape.lambda[i]; ++j) {
            int c = m_.vcol(i, j);
            for (int r = 0; r < m_.vbasis.rows; ++r)
                m_.vbasis.at(r, c) = f.mul(m_.vbasis.at(r, c), w);
        }
    }

    // v_{i, j-s} += w * v_{i', j'-s} for every shift keeping the destination
    // depth inside the chain; shifts below the source chain drop, shifts above
    // it exist exactly when the admissibility condition holds. Sources are
    // read from a snapshot so that several coefficients form one simultaneous
    // base change even when source and destination chains coincide.
    void add_shifted(const Mat<F>& snap, int i, int j, int i2, int j2,
                     const typename F::Elem& w) {
        const F& f = m_.field;
        const int lam_i = m_.shape.lambda[i], lam_i2 = m_.shape.lambda[i2];
        for (int s = j - lam_i; s <= j - 1; ++s) {
            int dj = j - s, sj = j2 - s;
            if (sj < 1) continue;
            if (sj > lam_i2)
                throw MovePreconditionViolated("base change runs over the source chain");
            int dst = m_.vcol(i, dj), src = m_.vcol(i2, sj);
            for (int r = 0; r < m_.vbasis.rows; ++r)
                m_.vbasis.at(r, dst) =
                    f.add(m_.vbasis.at(r, dst), f.mul(w, snap.at(r, src)));
        }
    }

    void apply_M(const BaseChange<F>& bc, const GammaTable<F>& before) {
        const F& f = m_.field;
        if (f.is_zero(bc.omega)) throw MovePreconditionViolated("M: zero scalar");
        scale_chain(bc.i, bc.omega);
        GammaTable<F> after = m_.gamma();
        auto winv = f.inv(bc.omega);
        for (int i = 0; i < m_.shape.g(); ++i)
            for (int j = 0; j < m_.shape.lambda[i]; ++j)
                for (int mm = 0; mm < m_.shape.h(); ++mm) {
                    auto expect = i == bc.i ? f.mul(before.box[i][j][mm], winv)
                                            : before.box[i][j][mm];
                    if (!f.eq(after.box[i][j][mm], expect))
                        throw std::logic_error("M: unexpected effect on gamma");
                }
    }

    void apply_C(const BaseChange<F>& bc, const GammaTable<F>& before) {
        const F& f = m_.field;
        using young_detail::tuple_eq;
        using young_detail::tuple_zero;
        const int i = bc.i, j = bc.j, mm = bc.m;
        if (!f.eq(before.box[i][j - 1][mm], f.one()))
            throw MovePreconditionViolated("C: pivot entry is not one");
        for (int jj = j + 1; jj <= m_.shape.lambda[i]; ++jj)
            if (!tuple_zero(f, before.box[i][jj - 1]))
                throw MovePreconditionViolated("C: nonzero tuple right of the pivot");
        bool other_rows_clean = true;  // enables the stronger guarantee
        for (int jj = 1; jj <= m_.shape.lambda[i] && other_rows_clean; ++jj)
            for (int m2 = 0; m2 < m_.shape.h(); ++m2)
                if (m2 != mm && !f.is_zero(before.box[i][jj - 1][m2])) other_rows_clean = false;

        Mat<F> snap = m_.vbasis;
        for (int i2 = 0; i2 <= i; ++i2)
            for (int j2 = 1; j2 <= std::min(j, m_.shape.lambda[i2]); ++j2) {
                if (i2 == i && j2 == j) continue;
                const auto& c = before.box[i2][j2 - 1][mm];
                if (f.is_zero(c)) continue;
                add_shifted(snap, i, j, i2, j2, c);
            }

        GammaTable<F> after = m_.gamma();
        for (int i2 = 0; i2 < m_.shape.g(); ++i2)
            for (int j2 = 1; j2 <= m_.shape.lambda[i2]; ++j2) {
                bool in_quadrant = i2 <= i && j2 <= j;
                if (in_quadrant && !(i2 == i && j2 == j)) {
                    if (!f.is_zero(after.box[i2][j2 - 1][mm]))
                        throw std::logic_error("C: quadrant entry survived");
                    if (other_rows_clean)
                        for (int m2 = 0; m2 < m_.shape.h(); ++m2)
                            if (m2 != mm &&
                                !f.eq(after.box[i2][j2 - 1][m2], before.box[i2][j2 - 1][m2]))
                                throw std::logic_error("C: clean-row guarantee violated");
                } else if (!in_quadrant) {
                    if (!tuple_eq(f, after.box[i2][j2 - 1], before.box[i2][j2 - 1]))
                        throw std::logic_error("C: tuple outside the quadrant changed");
                }
            }
    }

    void apply_B(const BaseChange<F>& bc, const GammaTable<F>& before) {
        const F& f = m_.field;
        using young_detail::tuple_eq;
        using young_detail::tuple_zero;
        const int i0 = bc.i, j0 = bc.j, i1 = bc.i1, j1 = bc.j1;
        if (!(i0 < i1 && j0 > j1)) throw MovePreconditionViolated("B: need i0 < i1, j0 > j1");
        for (int jj = 1; jj <= m_.shape.lambda[i0]; ++jj)
            if (jj != 1 && jj != j0 && !tuple_zero(f, before.box[i0][jj - 1]))
                throw MovePreconditionViolated("B: row i0 not supported on {1, j0}");
        for (int jj = 1; jj <= m_.shape.lambda[i1]; ++jj)
            if (jj != 1 && jj != j1 && !tuple_zero(f, before.box[i1][jj - 1]))
                throw MovePreconditionViolated("B: row i1 not supported on {1, j1}");
        if (!tuple_eq(f, before.box[i0][j0 - 1], before.box[i1][j1 - 1]))
            throw MovePreconditionViolated("B: pivot tuples differ");

        // v_{i0,j0} += w v_{i0,j1};  v_{i1,j1} -= w v_{i0,j1}  (with propagation)
        Mat<F> snap = m_.vbasis;
        add_shifted(snap, i0, j0, i0, j1, bc.omega);
        add_shifted(snap, i1, j1, i0, j1, f.neg(bc.omega));

        GammaTable<F> after = m_.gamma();
        for (int i2 = 0; i2 < m_.shape.g(); ++i2)
            for (int j2 = 1; j2 <= m_.shape.lambda[i2]; ++j2) {
                if (i2 == i0 && j2 == 1) {
                    for (int m2 = 0; m2 < m_.shape.h(); ++m2) {
                        auto expect = f.add(before.box[i0][0][m2],
                                            f.mul(bc.omega, before.box[i1][0][m2]));
                        if (!f.eq(after.box[i0][0][m2], expect))
                            throw std::logic_error("B: wrong update at (i0, 1)");
                    }
                } else if (!tuple_eq(f, after.box[i2][j2 - 1], before.box[i2][j2 - 1])) {
                    throw std::logic_error("B: tuple other than (i0, 1) changed");
                }
            }
    }

    void apply_D(const BaseChange<F>& bc, const GammaTable<F>& before) {
        const F& f = m_.field;
        const int h = m_.shape.h();
        if (!bc.A || bc.A->rows != h || bc.A->cols != h)
            throw MovePreconditionViolated("D: matrix shape");
        const Mat<F>& A = *bc.A;
        if (!is_invertible(A)) throw MovePreconditionViolated("D: matrix singular");
        int m1 = -1, m2 = -1;
        for (int mm = 0; mm < h; ++mm)
            if (m_.shape.mu[mm] == bc.j) {
                if (m1 < 0) m1 = mm;
                m2 = mm;
            }
        if (m1 < 0) throw MovePreconditionViolated("D: empty length class");
        for (int col = 0; col < h; ++col) {
            bool in_class = col >= m1 && col <= m2;
            for (int row = 0; row < h; ++row) {
                bool expect_zero = in_class ? row > m2 : row != col;
                bool diag_one = !in_class && row == col;
                if (expect_zero && !f.is_zero(A.at(row, col)))
                    throw MovePreconditionViolated("D: matrix outside the admissible shape");
                if (diag_one && !f.eq(A.at(row, col), f.one()))
                    throw MovePreconditionViolated("D: must fix tops outside the class");
            }
        }

        // u'_m = sum_m' A[m][m'] u_{m'}
        std::vector<std::vector<typename F::Elem>> next(h,
            std::vector<typename F::Elem>(m_.shape.k(), f.zero()));
        for (int mm = 0; mm < h; ++mm)
            for (int m2i = 0; m2i < h; ++m2i) {
                const auto& c = A.at(mm, m2i);
                if (f.is_zero(c)) continue;
                for (int r = 0; r < m_.shape.k(); ++r)
                    next[mm][r] = f.add(next[mm][r], f.mul(c, m_.utops[m2i][r]));
            }
        m_.utops = std::move(next);

        GammaTable<F> after = m_.gamma();
        for (int i2 = 0; i2 < m_.shape.g(); ++i2)
            for (int j2 = 1; j2 <= m_.shape.lambda[i2]; ++j2)
                for (int row = 0; row < h; ++row) {
                    auto expect = f.zero();
                    for (int col = 0; col < h; ++col)
                        expect = f.add(expect,
                                       f.mul(A.at(row, col), before.box[i2][j2 - 1][col]));
                    if (!f.eq(after.box[i2][j2 - 1][row], expect))
                        throw std::logic_error("D: gamma did not transform by A");
                }
    }

    void apply_E(const BaseChange<F>& bc, const GammaTable<F>& before) {
        const F& f = m_.field;
        using young_detail::tuple_eq;
        const int mm = bc.m, j = bc.j;
        const int mu_m = m_.shape.mu[mm];
        if (j >= mu_m) throw MovePreconditionViolated("E: target column not below mu_m");
        int target_row = -1;
        for (int i = 0; i < m_.shape.g(); ++i) {
            if (m_.shape.lambda[i] < mu_m) continue;
            if (!f.is_zero(before.box[i][mu_m - 1][mm])) {
                if (target_row >= 0)
                    throw MovePreconditionViolated("E: entry m not unique in column mu_m");
                target_row = i;
            }
        }
        if (target_row < 0) throw MovePreconditionViolated("E: no nonzero entry in column mu_m");
        const auto pivot = before.box[target_row][mu_m - 1][mm];

        // u_{m'} += w_{m'} u_{m, j} with w chosen to clear the tuple at
        // (target_row, j); only chains reaching depth j participate
        auto depth_vec = m_.utops[mm];
        for (int s = 0; s < mu_m - j; ++s) depth_vec = mat_apply(m_.f0, depth_vec);
        for (int m2 = 0; m2 < m_.shape.h(); ++m2) {
            if (m_.shape.mu[m2] < j) continue;
            auto w = f.neg(f.div(before.box[target_row][j - 1][m2], pivot));
            if (f.is_zero(w)) continue;
            for (int r = 0; r < m_.shape.k(); ++r)
                m_.utops[m2][r] = f.add(m_.utops[m2][r], f.mul(w, depth_vec[r]));
        }

        GammaTable<F> after = m_.gamma();
        for (int i2 = 0; i2 < m_.shape.g(); ++i2)
            for (int j2 = j; j2 <= m_.shape.lambda[i2]; ++j2) {
                if (i2 == target_row && j2 == j) {
                    if (!young_detail::tuple_zero(f, after.box[i2][j2 - 1]))
                        throw std::logic_error("E: target tuple not cleared");
                } else if (!tuple_eq(f, after.box[i2][j2 - 1], before.box[i2][j2 - 1])) {
                    throw std::logic_error("E: tuple at column >= j changed");
                }
            }
    }
};

}  // namespace parorbit
