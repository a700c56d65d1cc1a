#pragma once

#include <set>

#include "parorbit/young.hpp"

namespace parorbit {

// ---------------------------------------------------------------------------
// Full reduction for |mu| <= 5.
//
// Every gamma table is brought to a {0,1} normal form with the five move
// families, following the three-way case split on mu:
//   a)  mu = (2^a, 1^(l-2a)),
//   b)  mu = (a, 1^(l-a)) with a >= 3,
//   c)  mu = (3, 2).
// The routine records the applied moves (replayable) and an explicit
// lexicographically decreasing progress measure, asserted at every step.
// ---------------------------------------------------------------------------

namespace young_detail {

// Matrix sending w to e_target (0-based), touching only coordinates in
// [target..hi] of the class window; fixes every other basis vector.
// Requires support(w) to meet [target..hi] and to vanish above hi.
template <class F>
Mat<F> window_normalizer(const F& f, int h, const std::vector<typename F::Elem>& w,
                         int target, int hi) {
    int c = -1;
    for (int r = target; r <= hi; ++r)
        if (!f.is_zero(w[r])) { c = r; break; }
    if (c < 0) throw std::logic_error("window_normalizer: no usable coordinate");
    for (int r = hi + 1; r < h; ++r)
        if (!f.is_zero(w[r])) throw std::logic_error("window_normalizer: support above window");

    Mat<F> t1 = Mat<F>::identity(f, h);  // swap target <-> c
    if (c != target) {
        t1.at(target, target) = f.zero();
        t1.at(c, c) = f.zero();
        t1.at(target, c) = f.one();
        t1.at(c, target) = f.one();
    }
    auto w1 = mat_apply(t1, w);
    Mat<F> t2 = Mat<F>::identity(f, h);
    t2.at(target, target) = f.inv(w1[target]);
    auto w2 = mat_apply(t2, w1);
    Mat<F> t3 = Mat<F>::identity(f, h);
    for (int r = target + 1; r <= hi; ++r) t3.at(r, target) = f.neg(w2[r]);
    return t3 * t2 * t1;
}

// Upper-triangular normalizer: column `target` only, sends w (with top
// nonzero coordinate `target`) to e_target and fixes every e_s, s != target.
template <class F>
Mat<F> upper_normalizer(const F& f, int h, const std::vector<typename F::Elem>& w, int target) {
    if (f.is_zero(w[target])) throw std::logic_error("upper_normalizer: zero pivot");
    for (int r = target + 1; r < h; ++r)
        if (!f.is_zero(w[r])) throw std::logic_error("upper_normalizer: support above target");
    Mat<F> a = Mat<F>::identity(f, h);
    auto inv = f.inv(w[target]);
    a.at(target, target) = inv;
    for (int r = 0; r < target; ++r) a.at(r, target) = f.neg(f.mul(w[r], inv));
    return a;
}

template <class F>
Mat<F> scale_chain_matrix(const F& f, int h, int chain, const typename F::Elem& c) {
    Mat<F> a = Mat<F>::identity(f, h);
    a.at(chain, chain) = c;
    return a;
}

struct Progress {
    // strictly decreasing lexicographic measure across reduction steps
    std::vector<std::array<int, 3>> trail;
    void step(int phase, int col, int row) {
        std::array<int, 3> t{phase, col, row};
        if (!trail.empty() && !(t < trail.back()))
            throw std::logic_error("reduce: progress measure failed to decrease");
        trail.push_back(t);
    }
};

}  // namespace young_detail

struct ReducedCheck {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(const std::string& s) {
        ok = false;
        violations.push_back(s);
    }
};

// The four normal-form conditions for mu a partition of at most 5.
template <class F>
ReducedCheck check_reduced(const F& f, const LabeledDiagramShape& sh, const GammaTable<F>& g) {
    using young_detail::basis_index;
    using young_detail::tuple_zero;
    ReducedCheck out;
    const bool is32 = sh.mu == std::vector<int>{3, 2};
    const int gg = sh.g(), h = sh.h();

    // depth bound
    for (int i = 0; i < gg; ++i)
        for (int j = 1; j <= sh.lambda[i]; ++j)
            for (int m = 0; m < h; ++m)
                if (j > sh.mu[m] && !f.is_zero(g.box[i][j - 1][m]))
                    out.fail("entry beyond the depth bound at row " + std::to_string(i + 1));

    auto is_ones_pair = [&](const std::vector<typename F::Elem>& t) {
        return h == 2 && f.eq(t[0], f.one()) && f.eq(t[1], f.one());
    };

    int i0 = -1;    // row with the (1,1) tuple at column 1 (mu = (3,2) only)
    int istar = -1;  // row allowed to carry column 1 plus one more box
    for (int i = 0; i < gg; ++i) {
        std::vector<int> nz;
        for (int j = 1; j <= sh.lambda[i]; ++j)
            if (!tuple_zero(f, g.box[i][j - 1])) nz.push_back(j);
        if (nz.empty()) continue;
        bool ones = nz.size() == 1 && nz[0] == 1 && is_ones_pair(g.box[i][0]);
        if (ones) {
            if (!is32) out.fail("clause 1: (1,1) tuple outside the (3,2) case");
            if (i0 >= 0) out.fail("clause 1: second (1,1) tuple");
            i0 = i;
            continue;
        }
        if (nz.size() >= 2) {
            if (istar >= 0) out.fail("clause 3: two rows with multiple tuples");
            if (nz.size() > 2 || nz[0] != 1)
                out.fail("clause 1: special row must be column 1 plus one box");
            istar = i;
        }
        for (int j : nz) {
            int s = basis_index(f, g.box[i][j - 1]);
            if (s < 0)
                out.fail("clause 2: tuple at (" + std::to_string(i + 1) + "," +
                         std::to_string(j) + ") is not a basis vector");
            else if (sh.mu[s] < j)
                out.fail("clause 2: basis index outlives its chain at column " +
                         std::to_string(j));
        }
    }

    // column uniqueness
    for (int j = 2; j <= (sh.lambda.empty() ? 0 : sh.lambda[0]); ++j) {
        std::vector<int> seen(h, 0);
        for (int i = 0; i < gg; ++i) {
            if (sh.lambda[i] < j) continue;
            int s = basis_index(f, g.box[i][j - 1]);
            if (s >= 0 && ++seen[s] > 1)
                out.fail("clause 4: repeated basis vector in column " + std::to_string(j));
        }
    }
    std::vector<int> seen1(h, 0);
    for (int i = 0; i < gg; ++i) {
        if (i == istar) continue;
        int s = basis_index(f, g.box[i][0]);
        if (s >= 0 && ++seen1[s] > 1) out.fail("clause 4: repeated basis vector in column 1");
    }
    return out;
}

template <class F>
class Reducer {
public:
    explicit Reducer(PairModel<F> model) : eng_(std::move(model)) {}

    MoveEngine<F>& engine() { return eng_; }

    void run() {
        const auto& mu = eng_.model().shape.mu;
        int l = eng_.model().shape.l();
        if (l > 5) throw MuTooLarge("reduce: |mu| > 5");
        if (l == 0) return;
        if (mu == std::vector<int>{3, 2})
            case_c();
        else if (mu[0] >= 3)
            case_b();
        else
            case_a();
    }

private:
    MoveEngine<F> eng_;
    young_detail::Progress progress_;

    const F& fld() const { return eng_.model().field; }
    int g() const { return eng_.model().shape.g(); }
    int h() const { return eng_.model().shape.h(); }
    const std::vector<int>& lambda() const { return eng_.model().shape.lambda; }
    const std::vector<int>& mu() const { return eng_.model().shape.mu; }

    using BC = BaseChange<F>;

    std::vector<typename F::Elem> tup(int i, int j) const {
        return eng_.model().gamma().box[i][j - 1];
    }
    bool nz(int i, int j) const { return !young_detail::tuple_zero(fld(), tup(i, j)); }

    // ---- case a: mu = (2^a, 1^(l-2a)) ------------------------------------
    void case_a() {
        const F& f = fld();
        const int a = static_cast<int>(std::count(mu().begin(), mu().end(), 2));
        const int j = mu()[0];  // 1 or 2
        const int hi_class = j == 2 ? a - 1 : h() - 1;

        // first pass: column j, bottom to top
        std::vector<int> pivot_row(h(), -1);
        int s = 0;
        for (int i = g() - 1; i >= 0; --i) {
            if (lambda()[i] < j) continue;
            progress_.step(100, j, i);
            auto w = tup(i, j + 0);
            if (young_detail::tuple_zero(f, w)) continue;
            for (int r = 0; r < s; ++r)
                if (!f.is_zero(w[r])) throw std::logic_error("case a: placed entry revived");
            eng_.apply(BC::mix(j, young_detail::window_normalizer(f, h(), w, s, hi_class)));
            eng_.apply(BC::quad_kill(i, j, s));
            if (j == 2) eng_.apply(BC::depth_kill(s, 1));
            pivot_row[s] = i;
            ++s;
        }
        if (j == 1) return;

        // second pass: column 1
        std::set<int> used;
        for (int i = g() - 1; i >= 0; --i) {
            progress_.step(50, 1, i);
            auto w = tup(i, 1);
            if (young_detail::tuple_zero(f, w)) continue;
            int top = young_detail::top_index(f, w);
            if (used.count(top)) throw std::logic_error("case a: used coordinate revived");
            int support = 0;
            for (int r = 0; r < h(); ++r)
                if (!f.is_zero(w[r])) ++support;
            if (support == 1) {
                eng_.apply(BC::scale(i, w[top]));
            } else {
                eng_.apply(BC::mix(top < a ? 2 : 1,
                                   young_detail::upper_normalizer(f, h(), w, top)));
                if (top < a) {
                    // only the column-2 pivot e_top may have moved; restore it
                    for (int r = 0; r < top; ++r) {
                        if (f.is_zero(w[r]) || r >= a || pivot_row[r] < 0) continue;
                        eng_.apply(BC::quad_kill(pivot_row[r], 2, r));
                    }
                    if (pivot_row[top] >= 0) {
                        auto piv = tup(pivot_row[top], 2);
                        eng_.apply(BC::scale(pivot_row[top], piv[top]));
                    }
                }
            }
            eng_.apply(BC::quad_kill(i, 1, top));
            used.insert(top);
        }
    }

    // ---- case b: mu = (a, 1^(l-a)), a >= 3 --------------------------------
    void case_b() {
        const F& f = fld();
        const int a = mu()[0];
        const int mu2 = h() >= 2 ? 1 : 0;

        std::vector<int> pivot_row(a + 1, -1);  // pivot_row[j] for columns j >= 2
        for (int j = a; j >= mu2 + 1; --j) {
            progress_.step(200, j, 0);
            int ij = -1;
            for (int i = g() - 1; i >= 0; --i)
                if (lambda()[i] >= j && nz(i, j)) { ij = i; break; }
            if (ij < 0) continue;
            auto w = tup(ij, j);
            eng_.apply(BC::scale(ij, w[0]));
            eng_.apply(BC::quad_kill(ij, j, 0));
            pivot_row[j] = ij;
        }
        if (h() == 1) return;

        // clear stray column-1 tuples on pivot rows
        if (h() == 2) {
            int donor = -1;
            for (int j = 2; j <= a; ++j)  // lowermost pivot with mass = smallest column
                if (pivot_row[j] >= 0 && nz(pivot_row[j], 1)) { donor = j; break; }
            if (donor > 0)
                for (int j = a; j > donor; --j) {
                    if (pivot_row[j] < 0 || !nz(pivot_row[j], 1)) continue;
                    progress_.step(150, j, 0);
                    auto num = tup(pivot_row[j], 1), den = tup(pivot_row[donor], 1);
                    eng_.apply(BC::cross(pivot_row[j], j, pivot_row[donor], donor,
                                         f.neg(f.div(num[1], den[1]))));
                }
        } else {  // mu = (3,1,1)
            if (pivot_row[a] >= 0 && nz(pivot_row[a], 1)) {
                progress_.step(150, a, 0);
                eng_.apply(BC::depth_kill(0, 1));
            }
        }
        int istar = -1, jstar = -1;
        for (int j = 2; j <= a; ++j)
            if (pivot_row[j] >= 0 && nz(pivot_row[j], 1)) {
                if (istar >= 0) throw std::logic_error("case b: two special rows");
                istar = pivot_row[j];
                jstar = j;
            }
        int low_pivot_row = -1, low_pivot_col = -1;
        for (int j = 2; j <= a; ++j)
            if (pivot_row[j] > low_pivot_row) {
                low_pivot_row = pivot_row[j];
                low_pivot_col = j;
            }

        // second pass: column 1
        std::set<int> used;
        for (int i = g() - 1; i >= 0; --i) {
            progress_.step(100, 1, i);
            auto w = tup(i, 1);
            if (young_detail::tuple_zero(f, w)) continue;
            int top = young_detail::top_index(f, w);
            // normalizers from lower rows can push mass back onto the
            // long-chain coordinate of rows above the lowest pivot, which the
            // first pass had cleared; that pivot clears it again
            if (!f.is_zero(w[0]) && low_pivot_row >= 0 && i <= low_pivot_row &&
                !used.count(0)) {
                eng_.apply(BC::quad_kill(low_pivot_row, low_pivot_col, 0));
                w = tup(i, 1);
                if (young_detail::tuple_zero(f, w)) continue;
                top = young_detail::top_index(f, w);
            }
            if (i == istar) {
                if (top == 0) throw std::logic_error("case b: special row with leading entry");
                eng_.apply(BC::mix(1, young_detail::upper_normalizer(f, h(), w, top)));
                if (top != 1) {
                    // cycle top -> 1, shifting 1..top-1 up by one
                    Mat<F> perm(f, h(), h());
                    for (int r = 0; r < h(); ++r) {
                        int dst = r;
                        if (r == top) dst = 1;
                        else if (r >= 1 && r < top) dst = r + 1;
                        perm.at(dst, r) = f.one();
                    }
                    eng_.apply(BC::mix(1, perm));
                    std::set<int> renamed;
                    for (int u : used) renamed.insert(u == top ? 1 : (u >= 1 && u < top ? u + 1 : u));
                    used = renamed;
                }
                continue;
            }
            bool colinear_special =
                istar >= 0 && i < istar && top == 1 && [&] {
                    for (int r = 0; r < h(); ++r)
                        if (r != 1 && !f.is_zero(w[r])) return false;
                    return true;
                }();
            if (colinear_special) {
                eng_.apply(BC::scale(i, w[1]));
                eng_.apply(BC::quad_kill(i, 1, 1));
                used.insert(1);
                continue;
            }
            if (used.count(top)) throw std::logic_error("case b: used coordinate revived");
            if (top == 0) {
                eng_.apply(BC::scale(i, w[0]));
            } else {
                eng_.apply(BC::mix(1, young_detail::upper_normalizer(f, h(), w, top)));
            }
            eng_.apply(BC::quad_kill(i, 1, top));
            used.insert(top);
        }
    }

    // ---- case c: mu = (3,2) ------------------------------------------------
    void case_c() {
        const F& f = fld();
        // column 3 (first chain only)
        int i3 = -1;
        for (int i = g() - 1; i >= 0; --i)
            if (lambda()[i] >= 3 && nz(i, 3)) { i3 = i; break; }
        if (i3 < 0) throw InvalidDiagram("case c: no depth-3 coordinate for the long chain");
        progress_.step(300, 3, i3);
        eng_.apply(BC::scale(i3, tup(i3, 3)[0]));
        eng_.apply(BC::quad_kill(i3, 3, 0));
        eng_.apply(BC::depth_kill(0, 2));  // clears the tuple at (i3, 2)

        // column 2: first the short-chain pivot, then the long-chain one
        int i2 = -1;
        for (int i = g() - 1; i >= 0; --i)
            if (lambda()[i] >= 2 && !f.is_zero(tup(i, 2)[1])) { i2 = i; break; }
        if (i2 < 0) throw InvalidDiagram("case c: no depth-2 coordinate for the short chain");
        progress_.step(290, 2, i2);
        eng_.apply(BC::mix(2, young_detail::upper_normalizer(f, h(), tup(i2, 2), 1)));
        eng_.apply(BC::quad_kill(i2, 2, 1));
        int istar = -1;
        for (int i = g() - 1; i >= 0; --i)
            if (lambda()[i] >= 2 && !f.is_zero(tup(i, 2)[0])) { istar = i; break; }
        if (istar >= 0) {
            progress_.step(280, 2, istar);
            eng_.apply(BC::scale(istar, tup(istar, 2)[0]));
            eng_.apply(BC::quad_kill(istar, 2, 0));
        }
        eng_.apply(BC::depth_kill(0, 1));  // clears (i3, 1)
        eng_.apply(BC::depth_kill(1, 1));  // clears (i2, 1)

        // column 1
        int i0 = -1;
        for (int i = g() - 1; i >= 0; --i)
            if (nz(i, 1)) { i0 = i; break; }
        if (i0 < 0) return;
        auto w = tup(i0, 1);
        if (!f.is_zero(w[0]) && !f.is_zero(w[1])) {
            progress_.step(270, 1, i0);
            // scale the chains so the tuple becomes (1,1), then repair pivots
            eng_.apply(BC::mix(3, young_detail::scale_chain_matrix(f, h(), 0, f.inv(w[0]))));
            eng_.apply(BC::mix(2, young_detail::scale_chain_matrix(f, h(), 1, f.inv(w[1]))));
            eng_.apply(BC::scale(i3, tup(i3, 3)[0]));
            if (istar >= 0) eng_.apply(BC::scale(istar, tup(istar, 2)[0]));
            eng_.apply(BC::scale(i2, tup(i2, 2)[1]));
            eng_.apply(BC::quad_kill(i0, 1, 1));
            if (istar >= 0 && nz(istar, 1)) eng_.apply(BC::quad_kill(istar, 2, 0));
            int inext = -1;
            for (int i = i0 - 1; i >= 0; --i)
                if (nz(i, 1)) { inext = i; break; }
            if (inext >= 0) {
                progress_.step(260, 1, inext);
                auto w2 = tup(inext, 1);
                if (f.is_zero(w2[0]))
                    throw std::logic_error("case c: expected leading coordinate");
                eng_.apply(BC::scale(inext, w2[0]));
                eng_.apply(BC::quad_kill(inext, 1, 0));
            }
            return;
        }
        for (int i = i0; i >= 0; --i) {
            progress_.step(250, 1, i);
            auto wi = tup(i, 1);
            if (young_detail::tuple_zero(f, wi)) continue;
            int sidx = f.is_zero(wi[0]) ? 1 : 0;
            if (!f.is_zero(wi[1 - sidx]))
                throw std::logic_error("case c: tuple not on a single coordinate");
            if (i == istar) {
                eng_.apply(BC::mix(2, young_detail::scale_chain_matrix(f, h(), 1,
                                                                       f.inv(wi[1]))));
                eng_.apply(BC::scale(i2, tup(i2, 2)[1]));
            } else {
                eng_.apply(BC::scale(i, wi[sidx]));
                eng_.apply(BC::quad_kill(i, 1, sidx));
            }
        }
    }
};

// Reduce a pair model in place; returns the move log.
template <class F>
std::vector<BaseChange<F>> reduce_diagram(PairModel<F>& model) {
    Reducer<F> r(model);
    r.run();
    model = r.engine().model();
    auto chk = check_reduced(model.field, model.shape, model.gamma());
    if (!chk.ok)
        throw std::logic_error("reduce: normal form check failed: " + chk.violations[0]);
    return r.engine().log();
}

// ---------------------------------------------------------------------------
// Formal enumeration of {0,1} normal forms for a given (lambda, mu).
// ---------------------------------------------------------------------------

struct FormalDiagram {
    LabeledDiagramShape shape;
    // entries[i][j-1]: -2 = the (1,1) tuple, -1 = zero, s >= 0 = e_s
    std::vector<std::vector<int>> entries;
};

std::vector<FormalDiagram> enumerate_reduced(const std::vector<int>& lambda,
                                             const std::vector<int>& mu);

}  // namespace parorbit
