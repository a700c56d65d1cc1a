#pragma once

#include "parorbit/young_reduce.hpp"

namespace parorbit {

// Normalization reports for the auxiliary data that upgrades a two-block
// normal form to the neighbouring block shapes: an extra functional on V, an
// extra vector in U, a functional on U, or a flag inside U. Each report
// records the finite invariant the proof extracts, so callers can count
// classes.
struct ExtendReport {
    std::string kind;
    bool trivial = false;            // zero auxiliary data
    std::string branch;              // which proof branch applied
    std::vector<int> epsilon;        // 0/1 support pattern (vector/functional kinds)
    int part_class = 0;              // lambda part size carrying the functional
    int i_bullet = 0;                // 1-based row where it normalizes
    std::vector<int> admissible_rows;  // ends of the distinct lambda-part classes
};

enum class ExtendKind { right_functional, left_vector, left_functional, flag };

namespace extend_detail {

inline std::vector<int> distinct_part_ends(const std::vector<int>& lambda) {
    std::vector<int> ends;
    for (size_t i = 0; i < lambda.size(); ++i)
        if (i + 1 == lambda.size() || lambda[i + 1] < lambda[i])
            ends.push_back(static_cast<int>(i) + 1);
    return ends;
}

}  // namespace extend_detail

// Functional phi on V with U <= ker(phi) and ker(phi) f-stable. Stability of
// the kernel forces phi to vanish on im(f), so phi lives on the chain tops;
// admissible base changes reduce it to the dual of a single top v_{i,lambda_i}
// where the part size lambda_i is the only invariant. Classes: one per
// distinct part plus zero.
template <class F>
ExtendReport extend_right_functional(const PairModel<F>& m,
                                     const std::vector<typename F::Elem>& phi) {
    const F& f = m.field;
    const int k = m.shape.k();
    ExtendReport rep;
    rep.kind = "right_functional";
    rep.admissible_rows = extend_detail::distinct_part_ends(m.shape.lambda);

    // ker(phi) f-stable <=> phi . f = 0
    auto pf = mat_apply(m.f0.transpose(), phi);
    for (const auto& c : pf)
        if (!f.is_zero(c)) throw NotStable("right_functional: kernel is not f-stable");
    // U <= ker(phi)
    for (int mm = 0; mm < m.shape.h(); ++mm) {
        auto v = m.utops[mm];
        for (int t = m.shape.mu[mm]; t >= 1; --t) {
            auto acc = f.zero();
            for (int r = 0; r < k; ++r) acc = f.add(acc, f.mul(phi[r], v[r]));
            if (!f.is_zero(acc))
                throw NotStable("right_functional: functional does not vanish on U");
            v = mat_apply(m.f0, v);
        }
    }

    int best = 0, best_row = 0;
    for (int i = 0; i < m.shape.g(); ++i) {
        int col = m.vcol(i, m.shape.lambda[i]);
        auto acc = f.zero();
        for (int r = 0; r < k; ++r) acc = f.add(acc, f.mul(phi[r], m.vbasis.at(r, col)));
        if (!f.is_zero(acc) && m.shape.lambda[i] > best) {
            best = m.shape.lambda[i];
            best_row = i + 1;
        }
    }
    if (best == 0) {
        rep.trivial = true;
        rep.branch = "zero functional";
        return rep;
    }
    rep.part_class = best;
    // normal position: the last row of the part class
    for (int i = 0; i < m.shape.g(); ++i)
        if (m.shape.lambda[i] == best) rep.i_bullet = i + 1;
    (void)best_row;
    rep.branch = "top dual of a part of size " + std::to_string(best);
    return rep;
}

// Extra vector u' in U with f(u') = 0: expand over the chain bottoms and
// normalize the coefficients to 0/1 (rescaling chains undoes itself on the
// reduced diagram row by row).
template <class F>
ExtendReport extend_left_vector(const PairModel<F>& m,
                                const std::vector<typename F::Elem>& uprime) {
    const F& f = m.field;
    const int k = m.shape.k(), h = m.shape.h();
    ExtendReport rep;
    rep.kind = "left_vector";
    auto fu = mat_apply(m.f0, uprime);
    for (const auto& c : fu)
        if (!f.is_zero(c)) throw NotStable("left_vector: vector is not in ker f");

    // chain bottoms u_{m,1}
    Mat<F> bottoms(f, k, h);
    for (int mm = 0; mm < h; ++mm) {
        auto v = m.utops[mm];
        for (int t = 1; t < m.shape.mu[mm]; ++t) v = mat_apply(m.f0, v);
        for (int r = 0; r < k; ++r) bottoms.at(r, mm) = v[r];
    }
    Mat<F> rhs(f, k, 1), eta(f, h, 1);
    for (int r = 0; r < k; ++r) rhs.at(r, 0) = uprime[r];
    if (!solve(bottoms, rhs, eta))
        throw NotStable("left_vector: vector is not in U");

    bool zero = true;
    for (int mm = 0; mm < h; ++mm) {
        bool nz = !f.is_zero(eta.at(mm, 0));
        rep.epsilon.push_back(nz ? 1 : 0);
        zero = zero && !nz;
    }
    rep.trivial = zero;
    if (m.shape.mu[0] <= 2) {
        rep.branch = "support pattern over the chain bottoms";
    } else if (rep.epsilon[0] == 1 && h == 1) {
        rep.branch = "inside the deep image of the long chain";
    } else if (m.shape.mu == std::vector<int>{3, 1} && rep.epsilon[1] == 1) {
        rep.branch = "complement of the deep image, re-anchored as the short chain";
    } else {
        rep.branch = "inside the deep image of the long chain";
    }
    return rep;
}

// Functional psi on U with f|U-stable kernel: psi vanishes on im(f|U), so it
// is determined by its values on the chain tops; those normalize to 0/1.
template <class F>
ExtendReport extend_left_functional(const PairModel<F>& m,
                                    const std::vector<typename F::Elem>& psi_on_tops) {
    const F& f = m.field;
    ExtendReport rep;
    rep.kind = "left_functional";
    if (static_cast<int>(psi_on_tops.size()) != m.shape.h())
        throw SizeMismatch("left_functional: one value per chain top");
    bool zero = true;
    for (const auto& c : psi_on_tops) {
        rep.epsilon.push_back(f.is_zero(c) ? 0 : 1);
        zero = zero && f.is_zero(c);
    }
    rep.trivial = zero;
    if (m.shape.mu[0] <= 2)
        rep.branch = "support pattern over the chain tops";
    else if (m.shape.mu == std::vector<int>{3, 1} && rep.epsilon[0] == 1)
        rep.branch = "kernel transverse to the long chain, re-anchored basis";
    else
        rep.branch = "kernel contains the long chain";
    return rep;
}

// Flag U'' < U' < U of dimensions (1, 2) inside a 3-dimensional U, all
// f-stable. The branch on mu decides how much of the flag is forced.
template <class F>
ExtendReport extend_flag(const PairModel<F>& m, const Subspace<F>& u2, const Subspace<F>& u1) {
    const F& f = m.field;
    ExtendReport rep;
    rep.kind = "flag";
    if (m.shape.l() != 3 || u1.dim() != 1 || u2.dim() != 2)
        throw SizeMismatch("flag: need dims (1,2) inside |mu| = 3");
    auto stable = [&](const Subspace<F>& s) {
        for (int r = 0; r < s.dim(); ++r) {
            std::vector<typename F::Elem> v(s.ambient_dim, f.zero());
            for (int c = 0; c < s.ambient_dim; ++c) v[c] = s.basis.at(r, c);
            auto fv = mat_apply(m.f0, v);
            Mat<F> row(f, 1, s.ambient_dim);
            for (int c = 0; c < s.ambient_dim; ++c) row.at(0, c) = fv[c];
            if (!s.contains(row)) return false;
        }
        return true;
    };
    if (!stable(u1) || !stable(u2)) throw NotStable("flag: subspaces are not f-stable");

    if (m.shape.mu == std::vector<int>{3}) {
        rep.branch = "single chain: flag forced by depth";
        rep.trivial = true;
        return rep;
    }
    if (m.shape.mu == std::vector<int>{2, 1}) {
        // is U' the kernel of f on U?  ker(f|U) = span{u_{1,1}, u_{2,1}}
        Mat<F> kerrows(f, 2, m.shape.k());
        auto b1 = mat_apply(m.f0, m.utops[0]);
        for (int c = 0; c < m.shape.k(); ++c) kerrows.at(0, c) = b1[c];
        for (int c = 0; c < m.shape.k(); ++c) kerrows.at(1, c) = m.utops[1][c];
        auto kerf = Subspace<F>::span_rows(kerrows);
        rep.branch = (u2 == kerf) ? "middle space is ker(f|U): reduces to the vector case"
                                  : "middle space moves: forced line f(U'), functional case";
        return rep;
    }
    rep.branch = "semisimple chains: triangular subgroup reduction on column 1";
    return rep;
}

}  // namespace parorbit
