#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "parorbit/errors.hpp"
#include "parorbit/matrix.hpp"
#include "parorbit/subspace.hpp"

namespace parorbit {

// Sparse multivariate polynomial in a fixed number of variables. Only the
// operations needed for characteristic-polynomial expansion.
template <class F>
struct MPoly {
    using Elem = typename F::Elem;
    using Key = std::vector<uint16_t>;

    F field;
    int nvars;
    std::map<Key, Elem> terms;

    MPoly(F f, int nv) : field(f), nvars(nv) {}

    static MPoly constant(F f, int nv, const Elem& c) {
        MPoly p(f, nv);
        if (!f.is_zero(c)) p.terms[Key(nv, 0)] = c;
        return p;
    }
    static MPoly variable(F f, int nv, int i, const Elem& coef) {
        MPoly p(f, nv);
        if (!f.is_zero(coef)) {
            Key k(nv, 0);
            k[i] = 1;
            p.terms[k] = coef;
        }
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Key& k, const Elem& c) {
        auto it = terms.find(k);
        if (it == terms.end()) {
            if (!field.is_zero(c)) terms.emplace(k, c);
        } else {
            it->second = field.add(it->second, c);
            if (field.is_zero(it->second)) terms.erase(it);
        }
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [k, c] : b.terms) r.add_term(k, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [k, c] : b.terms) r.add_term(k, a.field.neg(c));
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.field, a.nvars);
        for (const auto& [ka, ca] : a.terms)
            for (const auto& [kb, cb] : b.terms) {
                Key k(a.nvars);
                for (int i = 0; i < a.nvars; ++i) k[i] = static_cast<uint16_t>(ka[i] + kb[i]);
                r.add_term(k, a.field.mul(ca, cb));
            }
        return r;
    }
};

// det by cofactor expansion along the first row; fine at the handful of rows
// the symbolic check ever sees.
template <class F>
MPoly<F> mpoly_det(const std::vector<std::vector<MPoly<F>>>& m, size_t term_budget) {
    size_t n = m.size();
    if (n == 0) throw std::invalid_argument("mpoly_det: empty");
    if (n == 1) return m[0][0];
    MPoly<F> acc(m[0][0].field, m[0][0].nvars);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MPoly<F>>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<MPoly<F>> row;
            row.reserve(n - 1);
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        MPoly<F> sub = mpoly_det(minor, term_budget);
        MPoly<F> prod = m[0][j] * sub;
        if (j % 2 == 1)
            acc = acc - prod;
        else
            acc = acc + prod;
        if (acc.terms.size() > term_budget)
            throw DimensionTooLarge("symbolic determinant exceeded term budget");
    }
    return acc;
}

// Decide whether every element of a subspace of n x n matrices is nilpotent,
// by expanding the characteristic polynomial of a generic element with one
// indeterminate per basis vector and checking that every non-leading
// coefficient vanishes identically. The j-th coefficient is the sum of all
// principal j x j minors, so nilpotency of the whole space is equivalent to
// all of those sums being the zero polynomial.
template <class F>
bool is_nilpotent_subspace(const Subspace<F>& s, int n, size_t term_budget = 200000) {
    const F& f = s.basis.field;
    if (s.ambient_dim != n * n) throw SizeMismatch("is_nilpotent_subspace: ambient != n^2");
    int d = s.dim();
    if (d == 0) return true;
    if (n > 8) throw DimensionTooLarge("is_nilpotent_subspace: matrix side too large");

    // generic element, entries linear in x_1..x_d
    std::vector<std::vector<MPoly<F>>> gen(
        n, std::vector<MPoly<F>>(n, MPoly<F>(f, d)));
    for (int r = 0; r < d; ++r)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto& c = s.basis.at(r, i * n + j);
                if (!f.is_zero(c)) gen[i][j] = gen[i][j] + MPoly<F>::variable(f, d, r, c);
            }

    // coefficient j of the characteristic polynomial = sum of the principal
    // j x j minors; individual minors need not vanish, only the sums do
    std::vector<MPoly<F>> coeff(n + 1, MPoly<F>(f, d));
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        std::vector<std::vector<MPoly<F>>> minor(
            idx.size(), std::vector<MPoly<F>>(idx.size(), MPoly<F>(f, d)));
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < idx.size(); ++j) minor[i][j] = gen[idx[i]][idx[j]];
        size_t sz = idx.size();
        coeff[sz] = coeff[sz] + mpoly_det(minor, term_budget);
        if (coeff[sz].terms.size() > term_budget)
            throw DimensionTooLarge("symbolic coefficient exceeded term budget");
    }
    for (int j = 1; j <= n; ++j)
        if (!coeff[j].is_zero()) return false;
    return true;
}

}  // namespace parorbit
