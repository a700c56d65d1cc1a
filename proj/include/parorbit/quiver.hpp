#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "parorbit/errors.hpp"
#include "parorbit/matrix.hpp"

namespace parorbit {

// The four quiver shapes the library works with:
//
//   Qp          p vertices in a row, arrows a_1..a_{p-1} left to right, a loop
//               at every vertex; relations: loop^x and the commuting squares
//               loop_{i+1} a_i = a_i loop_i.
//   QLp_prime   p vertices, one arrow i -> j for every i < j, no relations.
//   QLp         QLp_prime plus a loop at every vertex, relations loop^x.
//   covering    n_rows x p commuting grid: horizontal arrows (k,l)->(k,l+1),
//               vertical arrows (k,l)->(k+1,l); relations: all commuting
//               squares, and vertical compositions of length x vanish.
struct QuiverPreset {
    enum class Kind { Qp, QLp_prime, QLp, covering };

    Kind kind = Kind::Qp;
    int p = 1;
    int n_rows = 0;  // covering only
    int x = 1;       // nilpotency bound for loops / vertical chains

    struct Arrow {
        int src, dst;
        std::string name;
    };
    struct Relation {
        std::vector<int> lhs, rhs;  // arrow ids applied left to right; rhs may be empty (=> lhs = 0)
    };

    int num_vertices() const;
    const std::vector<Arrow>& arrows() const;
    const std::vector<Relation>& relations() const;

    // covering-grid vertex bookkeeping; row 1 is the top row
    int grid_vertex(int row, int col) const;
    int grid_horizontal(int row, int col) const;  // arrow id (row,col)->(row,col+1)
    int grid_vertical(int row, int col) const;    // arrow id (row,col)->(row+1,col)

    bool operator==(const QuiverPreset& o) const {
        return kind == o.kind && p == o.p && n_rows == o.n_rows && x == o.x;
    }

    static QuiverPreset make(Kind k, int p, int n_rows, int x) {
        QuiverPreset q;
        q.kind = k;
        q.p = p;
        q.n_rows = n_rows;
        q.x = x;
        return q;
    }
    static QuiverPreset qp(int p, int x) { return make(Kind::Qp, p, 0, x); }
    static QuiverPreset levi_nilradical(int p) { return make(Kind::QLp_prime, p, 0, 1); }
    static QuiverPreset levi_cone(int p, int x) { return make(Kind::QLp, p, 0, x); }
    static QuiverPreset covering(int p, int n_rows, int x) {
        return make(Kind::covering, p, n_rows, x);
    }

    std::string str() const;

private:
    mutable std::vector<Arrow> arrows_;
    mutable std::vector<Relation> relations_;
    mutable bool built_ = false;
    void build() const;
};

template <class F>
struct Rep {
    QuiverPreset preset;
    F field;
    std::vector<int> dims;
    std::vector<Mat<F>> maps;  // maps[e]: dims[src] -> dims[dst], stored dims[dst] x dims[src]

    Rep(QuiverPreset q, F f, std::vector<int> d)
        : preset(q), field(f), dims(std::move(d)) {
        if (static_cast<int>(dims.size()) != preset.num_vertices())
            throw SizeMismatch("Rep: dimension vector length");
        for (const auto& a : preset.arrows())
            maps.emplace_back(f, dims[a.dst], dims[a.src]);
    }

    Mat<F>& map(int arrow) { return maps[arrow]; }
    const Mat<F>& map(int arrow) const { return maps[arrow]; }

    int total_dim() const {
        int t = 0;
        for (int d : dims) t += d;
        return t;
    }

    Mat<F> eval_path(const std::vector<int>& path) const {
        const auto& as = preset.arrows();
        Mat<F> acc = maps[path[0]];
        for (size_t i = 1; i < path.size(); ++i) {
            if (as[path[i]].src != as[path[i - 1]].dst)
                throw std::logic_error("eval_path: arrows do not compose");
            acc = maps[path[i]] * acc;
        }
        return acc;
    }

    bool relations_hold() const {
        for (const auto& r : preset.relations()) {
            Mat<F> lhs = eval_path(r.lhs);
            if (r.rhs.empty()) {
                if (!lhs.is_zero()) return false;
            } else if (!(lhs == eval_path(r.rhs))) {
                return false;
            }
        }
        return true;
    }

    void validate() const {
        const auto& as = preset.arrows();
        for (size_t e = 0; e < as.size(); ++e)
            if (maps[e].rows != dims[as[e].dst] || maps[e].cols != dims[as[e].src])
                throw SizeMismatch("Rep: map shape at arrow " + as[e].name);
        if (!relations_hold()) throw RelationViolation("Rep: bound-ideal relations fail");
    }

    friend Rep direct_sum(const Rep& a, const Rep& b) {
        if (!(a.preset == b.preset)) throw PresetMismatch("direct_sum: presets differ");
        std::vector<int> d(a.dims.size());
        for (size_t v = 0; v < d.size(); ++v) d[v] = a.dims[v] + b.dims[v];
        Rep r(a.preset, a.field, d);
        const auto& as = a.preset.arrows();
        for (size_t e = 0; e < as.size(); ++e) {
            r.maps[e].paste(0, 0, a.maps[e]);
            r.maps[e].paste(a.dims[as[e].dst], a.dims[as[e].src], b.maps[e]);
        }
        return r;
    }

    // conjugate by invertible vertex maps g_v: new_map = g_dst * map * g_src^{-1}
    Rep conjugated(const std::vector<Mat<F>>& g) const {
        Rep r = *this;
        const auto& as = preset.arrows();
        std::vector<Mat<F>> ginv;
        for (const auto& m : g) {
            Mat<F> inv(field, 0, 0);
            if (!invert(m, inv)) throw std::invalid_argument("conjugated: singular vertex map");
            ginv.push_back(inv);
        }
        for (size_t e = 0; e < as.size(); ++e)
            r.maps[e] = g[as[e].dst] * maps[e] * ginv[as[e].src];
        return r;
    }
};

// Morphism space Hom(a, b): tuples (f_v) with f_dst A_e = B_e f_src.
// Basis elements are vertex-indexed matrix tuples.
template <class F>
struct HomBasis {
    std::vector<int> src_dims, dst_dims;
    std::vector<std::vector<Mat<F>>> basis;  // basis[k][v]

    int dim() const { return static_cast<int>(basis.size()); }
};

template <class F>
HomBasis<F> hom_space(const Rep<F>& a, const Rep<F>& b) {
    if (!(a.preset == b.preset)) throw PresetMismatch("hom_space: presets differ");
    const F& f = a.field;
    const int nv = a.preset.num_vertices();

    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + a.dims[v] * b.dims[v];
    const int unknowns = offset[nv];

    // rows: one linear equation per entry of f_dst A_e - B_e f_src
    const auto& as = a.preset.arrows();
    int eqs = 0;
    for (const auto& ar : as) eqs += b.dims[ar.dst] * a.dims[ar.src];
    Mat<F> sys(f, eqs, unknowns);
    int row = 0;
    for (size_t e = 0; e < as.size(); ++e) {
        int s = as[e].src, d = as[e].dst;
        const Mat<F>& A = a.maps[e];
        const Mat<F>& B = b.maps[e];
        for (int i = 0; i < b.dims[d]; ++i)
            for (int j = 0; j < a.dims[s]; ++j) {
                // (f_d A)_ij = sum_k f_d[i,k] A[k,j];  (B f_s)_ij = sum_k B[i,k] f_s[k,j]
                for (int k = 0; k < a.dims[d]; ++k)
                    sys.at(row, offset[d] + i * a.dims[d] + k) =
                        f.add(sys.at(row, offset[d] + i * a.dims[d] + k), A.at(k, j));
                for (int k = 0; k < b.dims[s]; ++k)
                    sys.at(row, offset[s] + k * a.dims[s] + j) =
                        f.sub(sys.at(row, offset[s] + k * a.dims[s] + j), B.at(i, k));
                ++row;
            }
    }

    Mat<F> ker = kernel_basis(sys);
    HomBasis<F> out;
    out.src_dims = a.dims;
    out.dst_dims = b.dims;
    for (int r = 0; r < ker.rows; ++r) {
        std::vector<Mat<F>> tuple;
        for (int v = 0; v < nv; ++v) {
            Mat<F> m(f, b.dims[v], a.dims[v]);
            for (int i = 0; i < b.dims[v]; ++i)
                for (int j = 0; j < a.dims[v]; ++j)
                    m.at(i, j) = ker.at(r, offset[v] + i * a.dims[v] + j);
            tuple.push_back(std::move(m));
        }
        out.basis.push_back(std::move(tuple));
    }
    return out;
}

template <class F>
int hom_dim(const Rep<F>& a, const Rep<F>& b) {
    return hom_space(a, b).dim();
}

template <class F>
bool tuple_invertible(const std::vector<Mat<F>>& t) {
    for (const auto& m : t)
        if (!is_invertible(m)) return false;
    return true;
}

struct IsoOptions {
    uint64_t budget = 1ull << 22;  // exhaustive / grid enumeration cap
    uint64_t seed = 1;
    int random_tries = 64;  // cheap certificate search before enumerating
};

namespace detail {

template <class F>
std::vector<Mat<F>> combine(const HomBasis<F>& H, const std::vector<typename F::Elem>& coef,
                            const F& f) {
    const int nv = static_cast<int>(H.src_dims.size());
    std::vector<Mat<F>> t;
    for (int v = 0; v < nv; ++v) t.emplace_back(f, H.dst_dims[v], H.src_dims[v]);
    for (size_t k = 0; k < H.basis.size(); ++k) {
        if (f.is_zero(coef[k])) continue;
        for (int v = 0; v < nv; ++v)
            for (size_t i = 0; i < t[v].a.size(); ++i)
                t[v].a[i] = f.add(t[v].a[i], f.mul(coef[k], H.basis[k][v].a[i]));
    }
    return t;
}

}  // namespace detail

// Exact isomorphism test.
//
// After the cheap invariants (dimension vector, the four Hom dimensions), the
// question is whether some K-combination of the Hom basis is invertible at
// every vertex. Over GF(q) the combinations are enumerated exhaustively when
// q^dim fits the budget; over Q the product-of-determinants polynomial has
// total degree D = sum of vertex dimensions, so scanning the integer grid
// {0..D}^dim is a complete decision procedure. Random sampling is only ever
// used to find a positive certificate early, never to conclude "false".
template <class F>
bool is_isomorphic(const Rep<F>& a, const Rep<F>& b, IsoOptions opt = {});

template <>
inline bool is_isomorphic<PrimeField>(const Rep<PrimeField>& a, const Rep<PrimeField>& b,
                                      IsoOptions opt) {
    if (!(a.preset == b.preset) || !(a.field == b.field)) return false;
    if (a.dims != b.dims) return false;
    if (a.total_dim() == 0) return true;
    HomBasis<PrimeField> H = hom_space(a, b);
    const int r = H.dim();
    if (r == 0) return false;
    if (hom_dim(a, a) != r || hom_dim(b, b) != r || hom_dim(b, a) != r) return false;

    const PrimeField& f = a.field;
    // quick certificate: basis elements, then seeded random combinations
    for (int k = 0; k < r; ++k) {
        std::vector<PrimeField::Elem> c(r, 0);
        c[k] = 1;
        if (tuple_invertible(detail::combine(H, c, f))) return true;
    }
    std::mt19937_64 rng(opt.seed);
    for (int t = 0; t < opt.random_tries; ++t) {
        std::vector<PrimeField::Elem> c(r);
        for (auto& x : c) x = rng() % f.p;
        if (tuple_invertible(detail::combine(H, c, f))) return true;
    }
    // exhaustive decision
    double total = 1;
    for (int k = 0; k < r; ++k) {
        total *= f.p;
        if (total > static_cast<double>(opt.budget))
            throw BudgetExceeded("is_isomorphic: GF enumeration over budget");
    }
    std::vector<PrimeField::Elem> c(r, 0);
    while (true) {
        if (tuple_invertible(detail::combine(H, c, f))) return true;
        int k = 0;
        while (k < r && ++c[k] == f.p) c[k++] = 0;
        if (k == r) return false;
    }
}

template <>
inline bool is_isomorphic<Rationals>(const Rep<Rationals>& a, const Rep<Rationals>& b,
                                     IsoOptions opt) {
    if (!(a.preset == b.preset)) return false;
    if (a.dims != b.dims) return false;
    if (a.total_dim() == 0) return true;
    HomBasis<Rationals> H = hom_space(a, b);
    const int r = H.dim();
    if (r == 0) return false;
    if (hom_dim(a, a) != r || hom_dim(b, b) != r || hom_dim(b, a) != r) return false;

    const Rationals f;
    for (int k = 0; k < r; ++k) {
        std::vector<Rat> c(r, Rat(0));
        c[k] = Rat(1);
        if (tuple_invertible(detail::combine(H, c, f))) return true;
    }
    std::mt19937_64 rng(opt.seed);
    for (int t = 0; t < opt.random_tries; ++t) {
        std::vector<Rat> c(r, Rat(0));
        for (auto& x : c) x = Rat(static_cast<int64_t>(rng() % 7) - 3);
        if (tuple_invertible(detail::combine(H, c, f))) return true;
    }
    // deterministic grid of size (total degree + 1) per coordinate
    int deg = a.total_dim();
    double total = 1;
    for (int k = 0; k < r; ++k) {
        total *= deg + 1;
        if (total > static_cast<double>(opt.budget))
            throw BudgetExceeded("is_isomorphic: rational grid over budget");
    }
    std::vector<int> g(r, 0);
    while (true) {
        std::vector<Rat> c(r, Rat(0));
        for (int k = 0; k < r; ++k) c[k] = Rat(g[k]);
        if (tuple_invertible(detail::combine(H, c, f))) return true;
        int k = 0;
        while (k < r && ++g[k] == deg + 1) g[k++] = 0;
        if (k == r) return false;
    }
}

// End(r) as a structure-constant algebra over the hom basis.
template <class F>
struct EndAlgebra {
    HomBasis<F> hom;                   // basis of End(r)
    std::vector<Mat<F>> left_mult;     // left_mult[k]: coordinates of basis[k] * basis[j]
    F field;

    int dim() const { return hom.dim(); }
};

template <class F>
EndAlgebra<F> end_algebra(const Rep<F>& r) {
    const F& f = r.field;
    EndAlgebra<F> E{hom_space(r, r), {}, f};
    const int n = E.dim();
    const int nv = r.preset.num_vertices();

    // coordinates of an endomorphism tuple in the hom basis, via one linear solve
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + r.dims[v] * r.dims[v];
    Mat<F> basis_cols(f, offset[nv], n);
    for (int k = 0; k < n; ++k)
        for (int v = 0; v < nv; ++v)
            for (int i = 0; i < r.dims[v]; ++i)
                for (int j = 0; j < r.dims[v]; ++j)
                    basis_cols.at(offset[v] + i * r.dims[v] + j, k) = E.hom.basis[k][v].at(i, j);

    auto coords_of = [&](const std::vector<Mat<F>>& t) {
        Mat<F> rhs(f, offset[nv], 1);
        for (int v = 0; v < nv; ++v)
            for (int i = 0; i < r.dims[v]; ++i)
                for (int j = 0; j < r.dims[v]; ++j)
                    rhs.at(offset[v] + i * r.dims[v] + j, 0) = t[v].at(i, j);
        Mat<F> x(f, n, 1);
        if (!solve(basis_cols, rhs, x))
            throw std::logic_error("end_algebra: product escaped the algebra");
        return x;
    };

    for (int k = 0; k < n; ++k) {
        Mat<F> lm(f, n, n);
        for (int j = 0; j < n; ++j) {
            std::vector<Mat<F>> prod;
            for (int v = 0; v < nv; ++v) prod.push_back(E.hom.basis[k][v] * E.hom.basis[j][v]);
            Mat<F> c = coords_of(prod);
            for (int i = 0; i < n; ++i) lm.at(i, j) = c.at(i, 0);
        }
        E.left_mult.push_back(std::move(lm));
    }
    return E;
}

// Indecomposability via locality of End(r).
//
// The radical is computed as the kernel of the trace form (x, y) -> trace of
// left multiplication by xy on End. Over Q this is exactly the radical; over
// GF(q) it is still exact as long as q exceeds the matrix sizes of the
// semisimple quotient, which q > dim End guarantees. Small finite fields fall
// back to exhaustive idempotent search within a budget.
template <class F>
bool endomorphism_local(const Rep<F>& r, uint64_t budget = 1ull << 22);

template <class F>
int trace_form_radical_dim(const EndAlgebra<F>& E) {
    const F& f = E.field;
    const int n = E.dim();
    // gram[i][j] = Tr(L_{basis_i basis_j}) = sum_k (L_i L_j)[k,k]
    Mat<F> gram(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat<F> prod = E.left_mult[i] * E.left_mult[j];
            gram.at(i, j) = trace(prod);
        }
    return n - rank(gram);
}

template <>
inline bool endomorphism_local<Rationals>(const Rep<Rationals>& r, uint64_t) {
    if (r.total_dim() == 0) return false;
    EndAlgebra<Rationals> E = end_algebra(r);
    return E.dim() - trace_form_radical_dim(E) == 1;
}

template <>
inline bool endomorphism_local<PrimeField>(const Rep<PrimeField>& r, uint64_t budget) {
    if (r.total_dim() == 0) return false;
    EndAlgebra<PrimeField> E = end_algebra(r);
    const PrimeField& f = r.field;
    const int n = E.dim();
    if (f.p > static_cast<uint64_t>(n)) return n - trace_form_radical_dim(E) == 1;
    // exhaustive idempotent search: decomposable iff a nontrivial idempotent exists
    double total = 1;
    for (int k = 0; k < n; ++k) {
        total *= f.p;
        if (total > static_cast<double>(budget))
            throw FieldNotSupported("endomorphism_local: small field and End too large");
    }
    // identity coordinates
    std::vector<Mat<PrimeField>> id_tuple;
    for (size_t v = 0; v < r.dims.size(); ++v)
        id_tuple.push_back(Mat<PrimeField>::identity(f, r.dims[v]));

    std::vector<PrimeField::Elem> c(n, 0);
    while (true) {
        auto t = detail::combine(E.hom, c, f);
        // idempotent? compare t*t with t
        bool idem = true, zero = true, ident = true;
        for (size_t v = 0; v < t.size() && idem; ++v) {
            Mat<PrimeField> sq = t[v] * t[v];
            if (!(sq == t[v])) idem = false;
            if (!t[v].is_zero()) zero = false;
            if (!(t[v] == id_tuple[v])) ident = false;
        }
        if (idem && !zero && !ident) return false;
        int k = 0;
        while (k < n && ++c[k] == f.p) c[k++] = 0;
        if (k == n) break;
    }
    return true;
}

}  // namespace parorbit
