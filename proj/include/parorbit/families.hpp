#pragma once

#include <optional>

#include "parorbit/classifier.hpp"
#include "parorbit/grid.hpp"
#include "parorbit/mpoly.hpp"
#include "parorbit/oracle.hpp"
#include "parorbit/polyq.hpp"
#include "parorbit/translate.hpp"

namespace parorbit {

// ---------------------------------------------------------------------------
// Explicit one-parameter families of pairwise non-conjugate nilpotent
// elements, one per minimal infinite block shape, together with certificates
// that re-verify membership, pairwise non-isomorphism and the injectivity of
// every small-to-large map. The two Levi families are plain matrices; the
// rest are assembled on the covering grid and pushed down.
//
// The figures fix the dimension data of each family; the parameter placement
// (one designated map carrying t) follows the standard one-parameter families
// of the tame quivers and is validated by the certificate, not assumed. See
// docs/family_layouts.md for the exact grids.
// ---------------------------------------------------------------------------

enum class FamilyName {
    levi_nilr_111,
    levi_cone_22,
    d4_222,
    e6_66,
    e6_414,
    e6_146,
    e6_1441,
    e6_1214,
    e6_12121,
    ext_kk,
    commuting_pair,
};

struct FamilySpec {
    FamilyName name;
    int k = 0, n = 0;  // ext_kk / commuting_pair dimensions

    BlockVector bv() const;
    bool levi() const {
        return name == FamilyName::levi_nilr_111 || name == FamilyName::levi_cone_22;
    }
    std::string str() const;
    static FamilySpec parse(const std::string& name, int k = 0, int n = 0);
};

// Grid layout of a covering-built family: dimension per (row, col) plus a map
// label per arrow. Labels name the six structure maps of the underlying tame
// quiver, identities, and their composites.
struct FamilyGrid {
    int p = 0, rows = 0;
    std::vector<std::vector<int>> dims;                       // [row][col]
    std::vector<std::tuple<int, int, bool, std::string>> maps;  // row, col, horizontal?, label
};

const FamilyGrid& family_grid(FamilyName name, int k, int n);

namespace family_detail {

template <class F>
Mat<F> base_map(const F& f, const std::string& label, const typename F::Elem& t) {
    auto mk = [&](int r, int c, std::initializer_list<int64_t> v) {
        return Mat<F>::from_ints(f, r, c, v);
    };
    // structure maps of the tame-quiver configuration: three flags in the
    // three-dimensional center, the parameter moving the kernel line of the
    // outgoing map
    if (label == "a") return mk(2, 1, {1, 0});
    if (label == "c") return mk(2, 1, {0, 1});
    if (label == "b") return mk(3, 2, {1, 0, 0, 1, 0, 0});
    if (label == "d") return mk(3, 2, {0, 0, 1, 0, 0, 1});
    if (label == "f") {
        Mat<F> m(f, 2, 3);
        m.at(0, 0) = f.one();
        m.at(0, 2) = f.one();
        m.at(1, 1) = f.one();
        m.at(1, 2) = t;
        return m;
    }
    if (label == "e") return mk(1, 2, {1, 1});
    if (label == "e_in") return mk(2, 1, {1, 1});
    if (label == "id1") return Mat<F>::identity(f, 1);
    if (label == "id2") return Mat<F>::identity(f, 2);
    if (label == "id3") return Mat<F>::identity(f, 3);
    // composites
    if (label == "ba") return base_map(f, "b", t) * base_map(f, "a", t);
    if (label == "dc") return base_map(f, "d", t) * base_map(f, "c", t);
    if (label == "fb") return base_map(f, "f", t) * base_map(f, "b", t);
    if (label == "fba") return base_map(f, "fb", t) * base_map(f, "a", t);
    // the four-subspace configuration: three injections and the parameter
    // functional on the plane
    if (label == "w_a") return mk(2, 1, {1, 0});
    if (label == "w_b") return mk(2, 1, {0, 1});
    if (label == "w_d") return mk(2, 1, {1, 1});
    if (label == "w_c") {
        Mat<F> m(f, 1, 2);
        m.at(0, 0) = f.one();
        m.at(0, 1) = t;
        return m;
    }
    if (label == "w_ca") return base_map(f, "w_c", t) * base_map(f, "w_a", t);
    throw std::invalid_argument("base_map: unknown label " + label);
}

}  // namespace family_detail

// the covering representation of a figure family at parameter t
template <class F>
Rep<F> family_cover(const FamilySpec& spec, F f, const typename F::Elem& t) {
    const FamilyGrid& g = family_grid(spec.name, spec.k, spec.n);
    QuiverPreset q = QuiverPreset::covering(g.p, g.rows, g.rows);
    std::vector<int> dims(q.num_vertices(), 0);
    for (int r = 1; r <= g.rows; ++r)
        for (int c = 1; c <= g.p; ++c) dims[q.grid_vertex(r, c)] = g.dims[r - 1][c - 1];
    Rep<F> rep(q, f, dims);
    for (const auto& [row, col, horiz, label] : g.maps) {
        int arrow = horiz ? q.grid_horizontal(row, col) : q.grid_vertical(row, col);
        rep.map(arrow) = family_detail::base_map(f, label, t);
    }
    rep.validate();
    return rep;
}

template <class F>
Mat<F> build_family_member(const FamilySpec& spec, F f, const typename F::Elem& t) {
    if (spec.name == FamilyName::levi_nilr_111) {
        Mat<F> m(f, 3, 3);
        m.at(0, 1) = f.one();
        m.at(0, 2) = t;
        m.at(1, 2) = f.one();
        return m;
    }
    if (spec.name == FamilyName::levi_cone_22) {
        // loops are the vertical shifts, the connecting block is diag(1, t)
        Mat<F> m(f, 4, 4);
        m.at(1, 0) = f.one();
        m.at(3, 2) = f.one();
        m.at(0, 2) = f.one();
        m.at(1, 3) = t;
        return m;
    }
    if (spec.name == FamilyName::commuting_pair)
        throw std::invalid_argument("build_family_member: commuting pairs have two members");
    Rep<F> cover = family_cover(spec, f, t);
    Rep<F> down = push_down(cover);
    auto [shape, N] = rep_to_matrix(down);
    if (!(shape.bv == spec.bv()))
        throw std::logic_error("family: pushed-down block sizes disagree with the figure");
    return N;
}

// ---------------------------------------------------------------------------
// Certificates.
// ---------------------------------------------------------------------------

struct CertCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct Certificate {
    std::string family;
    std::vector<CertCheck> checks;
    bool pass = true;
    void add(std::string name, bool ok, std::string detail = "") {
        pass = pass && ok;
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

template <class F>
Certificate certify_family(const FamilySpec& spec, F f,
                           const std::vector<typename F::Elem>& sample,
                           uint64_t conj_search_budget = 1u << 20) {
    Certificate cert;
    cert.family = spec.str();
    ParabolicShape shape(spec.bv());

    // duplicate parameters fail the pairwise check up front
    bool dup = false;
    for (size_t i = 0; i < sample.size(); ++i)
        for (size_t j = i + 1; j < sample.size(); ++j)
            if (f.eq(sample[i], sample[j])) dup = true;
    cert.add("sample parameters distinct", !dup);

    std::vector<Mat<F>> members;
    bool member_ok = true, entries_ok = true, inj_ok = true;
    std::string member_detail;
    for (const auto& t : sample) {
        Mat<F> m = build_family_member(spec, f, t);
        // membership
        bool in =
            spec.name == FamilyName::levi_nilr_111
                ? contains(shape, m, BlockPattern::nilradical)
                : in_nilpotent_cone(shape, m, shape.n());
        if (!in) {
            member_ok = false;
            member_detail = "member escaped the target at one parameter";
        }
        for (const auto& e : m.a)
            if (!(f.is_zero(e) || f.eq(e, f.one()) || f.eq(e, t) ||
                  f.eq(e, f.neg(f.one()))))
                entries_ok = false;
        if (!spec.levi()) {
            Rep<F> cover = family_cover(spec, f, t);
            if (!horizontals_injective(cover)) inj_ok = false;
            // every map from a smaller to a larger space must be injective
            const auto& as = cover.preset.arrows();
            for (size_t e = 0; e < as.size(); ++e) {
                const Mat<F>& mp = cover.maps[e];
                if (mp.cols < mp.rows && mp.cols > 0 && rank(mp) != mp.cols) inj_ok = false;
            }
        }
        members.push_back(std::move(m));
    }
    cert.add("members lie in the target set", member_ok, member_detail);
    cert.add("entries confined to {0, 1, t}", entries_ok);
    if (!spec.levi()) cert.add("small-to-large maps injective", inj_ok);

    // pairwise non-conjugacy through the representation translation
    bool distinct = true;
    std::string pair_detail;
    for (size_t i = 0; i < members.size() && distinct; ++i)
        for (size_t j = i + 1; j < members.size() && distinct; ++j) {
            bool iso;
            if (spec.levi()) {
                bool loops = spec.name == FamilyName::levi_cone_22;
                iso = is_isomorphic(
                    matrix_to_levi_rep(shape, members[i], loops, shape.n()),
                    matrix_to_levi_rep(shape, members[j], loops, shape.n()));
            } else {
                iso = is_isomorphic(matrix_to_rep(shape, members[i], shape.n()),
                                    matrix_to_rep(shape, members[j], shape.n()));
            }
            if (iso) {
                distinct = false;
                pair_detail = "parameters " + std::to_string(i) + " and " + std::to_string(j);
            }
        }
    cert.add("members pairwise non-isomorphic", distinct, pair_detail);
    (void)conj_search_budget;
    return cert;
}

// Exhaustive conjugacy search over the full rational-point group; only for
// tiny groups (the torus of the three-line Levi family and similar).
template <class F>
bool conjugate_by_group_search(const ParabolicShape& shape, OracleActing acting,
                               const Mat<F>& a, const Mat<F>& b, uint64_t budget);

bool levi_family_group_check(uint32_t q, const std::vector<uint64_t>& sample);

// ---------------------------------------------------------------------------
// Centralizers and distinguished elements.
// ---------------------------------------------------------------------------

// exact solution space of [x, .] = 0 inside the parabolic pattern, embedded
// in the n^2-dimensional matrix space
template <class F>
Subspace<F> centralizer_in_p(const ParabolicShape& shape, const Mat<F>& x) {
    if (!contains(shape, x, BlockPattern::parabolic))
        throw NotInParabolic("centralizer_in_p: element outside the parabolic");
    const F& f = x.field;
    const int n = shape.n();
    std::vector<std::pair<int, int>> pattern;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (shape.block_of(i) <= shape.block_of(j)) pattern.emplace_back(i, j);
    Mat<F> sys(f, n * n, static_cast<int>(pattern.size()));
    for (size_t c = 0; c < pattern.size(); ++c) {
        auto [pi, pj] = pattern[c];
        // d/dY_{pi,pj} of (x Y - Y x)_{r,s}
        for (int r = 0; r < n; ++r)
            sys.at(r * n + pj, static_cast<int>(c)) =
                f.add(sys.at(r * n + pj, static_cast<int>(c)), x.at(r, pi));
        for (int s = 0; s < n; ++s)
            sys.at(pi * n + s, static_cast<int>(c)) =
                f.sub(sys.at(pi * n + s, static_cast<int>(c)), x.at(pj, s));
    }
    Mat<F> ker = kernel_basis(sys);
    Mat<F> rows(f, ker.rows, n * n);
    for (int r = 0; r < ker.rows; ++r)
        for (size_t c = 0; c < pattern.size(); ++c)
            rows.at(r, pattern[c].first * n + pattern[c].second) = ker.at(r, static_cast<int>(c));
    return Subspace<F>::span_rows(rows);
}

template <class F>
Subspace<F> intersect_trace_zero(const Subspace<F>& s, int n) {
    const F& f = s.basis.field;
    // kernel of the trace functional restricted to the span
    Mat<F> tr(f, 1, s.dim());
    for (int r = 0; r < s.dim(); ++r) {
        auto acc = f.zero();
        for (int i = 0; i < n; ++i) acc = f.add(acc, s.basis.at(r, i * n + i));
        tr.at(0, r) = acc;
    }
    Mat<F> ker = kernel_basis(tr);
    Mat<F> rows(f, ker.rows, n * n);
    for (int r = 0; r < ker.rows; ++r)
        for (int c = 0; c < s.dim(); ++c) {
            const auto& w = ker.at(r, c);
            if (f.is_zero(w)) continue;
            for (int j = 0; j < n * n; ++j)
                rows.at(r, j) = f.add(rows.at(r, j), f.mul(w, s.basis.at(c, j)));
        }
    return Subspace<F>::span_rows(rows);
}

enum class DistinguishedMethod { both, nilpotency_only, indecomposability_only };

struct DistinguishedResult {
    bool distinguished;
    DistinguishedMethod method;
};

// An element is distinguished when its parabolic centralizer meets the
// traceless matrices only in nilpotents; equivalently its representation is
// indecomposable. Both routes are run when available and must agree.
template <class F>
DistinguishedResult is_distinguished(const ParabolicShape& shape, const Mat<F>& x,
                                     size_t symbolic_budget = 200000) {
    const int n = shape.n();
    std::optional<bool> via_nilp;
    try {
        Subspace<F> cz = centralizer_in_p(shape, x);
        Subspace<F> sl = intersect_trace_zero(cz, n);
        via_nilp = is_nilpotent_subspace(sl, n, symbolic_budget);
    } catch (const DimensionTooLarge&) {
    }
    std::optional<bool> via_indec;
    try {
        via_indec = endomorphism_local(matrix_to_rep(shape, x, n));
    } catch (const FieldNotSupported&) {
    }
    if (via_nilp && via_indec) {
        if (*via_nilp != *via_indec)
            throw MethodsDisagree("distinguished: centralizer and endomorphism routes differ");
        return {*via_nilp, DistinguishedMethod::both};
    }
    if (via_nilp) return {*via_nilp, DistinguishedMethod::nilpotency_only};
    if (via_indec) return {*via_indec, DistinguishedMethod::indecomposability_only};
    throw DimensionTooLarge("distinguished: both routes out of budget");
}

struct CensusResult {
    int total_orbits;
    int distinguished_count;
    std::vector<Mat<Rationals>> representatives;  // lifted to characteristic zero
};

CensusResult distinguished_census(const ParabolicShape& shape, uint32_t q,
                                  OracleOptions opt = {});

// ---------------------------------------------------------------------------
// The commuting pair attached to d = (k, n), k >= 6, n - k >= 6.
// ---------------------------------------------------------------------------

template <class F>
struct CommutingPair {
    Mat<F> x, y;
};

template <class F>
CommutingPair<F> build_commuting_pair(int n, int k, F f, const typename F::Elem& t) {
    if (k < 6 || n - k < 6) throw ParamOutOfRange("commuting pair needs k >= 6, n - k >= 6");
    auto unit = [&](int i) {  // 1-based basis vector
        std::vector<typename F::Elem> v(n, f.zero());
        v[i - 1] = f.one();
        return v;
    };
    auto sub = [&](std::vector<typename F::Elem> a, const std::vector<typename F::Elem>& b,
                   const typename F::Elem& c) {
        for (int i = 0; i < n; ++i) a[i] = f.sub(a[i], f.mul(c, b[i]));
        return a;
    };

    // x: one long chain with a detour, two short chains merging into it
    Mat<F> x(f, n, n);
    auto set_col = [&](int src, const std::vector<typename F::Elem>& img) {
        for (int i = 0; i < n; ++i) x.at(i, src - 1) = img[i];
    };
    for (int i = n; i >= k + 4; --i) set_col(i, unit(i - 1));
    set_col(k + 3, unit(k - 1));
    set_col(k - 1, unit(k - 5));
    for (int i = k - 5; i >= 2; --i) set_col(i, unit(i - 1));
    // e_1 -> 0 already
    set_col(k + 2, unit(k + 1));
    set_col(k + 1, unit(k));
    {
        auto img = unit(k - 1);
        for (int i = 0; i < n; ++i) img[i] = f.add(img[i], unit(k - 4)[i]);
        set_col(k, img);
    }
    set_col(k - 2, unit(k - 3));
    set_col(k - 3, unit(k - 4));
    {
        std::vector<typename F::Elem> img(n, f.zero());
        img[k - 5 - 1] = t;
        set_col(k - 4, img);
    }

    // jordan-type basis of x for generic t
    auto one_plus_t = f.add(f.one(), t);
    std::vector<std::vector<typename F::Elem>> chain1;
    for (int i = n; i >= k + 3; --i) chain1.push_back(unit(i));
    chain1.push_back(unit(k - 1));
    for (int i = k - 5; i >= 1; --i) chain1.push_back(unit(i));
    std::vector<std::vector<typename F::Elem>> chain2 = {
        sub(unit(k + 2), unit(k + 5), one_plus_t),
        sub(unit(k + 1), unit(k + 4), one_plus_t),
        sub(unit(k), unit(k + 3), one_plus_t),
        sub(unit(k - 4), unit(k - 1), t),
    };
    std::vector<std::vector<typename F::Elem>> chain3 = {
        sub(sub(unit(k + 1), unit(k - 2), f.one()), unit(k + 4), f.one()),
        sub(sub(unit(k), unit(k - 3), f.one()), unit(k + 3), f.one()),
    };

    Mat<F> basis(f, n, n);
    std::vector<std::vector<typename F::Elem>> images;
    int col = 0;
    auto put = [&](const std::vector<typename F::Elem>& v,
                   const std::vector<typename F::Elem>& img) {
        for (int i = 0; i < n; ++i) basis.at(i, col) = v[i];
        images.push_back(img);
        ++col;
    };
    const std::vector<typename F::Elem> zero(n, f.zero());
    auto alpha = n == k + 6 ? t : f.zero();
    auto scaled = [&](std::vector<typename F::Elem> v) {
        for (auto& e : v) e = f.mul(e, alpha);
        return v;
    };
    for (size_t i = 0; i < chain1.size(); ++i) {
        if (i == 0) put(chain1[i], chain2[0]);
        else if (i == 1) put(chain1[i], chain2[1]);
        else if (i == 2) put(chain1[i], chain2[2]);
        else if (i == 3) put(chain1[i], chain2[3]);
        else put(chain1[i], zero);
    }
    put(chain2[0], chain3[0]);
    put(chain2[1], chain3[1]);
    put(chain2[2], zero);
    put(chain2[3], zero);
    put(chain3[0], scaled(chain2[2]));
    put(chain3[1], scaled(chain2[3]));

    Mat<F> binv(f, 0, 0);
    if (!invert(basis, binv))
        throw ParamOutOfRange("commuting pair: parameter makes the adapted basis singular");
    Mat<F> imgmat(f, n, n);
    for (int c = 0; c < n; ++c)
        for (int i = 0; i < n; ++i) imgmat.at(i, c) = images[c][i];
    Mat<F> y = imgmat * binv;
    return {x, y};
}

// Krylov closure of e_n under both maps; cyclic iff it fills the space.
template <class F>
bool has_cyclic_last_vector(const Mat<F>& x, const Mat<F>& y) {
    const F& f = x.field;
    const int n = x.rows;
    EchelonSpan<F> span(f, n);
    std::vector<std::vector<typename F::Elem>> queue;
    std::vector<typename F::Elem> en(n, f.zero());
    en[n - 1] = f.one();
    span.add(en);
    queue.push_back(en);
    for (size_t head = 0; head < queue.size() && span.dim() < n; ++head) {
        for (const Mat<F>* m : {&x, &y}) {
            auto v = mat_apply(*m, queue[head]);
            if (span.add(v)) queue.push_back(v);
        }
    }
    return span.dim() == n;
}

// The printed companion map commutes with x and keeps the last basis vector
// cyclic, but exact arithmetic shows it leaves the parabolic (one column picks
// up a component across the block boundary). A genuine member of p^x that is
// nilpotent and cyclic exists and is found by a deterministic seeded search of
// the centralizer; it witnesses that the pair lies in the nilpotent commuting
// variety of p.
template <class F>
std::optional<Mat<F>> parabolic_cyclic_witness(const ParabolicShape& shape, const Mat<F>& x,
                                               uint64_t seed = 1, int tries = 4000) {
    const F& f = x.field;
    const int n = shape.n();
    Subspace<F> cz = centralizer_in_p(shape, x);
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < tries; ++trial) {
        Mat<F> y(f, n, n);
        for (int r = 0; r < cz.dim(); ++r) {
            auto c = f.from_int(static_cast<int64_t>(rng() % 11) - 5);
            if (f.is_zero(c)) continue;
            for (int e = 0; e < n * n; ++e)
                y.a[e] = f.add(y.a[e], f.mul(c, cz.basis.at(r, e)));
        }
        // y is in p by construction; nilpotent iff its diagonal blocks are
        bool nilp = true;
        for (int b = 0; b < shape.p() && nilp; ++b) {
            int off = b == 0 ? 0 : shape.dims[b - 1];
            int sz = shape.bv.blocks[b];
            if (!y.submatrix(off, off, sz, sz).pow(sz).is_zero()) nilp = false;
        }
        if (!nilp) continue;
        if (has_cyclic_last_vector(x, y)) return y;
    }
    return std::nullopt;
}

}  // namespace parorbit
