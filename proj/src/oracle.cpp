#include "parorbit/oracle.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "parorbit/jordan.hpp"

namespace parorbit {

namespace {

struct UnionFind {
    std::vector<int64_t> parent;
    explicit UnionFind(size_t n) : parent(n, -1) {}
    int64_t find(int64_t a) {
        int64_t root = a;
        while (parent[root] >= 0) root = parent[root];
        while (parent[a] >= 0) {
            int64_t next = parent[a];
            parent[a] = root;
            a = next;
        }
        return root;
    }
    void unite(int64_t a, int64_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);  // keep the smaller index as root
        parent[a] += parent[b];
        parent[b] = a;
    }
};

// all x-nilpotent b x b matrices over F_q, as entry vectors (row-major).
// Collected as the GL_b(F_q)-closure of the x-nilpotent jordan matrices, which
// avoids scanning the whole matrix space.
std::vector<std::vector<uint8_t>> nilpotent_blocks(int b, uint32_t q, int x) {
    PrimeField f(q);
    auto encode = [&](const Mat<PrimeField>& m) {
        uint64_t code = 0;
        for (const auto& e : m.a) code = code * q + e;
        return code;
    };
    std::vector<Mat<PrimeField>> gens;
    if (q > 2) {
        auto g = f.primitive_root();
        for (int i = 0; i < b; ++i) {
            Mat<PrimeField> m = Mat<PrimeField>::identity(f, b);
            m.at(i, i) = g;
            gens.push_back(m);
        }
    }
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            if (i == j) continue;
            Mat<PrimeField> m = Mat<PrimeField>::identity(f, b);
            m.at(i, j) = 1;
            gens.push_back(m);
        }
    std::vector<Mat<PrimeField>> gens_inv;
    for (const auto& g : gens) {
        Mat<PrimeField> gi(f, 0, 0);
        invert(g, gi);
        gens_inv.push_back(gi);
    }

    std::unordered_set<uint64_t> seen;
    std::vector<Mat<PrimeField>> queue;
    std::function<void(int, int, std::vector<int>&)> parts = [&](int left, int maxp,
                                                                 std::vector<int>& cur) {
        if (left == 0) {
            Mat<PrimeField> j = jordan_matrix(f, cur);
            if (seen.insert(encode(j)).second) queue.push_back(j);
            return;
        }
        for (int p = std::min({left, maxp, x}); p >= 1; --p) {
            cur.push_back(p);
            parts(left - p, p, cur);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    parts(b, b, cur);
    for (size_t head = 0; head < queue.size(); ++head) {
        Mat<PrimeField> m = queue[head];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            Mat<PrimeField> c = gens[gi] * m * gens_inv[gi];
            if (seen.insert(encode(c)).second) queue.push_back(c);
        }
    }
    std::vector<std::vector<uint8_t>> out;
    out.reserve(queue.size());
    for (const auto& m : queue) {
        std::vector<uint8_t> e(m.a.size());
        for (size_t i = 0; i < m.a.size(); ++i) e[i] = static_cast<uint8_t>(m.a[i]);
        out.push_back(std::move(e));
    }
    return out;
}

struct FreePos {
    int row, col;
    bool diagonal_block;  // belongs to a diagonal block
};

// The direct-mode index space: diagonal blocks range over their x-nilpotent
// lists; above-block entries are free. The code is lexicographic in row-major
// matrix order so the minimal index in an orbit is the minimal matrix.
struct DirectIndex {
    const ParabolicShape& shape;
    uint32_t q;
    int x;
    OracleTarget target;
    int n;
    std::vector<FreePos> frees;                 // row-major free positions
    std::vector<std::vector<uint8_t>> blocks;   // per-block nilpotent lists (cone targets)
    bool filter_power;                          // cone_x with x < n requires a check

    DirectIndex(const ParabolicShape& s, uint32_t qq, OracleTarget t, int xx)
        : shape(s), q(qq), x(xx), target(t), n(s.n()), filter_power(false) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int bi = shape.block_of(i), bj = shape.block_of(j);
                if (bi == bj && target != OracleTarget::nilradical)
                    frees.push_back({i, j, true});
                else if (bi < bj)
                    frees.push_back({i, j, false});
            }
        filter_power = target == OracleTarget::cone_x && x < n;
    }

    double raw_count() const {
        double c = 1;
        for (size_t i = 0; i < frees.size(); ++i) c *= q;
        return c;
    }

    uint64_t encode(const Mat<PrimeField>& m) const {
        uint64_t code = 0;
        for (const auto& fp : frees) code = code * q + m.at(fp.row, fp.col);
        return code;
    }
    void decode(uint64_t code, Mat<PrimeField>& m) const {
        for (auto& e : m.a) e = 0;
        for (size_t i = frees.size(); i-- > 0;) {
            m.at(frees[i].row, frees[i].col) = code % q;
            code /= q;
        }
    }
};

std::vector<Mat<PrimeField>> group_generators(const ParabolicShape& shape, uint32_t q,
                                              OracleActing acting) {
    PrimeField f(q);
    int n = shape.n();
    std::vector<Mat<PrimeField>> gens;
    if (q > 2) {
        auto g = f.primitive_root();
        for (int i = 0; i < n; ++i) {
            Mat<PrimeField> m = Mat<PrimeField>::identity(f, n);
            m.at(i, i) = g;
            gens.push_back(m);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int bi = shape.block_of(i), bj = shape.block_of(j);
            bool ok = acting == OracleActing::P ? bi <= bj : bi == bj;
            if (!ok) continue;
            Mat<PrimeField> m = Mat<PrimeField>::identity(f, n);
            m.at(i, j) = 1;
            gens.push_back(m);
        }
    return gens;
}

OrbitTable enumerate_direct(const ParabolicShape& shape, uint32_t q, OracleTarget target,
                            OracleActing acting, int x, const OracleOptions& opt) {
    PrimeField f(q);
    const int n = shape.n();
    DirectIndex idx(shape, q, target, x);

    // enumerate the valid codes in increasing (lexicographic) order
    long long expect = -1;
    if (target != OracleTarget::cone_x) {
        expect = target_set_size(shape, q, target, x);
        if (expect > static_cast<long long>(opt.budget))
            throw BudgetExceeded("oracle: target set larger than the budget (" +
                                 std::to_string(expect) + " points)");
    }
    std::vector<uint64_t> codes;
    if (expect > 0) codes.reserve(static_cast<size_t>(expect));
    {
        // per-diagonal-block nilpotent lists, then the product with free
        // above-block entries by odometer
        std::vector<std::vector<std::vector<uint8_t>>> blocks;
        if (target != OracleTarget::nilradical)
            for (int b : shape.bv.blocks)
                blocks.push_back(nilpotent_blocks(b, q, target == OracleTarget::cone ? b : x));
        size_t above = 0;
        for (const auto& fp : idx.frees)
            if (!fp.diagonal_block) ++above;
        std::vector<size_t> bidx(blocks.size(), 0);
        std::vector<uint8_t> aentries(above, 0);
        Mat<PrimeField> m(f, n, n);
        while (true) {
            for (auto& e : m.a) e = 0;
            for (size_t b = 0; b < blocks.size(); ++b) {
                int off = b == 0 ? 0 : shape.dims[b - 1];
                int sz = shape.bv.blocks[b];
                const auto& ent = blocks[b][bidx[b]];
                for (int i = 0; i < sz; ++i)
                    for (int j = 0; j < sz; ++j) m.at(off + i, off + j) = ent[i * sz + j];
            }
            size_t a = 0;
            for (const auto& fp : idx.frees)
                if (!fp.diagonal_block) m.at(fp.row, fp.col) = aentries[a++];
            if (!idx.filter_power || m.pow(x).is_zero()) codes.push_back(idx.encode(m));
            // odometer: above entries fastest, then block indices
            size_t k = 0;
            while (k < above && ++aentries[k] == q) aentries[k++] = 0;
            if (k < above) continue;
            size_t b = 0;
            while (b < blocks.size() && ++bidx[b] == blocks[b].size()) bidx[b++] = 0;
            if (b == blocks.size() || blocks.empty()) break;
        }
        if (target == OracleTarget::nilradical && above == 0) {
            // the zero matrix alone; the odometer above already emitted it
        }
    }
    std::sort(codes.begin(), codes.end());
    if (expect >= 0 && static_cast<long long>(codes.size()) != expect)
        throw std::logic_error("oracle: enumerated size disagrees with the closed form");

    auto lookup = [&](uint64_t code) {
        auto it = std::lower_bound(codes.begin(), codes.end(), code);
        if (it == codes.end() || *it != code)
            throw std::logic_error("oracle: conjugate escaped the target set");
        return static_cast<int64_t>(it - codes.begin());
    };

    auto gens = group_generators(shape, q, acting);
    std::vector<Mat<PrimeField>> gens_inv;
    for (const auto& g : gens) {
        Mat<PrimeField> gi(f, 0, 0);
        invert(g, gi);
        gens_inv.push_back(gi);
    }

    UnionFind uf(codes.size());
    const size_t total = codes.size();
    const int threads = std::max(1, opt.threads);
    auto conj_edges = [&](size_t lo, size_t hi) {
        std::vector<std::pair<int64_t, int64_t>> edges;
        edges.reserve((hi - lo) * gens.size());
        Mat<PrimeField> m(f, n, n), tmp(f, n, n), c(f, n, n);
        const uint64_t p = f.p;
        auto mul_into = [&](const Mat<PrimeField>& a, const Mat<PrimeField>& b,
                            Mat<PrimeField>& out) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    uint64_t acc = 0;
                    for (int k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
                    out.at(i, j) = acc % p;
                }
        };
        for (size_t e = lo; e < hi; ++e) {
            idx.decode(codes[e], m);
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                mul_into(gens[gi], m, tmp);
                mul_into(tmp, gens_inv[gi], c);
                edges.emplace_back(static_cast<int64_t>(e), lookup(idx.encode(c)));
            }
        }
        return edges;
    };
    if (threads == 1 || total < 4096) {
        auto edges = conj_edges(0, total);
        for (auto [a, b] : edges) uf.unite(a, b);
    } else {
        std::vector<std::future<std::vector<std::pair<int64_t, int64_t>>>> futs;
        size_t chunk = (total + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            size_t lo = t * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, conj_edges, lo, hi));
        }
        for (auto& fu : futs)
            for (auto [a, b] : fu.get()) uf.unite(a, b);
    }

    // roots in increasing index order: the root is the lex-least element
    std::map<int64_t, long long> size_of_root;
    for (size_t e = 0; e < total; ++e) ++size_of_root[uf.find(static_cast<int64_t>(e))];

    OrbitTable out(shape, q, target, x, acting);
    out.mode = "direct";
    out.set_size = static_cast<long long>(total);
    for (const auto& [root, size] : size_of_root) {
        out.orbit_sizes.push_back(size);
        if (opt.want_representatives) {
            Mat<PrimeField> m(f, n, n);
            idx.decode(codes[static_cast<size_t>(root)], m);
            out.representatives.push_back(std::move(m));
        }
    }
    return out;
}

// -- stratified mode (p = 2, full cone, parabolic action) --------------------

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            go(left - p, p);
            cur.pop_back();
        }
    };
    go(n, n);
    return out;
}

// intertwiner chain_r -> chain_r' at depth offset d, as an n x n matrix acting
// on the Jordan basis of `type`
Mat<PrimeField> chain_map(PrimeField f, const std::vector<int>& type, int r, int r2, int d) {
    int n = std::accumulate(type.begin(), type.end(), 0);
    std::vector<int> off(type.size() + 1, 0);
    for (size_t i = 0; i < type.size(); ++i) off[i + 1] = off[i] + type[i];
    Mat<PrimeField> m(f, n, n);
    // module maps chain_r -> chain_r2 send the top to depth min(len_r, len_r2) - d
    // and commute with the shift; entries below depth 1 drop
    int minlen = std::min(type[r], type[r2]);
    for (int t = 1; t <= type[r]; ++t) {
        int t2 = t - type[r] + minlen - d;
        if (t2 < 1 || t2 > type[r2]) continue;
        m.at(off[r2] + t2 - 1, off[r] + t - 1) = 1;
    }
    return m;
}

// generators of the unit group of the centralizer of the Jordan matrix
std::vector<Mat<PrimeField>> centralizer_unit_generators(PrimeField f,
                                                         const std::vector<int>& type) {
    int n = std::accumulate(type.begin(), type.end(), 0);
    std::vector<Mat<PrimeField>> gens;
    int chains = static_cast<int>(type.size());
    std::vector<uint64_t> scalars;
    if (f.p > 2) scalars.push_back(f.primitive_root());
    for (int r = 0; r < chains; ++r) {
        // torus: scale one chain by a primitive root
        if (f.p > 2) {
            Mat<PrimeField> m = Mat<PrimeField>::identity(f, n);
            Mat<PrimeField> cm = chain_map(f, type, r, r, 0);
            for (size_t i = 0; i < m.a.size(); ++i)
                if (cm.a[i] == 1) m.a[i] = f.primitive_root();
            gens.push_back(m);
        }
        for (int r2 = 0; r2 < chains; ++r2) {
            int dmax = std::min(type[r], type[r2]);
            for (int d = 0; d < dmax; ++d) {
                if (r == r2 && d == 0) continue;
                Mat<PrimeField> psi = chain_map(f, type, r, r2, d);
                for (uint64_t c = 1; c < f.p; ++c) {
                    Mat<PrimeField> g = Mat<PrimeField>::identity(f, n);
                    for (size_t i = 0; i < g.a.size(); ++i)
                        g.a[i] = f.add(g.a[i], f.mul(c, psi.a[i]));
                    gens.push_back(g);
                }
            }
        }
    }
    return gens;
}

OrbitTable enumerate_stratified(const ParabolicShape& shape, uint32_t q,
                                const OracleOptions& opt) {
    PrimeField f(q);
    OrbitTable out(shape, q, OracleTarget::cone, shape.n(), OracleActing::P);
    out.mode = "stratified";
    const int p = shape.p();

    if (p == 1) {
        int n = shape.n();
        long long total = 0;
        for (const auto& type : partitions_of(n)) {
            long long orbit = gl_order(n, q) / nilpotent_centralizer_units(type, q);
            out.orbit_sizes.push_back(orbit);
            total += orbit;
            if (opt.want_representatives) out.representatives.push_back(jordan_matrix(f, type));
        }
        out.set_size = total;
        if (total != target_set_size(shape, q, OracleTarget::cone, n))
            throw std::logic_error("oracle: stratified p=1 mass check failed");
        return out;
    }

    const int b1 = shape.bv.blocks[0], b2 = shape.bv.blocks[1];
    long long total = 0;
    for (const auto& lam : partitions_of(b1))
        for (const auto& mu : partitions_of(b2)) {
            Mat<PrimeField> J1 = jordan_matrix(f, lam), J2 = jordan_matrix(f, mu);
            // translation space T = { X J2 - J1 X } as row vectors of length b1*b2
            Mat<PrimeField> tmap(f, b1 * b2, b1 * b2);
            for (int i = 0; i < b1; ++i)
                for (int j = 0; j < b2; ++j) {
                    int col = i * b2 + j;  // X entry (i, j)
                    // (X J2)_{i,l} = X_{i,k} (J2)_{k,l};  (J1 X)_{i,l}
                    for (int l = 0; l < b2; ++l)
                        tmap.at(i * b2 + l, col) = f.add(tmap.at(i * b2 + l, col), J2.at(j, l));
                    for (int i2 = 0; i2 < b1; ++i2)
                        tmap.at(i2 * b2 + j, col) =
                            f.sub(tmap.at(i2 * b2 + j, col), J1.at(i2, i));
                }
            // rows of the image, echelonized
            Mat<PrimeField> timg = tmap.transpose();
            std::vector<int> piv;
            rref_inplace(timg, &piv);
            int trank = static_cast<int>(piv.size());
            std::vector<bool> is_piv(b1 * b2, false);
            for (int c : piv) is_piv[c] = true;
            std::vector<int> comp;
            for (int c = 0; c < b1 * b2; ++c)
                if (!is_piv[c]) comp.push_back(c);
            int qdim = static_cast<int>(comp.size());
            double qsize = 1;
            for (int i = 0; i < qdim; ++i) qsize *= q;
            if (qsize > static_cast<double>(opt.budget))
                throw BudgetExceeded("oracle: stratified quotient over budget");
            uint64_t npoints = 1;
            for (int i = 0; i < qdim; ++i) npoints *= q;

            auto canon = [&](std::vector<uint64_t> v) {
                for (int r = 0; r < trank; ++r) {
                    uint64_t c = v[piv[r]];
                    if (c == 0) continue;
                    for (int j = 0; j < b1 * b2; ++j)
                        v[j] = f.sub(v[j], f.mul(c, timg.at(r, j)));
                }
                return v;
            };
            auto point_index = [&](const std::vector<uint64_t>& v) {
                uint64_t ix = 0;
                for (int i = 0; i < qdim; ++i) ix = ix * q + v[comp[i]];
                return ix;
            };
            auto index_point = [&](uint64_t ix) {
                std::vector<uint64_t> v(b1 * b2, 0);
                for (int i = qdim; i-- > 0;) {
                    v[comp[i]] = ix % q;
                    ix /= q;
                }
                return v;
            };

            // generators act by B -> canon(c1 B c2^{-1})
            auto g1 = centralizer_unit_generators(f, lam);
            auto g2 = centralizer_unit_generators(f, mu);
            struct Act {
                Mat<PrimeField> left, right;
            };
            std::vector<Act> acts;
            for (const auto& g : g1) acts.push_back({g, Mat<PrimeField>::identity(f, b2)});
            for (const auto& g : g2) {
                Mat<PrimeField> gi(f, 0, 0);
                invert(g, gi);
                acts.push_back({Mat<PrimeField>::identity(f, b1), gi});
            }

            UnionFind uf(npoints);
            Mat<PrimeField> B(f, b1, b2);
            for (uint64_t e = 0; e < npoints; ++e) {
                auto v = index_point(e);
                for (int i = 0; i < b1; ++i)
                    for (int j = 0; j < b2; ++j) B.at(i, j) = v[i * b2 + j];
                for (const auto& act : acts) {
                    Mat<PrimeField> c = act.left * B * act.right;
                    std::vector<uint64_t> w(b1 * b2);
                    for (int i = 0; i < b1; ++i)
                        for (int j = 0; j < b2; ++j) w[i * b2 + j] = c.at(i, j);
                    uf.unite(static_cast<int64_t>(e),
                             static_cast<int64_t>(point_index(canon(w))));
                }
            }
            std::map<int64_t, long long> size_of_root;
            for (uint64_t e = 0; e < npoints; ++e) ++size_of_root[uf.find(static_cast<int64_t>(e))];

            long long levi_orbit = (gl_order(b1, q) / nilpotent_centralizer_units(lam, q)) *
                                   (gl_order(b2, q) / nilpotent_centralizer_units(mu, q));
            long long tsize = 1;
            for (int i = 0; i < trank; ++i) tsize *= q;
            for (const auto& [root, cnt] : size_of_root) {
                out.orbit_sizes.push_back(levi_orbit * cnt * tsize);
                total += levi_orbit * cnt * tsize;
                if (opt.want_representatives) {
                    auto v = index_point(static_cast<uint64_t>(root));
                    Mat<PrimeField> rep(f, shape.n(), shape.n());
                    rep.paste(0, 0, J1);
                    rep.paste(b1, b1, J2);
                    for (int i = 0; i < b1; ++i)
                        for (int j = 0; j < b2; ++j) rep.at(i, b1 + j) = v[i * b2 + j];
                    out.representatives.push_back(std::move(rep));
                }
            }
        }
    out.set_size = total;
    if (total != target_set_size(shape, q, OracleTarget::cone, shape.n()))
        throw std::logic_error("oracle: stratified mass check failed");
    return out;
}

}  // namespace

long long gl_order(int m, uint32_t q) {
    long long qm = 1;
    for (int i = 0; i < m; ++i) qm *= q;
    long long out = 1, qt = 1;
    for (int t = 0; t < m; ++t) {
        out *= qm - qt;
        qt *= q;
    }
    return out;
}

long long nilpotent_centralizer_units(const std::vector<int>& type, uint32_t q) {
    // dim of the centralizer algebra: sum_{i,j} min(type_i, type_j)
    long long dim = 0;
    for (int a : type)
        for (int b : type) dim += std::min(a, b);
    // multiplicities of the part sizes give the reductive quotient
    std::map<int, int> mult;
    for (int a : type) ++mult[a];
    long long levi = 1, levi_dim = 0;
    for (const auto& [part, m] : mult) {
        levi *= gl_order(m, q);
        levi_dim += static_cast<long long>(m) * m;
    }
    long long rad = 1;
    for (long long i = 0; i < dim - levi_dim; ++i) rad *= q;
    return levi * rad;
}

long long target_set_size(const ParabolicShape& shape, uint32_t q, OracleTarget target, int x) {
    long long above = 0;
    const auto& b = shape.bv.blocks;
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j) above += static_cast<long long>(b[i]) * b[j];
    long long out = 1;
    for (long long i = 0; i < above; ++i) out *= q;
    if (target == OracleTarget::nilradical) return out;
    if (target == OracleTarget::cone) {
        for (int bi : b) {
            long long exp = static_cast<long long>(bi) * bi - bi;
            for (long long i = 0; i < exp; ++i) out *= q;
        }
        return out;
    }
    throw std::invalid_argument("target_set_size: no closed form for cone_x");
    (void)x;
}

OrbitTable enumerate_orbits(const ParabolicShape& shape, uint32_t q, OracleTarget target,
                            OracleActing acting, int x, OracleOptions opt) {
    if (x < 0) x = shape.n();
    if (target == OracleTarget::cone) x = shape.n();

    bool fits_direct = true;
    if (target == OracleTarget::cone_x) {
        // candidate superset before the power filter
        double cand = 1;
        for (int bi : shape.bv.blocks) {
            // x-nilpotent blocks are at most all nilpotent ones
            long long exp = static_cast<long long>(bi) * bi - bi;
            for (long long i = 0; i < exp; ++i) cand *= q;
        }
        const auto& b = shape.bv.blocks;
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j)
                for (int t = 0; t < b[i] * b[j]; ++t) cand *= q;
        fits_direct = cand <= static_cast<double>(opt.budget);
    } else {
        fits_direct =
            target_set_size(shape, q, target, x) <= static_cast<long long>(opt.budget);
    }
    if (fits_direct) return enumerate_direct(shape, q, target, acting, x, opt);
    if (shape.p() <= 2 && target == OracleTarget::cone && acting == OracleActing::P)
        return enumerate_stratified(shape, q, opt);
    throw BudgetExceeded("oracle: target set too large and no stratified mode applies");
}

GrowthProfile growth_profile(const ParabolicShape& shape, OracleTarget target,
                             OracleActing acting, const std::vector<uint32_t>& qs, int x,
                             OracleOptions opt) {
    GrowthProfile out;
    opt.want_representatives = false;
    for (uint32_t q : qs) {
        auto table = enumerate_orbits(shape, q, target, acting, x, opt);
        out.counts.emplace_back(q, table.orbit_count());
    }
    bool inc = true, eq = true;
    for (size_t i = 1; i < out.counts.size(); ++i) {
        if (out.counts[i].second <= out.counts[i - 1].second) inc = false;
        if (out.counts[i].second != out.counts[i - 1].second) eq = false;
    }
    out.signal = eq ? GrowthSignal::constant
                    : (inc ? GrowthSignal::strictly_increasing : GrowthSignal::mixed);
    return out;
}

}  // namespace parorbit
