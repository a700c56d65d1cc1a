#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "parorbit/errors.hpp"
#include "parorbit/matrix.hpp"

namespace parorbit {

// Ordered block sizes (b_1,...,b_p) of a standard upper-block parabolic.
struct BlockVector {
    std::vector<int> blocks;

    BlockVector() = default;
    BlockVector(std::initializer_list<int> b) : blocks(b) { validate(); }
    explicit BlockVector(std::vector<int> b) : blocks(std::move(b)) { validate(); }

    void validate() const {
        if (blocks.empty()) throw std::invalid_argument("BlockVector: empty");
        for (int b : blocks)
            if (b < 1) throw std::invalid_argument("BlockVector: blocks must be positive");
    }

    int p() const { return static_cast<int>(blocks.size()); }
    int n() const { return std::accumulate(blocks.begin(), blocks.end(), 0); }

    BlockVector reversed() const {
        return BlockVector(std::vector<int>(blocks.rbegin(), blocks.rend()));
    }

    bool operator==(const BlockVector& o) const { return blocks == o.blocks; }
    bool operator<(const BlockVector& o) const { return blocks < o.blocks; }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < blocks.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(blocks[i]);
        }
        return s;
    }

    static BlockVector parse(const std::string& s) {
        std::vector<int> b;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            b.push_back(std::stoi(s.substr(pos, next - pos)));
            pos = next + 1;
        }
        return BlockVector(b);
    }
};

// Block vector plus the derived partial-sum dimension vector (d_1,...,d_p).
struct ParabolicShape {
    BlockVector bv;
    std::vector<int> dims;  // d_i = b_1 + ... + b_i

    explicit ParabolicShape(BlockVector b) : bv(std::move(b)) {
        int acc = 0;
        for (int x : bv.blocks) {
            acc += x;
            dims.push_back(acc);
        }
    }

    int n() const { return dims.back(); }
    int p() const { return bv.p(); }

    // 1-based block index of a 0-based matrix row/column
    int block_of(int idx) const {
        for (int i = 0; i < p(); ++i)
            if (idx < dims[i]) return i + 1;
        throw std::out_of_range("block_of: index outside matrix");
    }
};

inline ParabolicShape dims_of(const BlockVector& bv) { return ParabolicShape(bv); }

enum class BlockPattern { parabolic, nilradical, levi };

template <class F>
bool contains(const ParabolicShape& shape, const Mat<F>& m, BlockPattern which) {
    if (m.rows != shape.n() || m.cols != shape.n())
        throw SizeMismatch("contains: matrix size vs shape");
    const F& f = m.field;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            if (f.is_zero(m.at(i, j))) continue;
            int bi = shape.block_of(i), bj = shape.block_of(j);
            switch (which) {
                case BlockPattern::parabolic:
                    if (bi > bj) return false;
                    break;
                case BlockPattern::nilradical:
                    if (bi >= bj) return false;
                    break;
                case BlockPattern::levi:
                    if (bi != bj) return false;
                    break;
            }
        }
    return true;
}

template <class F>
bool in_nilpotent_cone(const ParabolicShape& shape, const Mat<F>& m, int x) {
    if (!contains(shape, m, BlockPattern::parabolic)) return false;
    return m.pow(x).is_zero();
}

inline BlockVector transpose_shape(const BlockVector& bv) { return bv.reversed(); }

// Anti-involution m -> w m^T w with w the antidiagonal permutation. Sends the
// parabolic of bv to the parabolic of reversed(bv).
template <class F>
Mat<F> transpose_element(const Mat<F>& m) {
    if (m.rows != m.cols) throw SizeMismatch("transpose_element: not square");
    int n = m.rows;
    Mat<F> r(m.field, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = m.at(n - 1 - j, n - 1 - i);
    return r;
}

// b <=_c b'  iff there is an increasing index sequence i_1 < ... < i_p with
// b_j <= b'_{i_j}. Decided greedily; see docs/leq_c.md for why greedy works.
inline bool leq_c(const BlockVector& a, const BlockVector& b) {
    size_t i = 0;
    for (int need : a.blocks) {
        while (i < b.blocks.size() && b.blocks[i] < need) ++i;
        if (i == b.blocks.size()) return false;
        ++i;
    }
    return true;
}

}  // namespace parorbit
