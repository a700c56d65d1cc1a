#include "parorbit/quiver.hpp"

namespace parorbit {

int QuiverPreset::num_vertices() const {
    return kind == Kind::covering ? n_rows * p : p;
}

int QuiverPreset::grid_vertex(int row, int col) const {
    if (kind != Kind::covering) throw std::logic_error("grid_vertex: not a covering preset");
    if (row < 1 || row > n_rows || col < 1 || col > p)
        throw IndexOutOfGrid("grid_vertex: (" + std::to_string(row) + "," + std::to_string(col) + ")");
    return (row - 1) * p + (col - 1);
}

int QuiverPreset::grid_horizontal(int row, int col) const {
    if (row < 1 || row > n_rows || col < 1 || col > p - 1)
        throw IndexOutOfGrid("grid_horizontal");
    return (row - 1) * (p - 1) + (col - 1);
}

int QuiverPreset::grid_vertical(int row, int col) const {
    if (row < 1 || row > n_rows - 1 || col < 1 || col > p)
        throw IndexOutOfGrid("grid_vertical");
    return n_rows * (p - 1) + (row - 1) * p + (col - 1);
}

std::string QuiverPreset::str() const {
    switch (kind) {
        case Kind::Qp:
            return "Qp(p=" + std::to_string(p) + ",x=" + std::to_string(x) + ")";
        case Kind::QLp_prime:
            return "QLp'(p=" + std::to_string(p) + ")";
        case Kind::QLp:
            return "QLp(p=" + std::to_string(p) + ",x=" + std::to_string(x) + ")";
        case Kind::covering:
            return "grid(p=" + std::to_string(p) + ",rows=" + std::to_string(n_rows) +
                   ",x=" + std::to_string(x) + ")";
    }
    return "?";
}

void QuiverPreset::build() const {
    if (built_) return;
    arrows_.clear();
    relations_.clear();
    switch (kind) {
        case Kind::Qp: {
            for (int i = 0; i + 1 < p; ++i)
                arrows_.push_back({i, i + 1, "a" + std::to_string(i + 1)});
            for (int i = 0; i < p; ++i)
                arrows_.push_back({i, i, "loop" + std::to_string(i + 1)});
            auto loop = [&](int i) { return p - 1 + i; };
            for (int i = 0; i < p; ++i)
                relations_.push_back({std::vector<int>(x, loop(i)), {}});
            for (int i = 0; i + 1 < p; ++i)
                relations_.push_back({{i, loop(i + 1)}, {loop(i), i}});
            break;
        }
        case Kind::QLp_prime: {
            for (int i = 0; i < p; ++i)
                for (int j = i + 1; j < p; ++j)
                    arrows_.push_back(
                        {i, j, "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1)});
            break;
        }
        case Kind::QLp: {
            for (int i = 0; i < p; ++i)
                for (int j = i + 1; j < p; ++j)
                    arrows_.push_back(
                        {i, j, "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1)});
            int first_loop = static_cast<int>(arrows_.size());
            for (int i = 0; i < p; ++i)
                arrows_.push_back({i, i, "loop" + std::to_string(i + 1)});
            for (int i = 0; i < p; ++i)
                relations_.push_back({std::vector<int>(x, first_loop + i), {}});
            break;
        }
        case Kind::covering: {
            for (int k = 1; k <= n_rows; ++k)
                for (int l = 1; l < p; ++l)
                    arrows_.push_back({(k - 1) * p + (l - 1), (k - 1) * p + l,
                                       "a" + std::to_string(k) + "_" + std::to_string(l)});
            for (int k = 1; k < n_rows; ++k)
                for (int l = 1; l <= p; ++l)
                    arrows_.push_back({(k - 1) * p + (l - 1), k * p + (l - 1),
                                       "b" + std::to_string(k) + "_" + std::to_string(l)});
            auto horiz = [&](int k, int l) { return (k - 1) * (p - 1) + (l - 1); };
            auto vert = [&](int k, int l) { return n_rows * (p - 1) + (k - 1) * p + (l - 1); };
            for (int k = 1; k < n_rows; ++k)
                for (int l = 1; l < p; ++l)
                    relations_.push_back({{horiz(k, l), vert(k, l + 1)}, {vert(k, l), horiz(k + 1, l)}});
            for (int l = 1; l <= p; ++l)
                for (int k = 1; k + x - 1 <= n_rows - 1; ++k) {
                    std::vector<int> path;
                    for (int s = 0; s < x; ++s) path.push_back(vert(k + s, l));
                    relations_.push_back({path, {}});
                }
            break;
        }
    }
    built_ = true;
}

const std::vector<QuiverPreset::Arrow>& QuiverPreset::arrows() const {
    build();
    return arrows_;
}

const std::vector<QuiverPreset::Relation>& QuiverPreset::relations() const {
    build();
    return relations_;
}

}  // namespace parorbit
