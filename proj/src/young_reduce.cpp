#include "parorbit/young_reduce.hpp"

#include <functional>

namespace parorbit {

// Formal enumeration of the {0,1} normal forms: every assignment of boxes to
// basis vectors satisfying the four normal-form clauses. The list is a finite
// superset of the genuine reduced diagrams (no validity filter), which is what
// the orbit-count comparisons need.
std::vector<FormalDiagram> enumerate_reduced(const std::vector<int>& lambda,
                                             const std::vector<int>& mu) {
    int l = 0;
    for (int m : mu) l += m;
    if (l > 5) throw MuTooLarge("enumerate_reduced: |mu| > 5");
    const int g = static_cast<int>(lambda.size());
    const int h = static_cast<int>(mu.size());
    const bool is32 = mu == std::vector<int>{3, 2};

    // per-row options: empty / one box (j, s) / special row (1, s1) + (j2, s2)
    // with j2 >= 2 / the (1,1) tuple at column 1 in the (3,2) case
    struct RowChoice {
        enum class Kind { empty, single, special_pair, ones } kind;
        int j = 0, s = 0, j2 = 0, s2 = 0;
    };
    std::vector<std::vector<RowChoice>> options(g);
    for (int i = 0; i < g; ++i) {
        options[i].push_back({RowChoice::Kind::empty, 0, 0, 0, 0});
        for (int j = 1; j <= lambda[i]; ++j)
            for (int s = 0; s < h; ++s)
                if (mu[s] >= j) options[i].push_back({RowChoice::Kind::single, j, s, 0, 0});
        for (int s1 = 0; s1 < h; ++s1)
            for (int j2 = 2; j2 <= lambda[i]; ++j2)
                for (int s2 = 0; s2 < h; ++s2)
                    if (mu[s2] >= j2)
                        options[i].push_back({RowChoice::Kind::special_pair, 1, s1, j2, s2});
        if (is32 && lambda[i] >= 1)
            options[i].push_back({RowChoice::Kind::ones, 1, 0, 0, 0});
    }

    std::vector<FormalDiagram> out;
    std::vector<RowChoice> chosen(g);
    // used[(j-2)*h + s] for columns j >= 2; column-1 bookkeeping separate
    int width = lambda.empty() ? 0 : lambda[0];
    std::vector<char> used(static_cast<size_t>(std::max(width, 1)) * h, 0);
    std::vector<char> used1(h, 0);
    bool have_special = false, have_ones = false;

    std::function<void(int)> walk = [&](int i) {
        if (i == g) {
            FormalDiagram d;
            d.shape = LabeledDiagramShape{lambda, mu};
            d.entries.resize(g);
            for (int r = 0; r < g; ++r) {
                d.entries[r].assign(lambda[r], -1);
                const RowChoice& c = chosen[r];
                switch (c.kind) {
                    case RowChoice::Kind::empty: break;
                    case RowChoice::Kind::single: d.entries[r][c.j - 1] = c.s; break;
                    case RowChoice::Kind::special_pair:
                        d.entries[r][0] = c.s;
                        d.entries[r][c.j2 - 1] = c.s2;
                        break;
                    case RowChoice::Kind::ones: d.entries[r][0] = -2; break;
                }
            }
            out.push_back(std::move(d));
            return;
        }
        for (const RowChoice& c : options[i]) {
            bool ok = true;
            bool marked_special = false, marked_ones = false;
            std::vector<int> marks;   // indices into `used`
            std::vector<int> marks1;  // indices into `used1`
            auto mark = [&](int j, int s) {
                if (j == 1) {
                    if (used1[s]) return false;
                    used1[s] = 1;
                    marks1.push_back(s);
                    return true;
                }
                int idx = (j - 2) * h + s;
                if (used[idx]) return false;
                used[idx] = 1;
                marks.push_back(idx);
                return true;
            };
            switch (c.kind) {
                case RowChoice::Kind::empty: break;
                case RowChoice::Kind::single: ok = mark(c.j, c.s); break;
                case RowChoice::Kind::special_pair:
                    // the special row's column-1 entry is exempt from the
                    // column-1 uniqueness clause
                    ok = !have_special && mark(c.j2, c.s2);
                    if (ok) have_special = marked_special = true;
                    break;
                case RowChoice::Kind::ones:
                    ok = !have_ones;
                    if (ok) have_ones = marked_ones = true;
                    break;
            }
            if (ok) {
                chosen[i] = c;
                walk(i + 1);
            }
            if (marked_special) have_special = false;
            if (marked_ones) have_ones = false;
            for (int idx : marks) used[idx] = 0;
            for (int s : marks1) used1[s] = 0;
        }
    };
    walk(0);
    return out;
}

}  // namespace parorbit
