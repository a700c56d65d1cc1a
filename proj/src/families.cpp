#include "parorbit/families.hpp"

#include <map>

namespace parorbit {

BlockVector FamilySpec::bv() const {
    switch (name) {
        case FamilyName::levi_nilr_111: return BlockVector{1, 1, 1};
        case FamilyName::levi_cone_22: return BlockVector{2, 2};
        case FamilyName::d4_222: return BlockVector{2, 2, 2};
        case FamilyName::e6_66: return BlockVector{6, 6};
        case FamilyName::e6_414: return BlockVector{4, 1, 4};
        case FamilyName::e6_146: return BlockVector{1, 4, 6};
        case FamilyName::e6_1441: return BlockVector{1, 4, 4, 1};
        case FamilyName::e6_1214: return BlockVector{1, 2, 1, 4};
        case FamilyName::e6_12121: return BlockVector{1, 2, 1, 2, 1};
        case FamilyName::ext_kk:
        case FamilyName::commuting_pair: return BlockVector{k, n - k};
    }
    throw std::logic_error("FamilySpec::bv");
}

std::string FamilySpec::str() const {
    switch (name) {
        case FamilyName::levi_nilr_111: return "levi_nilr_111";
        case FamilyName::levi_cone_22: return "levi_cone_22";
        case FamilyName::d4_222: return "d4_222";
        case FamilyName::e6_66: return "e6_66";
        case FamilyName::e6_414: return "e6_414";
        case FamilyName::e6_146: return "e6_146";
        case FamilyName::e6_1441: return "e6_1441";
        case FamilyName::e6_1214: return "e6_1214";
        case FamilyName::e6_12121: return "e6_12121";
        case FamilyName::ext_kk:
            return "ext_kk(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
        case FamilyName::commuting_pair:
            return "commuting_pair(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
    }
    return "?";
}

FamilySpec FamilySpec::parse(const std::string& name, int k, int n) {
    static const std::map<std::string, FamilyName> names = {
        {"levi_nilr_111", FamilyName::levi_nilr_111},
        {"levi_cone_22", FamilyName::levi_cone_22},
        {"d4_222", FamilyName::d4_222},
        {"e6_66", FamilyName::e6_66},
        {"e6_414", FamilyName::e6_414},
        {"e6_146", FamilyName::e6_146},
        {"e6_1441", FamilyName::e6_1441},
        {"e6_1214", FamilyName::e6_1214},
        {"e6_12121", FamilyName::e6_12121},
        {"ext_kk", FamilyName::ext_kk},
        {"commuting_pair", FamilyName::commuting_pair},
    };
    auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("unknown family: " + name);
    return {it->second, k, n};
}

namespace {

FamilyGrid make_d4_222() {
    FamilyGrid g;
    g.p = 3;
    g.rows = 4;
    g.dims = {{0, 0, 1}, {0, 1, 2}, {1, 2, 2}, {1, 1, 1}};
    g.maps = {
        {3, 1, true, "w_a"}, {3, 2, true, "id2"}, {4, 1, true, "id1"}, {4, 2, true, "id1"},
        {2, 2, true, "w_b"},
        {1, 3, false, "w_d"}, {2, 3, false, "id2"}, {3, 3, false, "w_c"},
        {2, 2, false, "w_b"}, {3, 2, false, "w_c"}, {3, 1, false, "w_ca"},
    };
    return g;
}

FamilyGrid make_e6_66() {
    FamilyGrid g;
    g.p = 2;
    g.rows = 6;
    g.dims = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 2}, {1, 1}};
    g.maps = {
        {1, 2, false, "c"}, {2, 2, false, "d"}, {3, 2, false, "id3"}, {4, 2, false, "f"},
        {5, 2, false, "e"},
        {3, 1, false, "a"}, {4, 1, false, "fb"}, {5, 1, false, "e"},
        {3, 1, true, "ba"}, {4, 1, true, "b"}, {5, 1, true, "id2"}, {6, 1, true, "id1"},
    };
    return g;
}

FamilyGrid make_e6_414() {
    FamilyGrid g;
    g.p = 3;
    g.rows = 5;
    g.dims = {{0, 0, 1}, {0, 0, 2}, {1, 2, 3}, {2, 2, 2}, {1, 1, 1}};
    g.maps = {
        {3, 1, true, "a"},  {3, 2, true, "b"},  {4, 1, true, "id2"}, {4, 2, true, "id2"},
        {5, 1, true, "id1"}, {5, 2, true, "id1"},
        {1, 3, false, "c"}, {2, 3, false, "d"}, {3, 3, false, "f"},  {4, 3, false, "e"},
        {3, 2, false, "fb"}, {4, 2, false, "e"}, {3, 1, false, "fba"}, {4, 1, false, "e"},
    };
    return g;
}

FamilyGrid make_e6_146() {
    FamilyGrid g;
    g.p = 3;
    g.rows = 5;
    g.dims = {{0, 0, 1}, {0, 0, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 2}};
    g.maps = {
        {3, 2, true, "ba"}, {4, 2, true, "b"}, {5, 1, true, "e_in"}, {5, 2, true, "id2"},
        {1, 3, false, "c"}, {2, 3, false, "d"}, {3, 3, false, "id3"}, {4, 3, false, "f"},
        {3, 2, false, "a"}, {4, 2, false, "fb"},
    };
    return g;
}

FamilyGrid make_e6_1441() {
    FamilyGrid g;
    g.p = 4;
    g.rows = 4;
    g.dims = {{0, 0, 1, 2}, {0, 1, 3, 3}, {0, 2, 3, 3}, {1, 2, 2, 2}};
    g.maps = {
        {1, 3, true, "c"},
        {2, 2, true, "ba"}, {2, 3, true, "id3"},
        {3, 2, true, "b"},  {3, 3, true, "id3"},
        {4, 1, true, "e_in"},  {4, 2, true, "id2"}, {4, 3, true, "id2"},
        {1, 4, false, "d"}, {2, 4, false, "id3"}, {3, 4, false, "f"},
        {1, 3, false, "dc"}, {2, 3, false, "id3"}, {3, 3, false, "f"},
        {2, 2, false, "a"}, {3, 2, false, "fb"},
    };
    return g;
}

FamilyGrid make_e6_1214() {
    FamilyGrid g;
    g.p = 4;
    g.rows = 4;
    g.dims = {{0, 0, 0, 1}, {0, 0, 0, 2}, {0, 1, 2, 3}, {1, 2, 2, 2}};
    g.maps = {
        {3, 2, true, "a"}, {3, 3, true, "b"},
        {4, 1, true, "e_in"}, {4, 2, true, "id2"}, {4, 3, true, "id2"},
        {1, 4, false, "c"}, {2, 4, false, "d"}, {3, 4, false, "f"},
        {3, 3, false, "fb"}, {3, 2, false, "fba"},
    };
    return g;
}

FamilyGrid make_e6_12121() {
    FamilyGrid g;
    g.p = 5;
    g.rows = 3;
    g.dims = {{0, 0, 0, 1, 2}, {0, 1, 2, 3, 3}, {1, 2, 2, 2, 2}};
    g.maps = {
        {1, 4, true, "c"},
        {2, 2, true, "a"}, {2, 3, true, "b"}, {2, 4, true, "id3"},
        {3, 1, true, "e_in"}, {3, 2, true, "id2"}, {3, 3, true, "id2"}, {3, 4, true, "id2"},
        {1, 5, false, "d"}, {2, 5, false, "f"},
        {1, 4, false, "dc"}, {2, 4, false, "f"},
        {2, 3, false, "fb"}, {2, 2, false, "fba"},
    };
    return g;
}

FamilyGrid make_ext_kk(int k, int n) {
    if (k < 6 || n - k < 6) throw ParamOutOfRange("ext_kk needs k >= 6 and n - k >= 6");
    int top = n - k - 6, bottom = k - 6;
    FamilyGrid g;
    g.p = 2;
    g.rows = top + 6 + bottom;
    for (int r = 0; r < top; ++r) g.dims.push_back({0, 1});
    for (auto row : {std::vector<int>{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 2}, {1, 1}})
        g.dims.push_back(row);
    for (int r = 0; r < bottom; ++r) g.dims.push_back({1, 1});
    for (int r = 1; r <= top; ++r) g.maps.push_back({r, 2, false, "id1"});
    int o = top;  // row offset of the core block
    g.maps.push_back({o + 1, 2, false, "c"});
    g.maps.push_back({o + 2, 2, false, "d"});
    g.maps.push_back({o + 3, 2, false, "id3"});
    g.maps.push_back({o + 4, 2, false, "f"});
    g.maps.push_back({o + 5, 2, false, "e"});
    g.maps.push_back({o + 3, 1, false, "a"});
    g.maps.push_back({o + 4, 1, false, "fb"});
    g.maps.push_back({o + 5, 1, false, "e"});
    g.maps.push_back({o + 3, 1, true, "ba"});
    g.maps.push_back({o + 4, 1, true, "b"});
    g.maps.push_back({o + 5, 1, true, "id2"});
    g.maps.push_back({o + 6, 1, true, "id1"});
    for (int r = o + 6; r < o + 6 + bottom; ++r) {
        g.maps.push_back({r, 1, false, "id1"});
        g.maps.push_back({r, 2, false, "id1"});
        g.maps.push_back({r + 1, 1, true, "id1"});
    }
    return g;
}

}  // namespace

const FamilyGrid& family_grid(FamilyName name, int k, int n) {
    static const FamilyGrid d4 = make_d4_222();
    static const FamilyGrid e66 = make_e6_66();
    static const FamilyGrid e414 = make_e6_414();
    static const FamilyGrid e146 = make_e6_146();
    static const FamilyGrid e1441 = make_e6_1441();
    static const FamilyGrid e1214 = make_e6_1214();
    static const FamilyGrid e12121 = make_e6_12121();
    static std::map<std::pair<int, int>, FamilyGrid> ext_cache;
    switch (name) {
        case FamilyName::d4_222: return d4;
        case FamilyName::e6_66: return e66;
        case FamilyName::e6_414: return e414;
        case FamilyName::e6_146: return e146;
        case FamilyName::e6_1441: return e1441;
        case FamilyName::e6_1214: return e1214;
        case FamilyName::e6_12121: return e12121;
        case FamilyName::ext_kk: {
            auto key = std::make_pair(k, n);
            auto it = ext_cache.find(key);
            if (it == ext_cache.end()) it = ext_cache.emplace(key, make_ext_kk(k, n)).first;
            return it->second;
        }
        default:
            throw std::invalid_argument("family_grid: family has no covering layout");
    }
}

// exhaustive conjugacy over the full Levi torus: the three-line family
bool levi_family_group_check(uint32_t q, const std::vector<uint64_t>& sample) {
    PrimeField f(q);
    FamilySpec spec{FamilyName::levi_nilr_111, 0, 0};
    std::vector<Mat<PrimeField>> members;
    for (auto t : sample) members.push_back(build_family_member(spec, f, t % q));
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            for (uint64_t a = 1; a < q; ++a)
                for (uint64_t b = 1; b < q; ++b)
                    for (uint64_t c = 1; c < q; ++c) {
                        Mat<PrimeField> g(f, 3, 3), gi(f, 3, 3);
                        g.at(0, 0) = a;
                        g.at(1, 1) = b;
                        g.at(2, 2) = c;
                        gi.at(0, 0) = f.inv(a);
                        gi.at(1, 1) = f.inv(b);
                        gi.at(2, 2) = f.inv(c);
                        if (g * members[i] * gi == members[j]) return false;
                    }
        }
    return true;
}

CensusResult distinguished_census(const ParabolicShape& shape, uint32_t q, OracleOptions opt) {
    if (classify_P_on_Np(shape.bv).verdict != Verdict::finite)
        throw InfiniteType("distinguished_census: the action has infinitely many orbits");
    auto table = enumerate_orbits(shape, q, OracleTarget::cone, OracleActing::P, -1, opt);
    CensusResult out{table.orbit_count(), 0, {}};
    Rationals fq;
    for (const auto& rep : table.representatives) {
        // lift entries to integers in [0, q); re-verify membership over Q
        Mat<Rationals> lifted(fq, rep.rows, rep.cols);
        for (size_t i = 0; i < rep.a.size(); ++i)
            lifted.a[i] = Rat(static_cast<int64_t>(rep.a[i]));
        if (!in_nilpotent_cone(shape, lifted, shape.n()))
            throw std::logic_error("census: lifted representative escaped the cone");
        auto res = is_distinguished(shape, lifted);
        if (res.distinguished) {
            ++out.distinguished_count;
            out.representatives.push_back(std::move(lifted));
        }
    }
    return out;
}

}  // namespace parorbit
