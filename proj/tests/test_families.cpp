#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parorbit/families.hpp"

using namespace parorbit;

TEST_CASE("three-line nilradical family") {
    PrimeField f(7);
    FamilySpec spec{FamilyName::levi_nilr_111, 0, 0};
    auto m = build_family_member(spec, f, 3);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(0, 2) == 3);
    CHECK(m.at(1, 2) == 1);
    std::vector<PrimeField::Elem> all;
    for (uint64_t t = 0; t < 7; ++t) all.push_back(t);
    auto cert = certify_family(spec, f, all);
    CHECK(cert.pass);
    CHECK(levi_family_group_check(7, {0, 1, 2, 3, 4, 5, 6}));
}

TEST_CASE("levi cone family on (2,2)") {
    PrimeField f(5);
    FamilySpec spec{FamilyName::levi_cone_22, 0, 0};
    std::vector<PrimeField::Elem> all;
    for (uint64_t t = 0; t < 5; ++t) all.push_back(t);
    auto cert = certify_family(spec, f, all);
    CHECK_MESSAGE(cert.pass, [&] {
        std::string s;
        for (const auto& c : cert.checks)
            if (!c.pass) s += c.name + "; ";
        return s;
    }());
}

TEST_CASE("repeated parameters fail the certificate") {
    PrimeField f(5);
    auto cert = certify_family(FamilySpec{FamilyName::levi_nilr_111, 0, 0}, f, {1, 1});
    CHECK(!cert.pass);
}

TEST_CASE("covering families assemble, push down and certify") {
    PrimeField f5(5), f7(7);
    for (auto name : {FamilyName::d4_222, FamilyName::e6_66, FamilyName::e6_414,
                      FamilyName::e6_146, FamilyName::e6_1441, FamilyName::e6_1214,
                      FamilyName::e6_12121}) {
        FamilySpec spec{name, 0, 0};
        CAPTURE(spec.str());
        auto cert = certify_family(spec, f5, {1, 2, 3});
        std::string bad;
        for (const auto& c : cert.checks)
            if (!c.pass) bad += c.name + "; ";
        CHECK_MESSAGE(cert.pass, (spec.str() + ": " + bad));
    }
    // one family spot-checked on the second field
    CHECK(certify_family(FamilySpec{FamilyName::e6_66, 0, 0}, f7, {1, 2, 3}).pass);
}

TEST_CASE("extension family at (k, n) = (6, 12) and (7, 13)") {
    PrimeField f(5);
    CHECK(certify_family(FamilySpec{FamilyName::ext_kk, 6, 12}, f, {1, 2, 3}).pass);
    CHECK(certify_family(FamilySpec{FamilyName::ext_kk, 7, 13}, f, {1, 2, 3}).pass);
    CHECK_THROWS_AS(build_family_member(FamilySpec{FamilyName::ext_kk, 5, 12}, f, 1),
                    ParamOutOfRange);
}

TEST_CASE("d4 members at t = 0 and t = 1 stay in the cone") {
    PrimeField f(5);
    FamilySpec spec{FamilyName::d4_222, 0, 0};
    ParabolicShape shape(BlockVector{2, 2, 2});
    for (uint64_t t : {0, 1}) {
        auto m = build_family_member(spec, f, t);
        CHECK(in_nilpotent_cone(shape, m, 6));
    }
}

TEST_CASE("centralizer dimensions") {
    Rationals f;
    SUBCASE("centralizer of zero is all of p") {
        ParabolicShape shape(BlockVector{1, 2});
        Mat<Rationals> z(f, 3, 3);
        auto c = centralizer_in_p(shape, z);
        CHECK(c.dim() == 1 + 2 + 4);  // sum over i <= j of b_i b_j
    }
    SUBCASE("regular nilpotent centralizer is the polynomial algebra") {
        for (int n : {2, 3, 4}) {
            ParabolicShape shape(BlockVector{n});
            auto c = centralizer_in_p(shape, jordan_matrix(f, {n}));
            CHECK(c.dim() == n);
        }
    }
    SUBCASE("upper corner inside the borel of gl_2") {
        ParabolicShape shape(BlockVector{1, 1});
        Mat<Rationals> e12(f, 2, 2);
        e12.at(0, 1) = Rat(1);
        auto c = centralizer_in_p(shape, e12);
        CHECK(c.dim() == 2);  // identity and the corner itself
    }
}

TEST_CASE("distinguished tests") {
    Rationals f;
    SUBCASE("regular nilpotent is distinguished, zero is not") {
        for (auto bv : std::vector<BlockVector>{{2}, {3}, {1, 1}, {1, 2}}) {
            ParabolicShape shape(bv);
            int n = shape.n();
            auto reg = jordan_matrix(f, {n});
            auto res = is_distinguished(shape, reg);
            CHECK(res.distinguished);
            Mat<Rationals> z(f, n, n);
            if (n >= 2) CHECK(!is_distinguished(shape, z).distinguished);
        }
    }
    SUBCASE("upper corner in the borel of gl_2") {
        ParabolicShape shape(BlockVector{1, 1});
        Mat<Rationals> e12(f, 2, 2);
        e12.at(0, 1) = Rat(1);
        auto res = is_distinguished(shape, e12);
        CHECK(res.distinguished);
        CHECK(res.method == DistinguishedMethod::both);
    }
}

TEST_CASE("distinguished census hand counts") {
    CHECK(distinguished_census(ParabolicShape(BlockVector{2}), 2).distinguished_count == 1);
    CHECK(distinguished_census(ParabolicShape(BlockVector{1, 1}), 2).distinguished_count == 1);
    CHECK(distinguished_census(ParabolicShape(BlockVector{1}), 2).distinguished_count == 1);
    CHECK_THROWS_AS(distinguished_census(ParabolicShape(BlockVector{2, 2, 2}), 2),
                    InfiniteType);
}

TEST_CASE("commuting pair identities") {
    SUBCASE("symbolic in t over the rational function field") {
        RatFunField f;
        for (auto [n, k] : std::vector<std::pair<int, int>>{{12, 6}, {13, 6}, {13, 7}}) {
            auto pair = build_commuting_pair(n, k, f, f.t());
            Mat<RatFunField> comm = pair.x * pair.y - pair.y * pair.x;
            CHECK(comm.is_zero());
            ParabolicShape shape(BlockVector{k, n - k});
            CHECK(contains(shape, pair.x, BlockPattern::parabolic));
            CHECK(pair.x.pow(n).is_zero());
            CHECK(pair.y.pow(n).is_zero());
        }
    }
    SUBCASE("in-parabolic cyclic witness from the centralizer") {
        PrimeField f(101);
        for (auto [n, k] : std::vector<std::pair<int, int>>{{12, 6}, {13, 7}}) {
            auto pair = build_commuting_pair(n, k, f, 3);
            ParabolicShape shape(BlockVector{k, n - k});
            auto w = parabolic_cyclic_witness(shape, pair.x);
            REQUIRE(w.has_value());
            CHECK(contains(shape, *w, BlockPattern::parabolic));
            CHECK((pair.x * *w - *w * pair.x).is_zero());
            CHECK(w->pow(n).is_zero());
            CHECK(has_cyclic_last_vector(pair.x, *w));
        }
    }
    SUBCASE("sampled parameters over GF(101)") {
        PrimeField f(101);
        int cyclic = 0, dist = 0, total = 0;
        for (uint64_t t = 1; t <= 20; ++t) {
            CommutingPair<PrimeField> pair{Mat<PrimeField>(f, 0, 0), Mat<PrimeField>(f, 0, 0)};
            try {
                pair = build_commuting_pair(12, 6, f, t);
            } catch (const ParamOutOfRange&) {
                continue;
            }
            ++total;
            CHECK((pair.x * pair.y - pair.y * pair.x).is_zero());
            if (has_cyclic_last_vector(pair.x, pair.y)) ++cyclic;
            ParabolicShape shape(BlockVector{6, 6});
            auto rep = matrix_to_rep(shape, pair.x, 12);
            if (endomorphism_local(rep)) ++dist;
        }
        CHECK(total >= 18);
        CHECK(cyclic >= total - 2);
        CHECK(dist >= total - 2);
    }
}
