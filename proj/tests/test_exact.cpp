#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parorbit/jordan.hpp"
#include "parorbit/matrix.hpp"
#include "parorbit/mpoly.hpp"
#include "parorbit/polyq.hpp"
#include "parorbit/subspace.hpp"

using namespace parorbit;

TEST_CASE("bigint arithmetic") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("-987654321098765432109876543");
    CHECK((a + b).to_string() == "122469134691246913469124691347");
    CHECK((a * b).to_string() ==
          "-121932631137021795226185032707696997639644871231852004270");
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK((q * b + r) == a);
    CHECK(BigInt::gcd(BigInt(48), BigInt(-36)).to_string() == "12");
}

TEST_CASE("rationals stay reduced") {
    Rat x = Rat::from_string("6/4");
    CHECK(x.to_string() == "3/2");
    CHECK((x * Rat::from_string("2/3")).to_string() == "1");
    CHECK((Rat(1) / Rat(7) + Rat(6) / Rat(7)) == Rat(1));
}

TEST_CASE("rref over Q: idempotent, hand example") {
    Rationals f;
    // [[1,2],[2,4]] -> [[1,2],[0,0]], rank 1
    Mat<Rationals> m = Mat<Rationals>::from_ints(f, 2, 2, {1, 2, 2, 4});
    auto [r, rank1] = rref(m);
    CHECK(rank1 == 1);
    CHECK(r.at(0, 0) == Rat(1));
    CHECK(r.at(0, 1) == Rat(2));
    CHECK(r.at(1, 0) == Rat(0));
    CHECK(r.at(1, 1) == Rat(0));
    auto [r2, rank2] = rref(r);
    CHECK(r2 == r);
    CHECK(rank2 == 1);

    Mat<Rationals> id = Mat<Rationals>::identity(f, 3);
    CHECK(rref(id).second == 3);
    Mat<Rationals> z(f, 2, 4);
    CHECK(rref(z).second == 0);
}

TEST_CASE("kernel examples") {
    Rationals f;
    CHECK(kernel_basis(Mat<Rationals>::identity(f, 3)).rows == 0);
    CHECK(kernel_basis(Mat<Rationals>(f, 4, 4)).rows == 4);
    // J_3: kernel = span{e_1}
    Mat<Rationals> j3 = jordan_matrix(f, {3});
    Mat<Rationals> k = kernel_basis(j3);
    REQUIRE(k.rows == 1);
    CHECK(k.at(0, 0) == Rat(1));
    CHECK(k.at(0, 1) == Rat(0));
    CHECK(k.at(0, 2) == Rat(0));
}

TEST_CASE("rank-nullity on random matrices over GF(5) and Q") {
    PrimeField f5(5);
    Rationals fq;
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + static_cast<int>(rng() % 8), c = 1 + static_cast<int>(rng() % 8);
        Mat<PrimeField> m(f5, r, c);
        for (auto& x : m.a) x = rng() % 5;
        CHECK(rank(m) + kernel_basis(m).rows == c);
        Mat<Rationals> mq(fq, r, c);
        for (auto& x : mq.a) x = Rat(static_cast<int64_t>(rng() % 11) - 5);
        CHECK(rank(mq) + kernel_basis(mq).rows == c);
    }
}

TEST_CASE("nilpotent jordan basis") {
    Rationals f;
    SUBCASE("zero matrix") {
        Mat<Rationals> z(f, 3, 3);
        auto jb = nilpotent_jordan_basis(z);
        CHECK(jb.partition == std::vector<int>{1, 1, 1});
    }
    SUBCASE("regular nilpotent already in form") {
        Mat<Rationals> j4 = jordan_matrix(f, {4});
        auto jb = nilpotent_jordan_basis(j4);
        CHECK(jb.partition == std::vector<int>{4});
    }
    SUBCASE("rank-one square-zero gives (2,1)") {
        Mat<Rationals> m = Mat<Rationals>::from_ints(f, 3, 3, {0, 1, 1, 0, 0, 0, 0, 0, 0});
        auto jb = nilpotent_jordan_basis(m);
        CHECK(jb.partition == std::vector<int>{2, 1});
    }
    SUBCASE("not nilpotent throws") {
        Mat<Rationals> m = Mat<Rationals>::identity(f, 2);
        CHECK_THROWS_AS(nilpotent_jordan_basis(m), NotNilpotent);
    }
}

TEST_CASE("jordan round trip and conjugate-partition cross-check, random") {
    PrimeField f(5);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        // random nilpotent: conjugate of a random jordan matrix
        int n = 2 + static_cast<int>(rng() % 6);
        std::vector<int> part;
        int left = n;
        while (left > 0) {
            int p = 1 + static_cast<int>(rng() % left);
            part.push_back(p);
            left -= p;
        }
        std::sort(part.rbegin(), part.rend());
        Mat<PrimeField> base = jordan_matrix(f, part);
        Mat<PrimeField> g(f, n, n), gi(f, 0, 0);
        do {
            for (auto& x : g.a) x = rng() % 5;
        } while (!invert(g, gi));
        Mat<PrimeField> m = g * base * gi;

        auto jb = nilpotent_jordan_basis(m);
        CHECK(jb.partition == part);
        Mat<PrimeField> binv(f, 0, 0);
        REQUIRE(invert(jb.basis, binv));
        CHECK(binv * m * jb.basis == jordan_matrix(f, jb.partition));

        // partition = conjugate of the kernel-dimension increments
        std::vector<int> kdim{0};
        Mat<PrimeField> pw = Mat<PrimeField>::identity(f, n);
        for (int s = 1; s <= n; ++s) {
            pw = pw * m;
            kdim.push_back(kernel_basis(pw).rows);
        }
        for (int s = 1; s <= n; ++s) {
            int expect = 0;
            for (int p : part) expect += std::min(p, s);
            CHECK(kdim[s] == expect);
        }
    }
}

TEST_CASE("subspace algebra") {
    Rationals f;
    auto v1 = Mat<Rationals>::from_ints(f, 1, 3, {1, 0, 1});
    auto v2 = Mat<Rationals>::from_ints(f, 1, 3, {0, 1, 0});
    auto s = Subspace<Rationals>::span_rows(vstack(f, {v1, v2}, 3));
    CHECK(s.dim() == 2);
    CHECK(s.contains(Mat<Rationals>::from_ints(f, 1, 3, {2, 3, 2})));
    CHECK(!s.contains(Mat<Rationals>::from_ints(f, 1, 3, {1, 0, 0})));
    auto t = Subspace<Rationals>::span_rows(Mat<Rationals>::from_ints(f, 1, 3, {1, 1, 1}));
    CHECK(s.intersect(t).dim() == 1);  // (1,1,1) = (1,0,1) + (0,1,0)
    CHECK(s.sum(t) == s);
    auto u = Subspace<Rationals>::span_rows(Mat<Rationals>::from_ints(f, 1, 3, {1, 0, 0}));
    CHECK(s.intersect(u).dim() == 0);
    CHECK(s.sum(u).dim() == 3);
}

TEST_CASE("nilpotent subspace decision") {
    Rationals f;
    // strictly upper triangular 3x3: the full flag space, nilpotent
    Mat<Rationals> rows(f, 3, 9);
    rows.at(0, 0 * 3 + 1) = Rat(1);
    rows.at(1, 0 * 3 + 2) = Rat(1);
    rows.at(2, 1 * 3 + 2) = Rat(1);
    CHECK(is_nilpotent_subspace(Subspace<Rationals>::span_rows(rows), 3));

    // span{diag(1,-1)}: semisimple
    Mat<Rationals> d(f, 1, 4);
    d.at(0, 0) = Rat(1);
    d.at(0, 3) = Rat(-1);
    CHECK(!is_nilpotent_subspace(Subspace<Rationals>::span_rows(d), 2));

    // span{E12, E21}: E12+E21 has eigenvalues +-1
    Mat<Rationals> e(f, 2, 4);
    e.at(0, 1) = Rat(1);
    e.at(1, 2) = Rat(1);
    CHECK(!is_nilpotent_subspace(Subspace<Rationals>::span_rows(e), 2));
}

TEST_CASE("nilpotent subspace agrees with exhaustive membership over GF(2), GF(3)") {
    for (uint32_t q : {2u, 3u}) {
        PrimeField f(q);
        std::mt19937 rng(17 * q);
        for (int trial = 0; trial < 60; ++trial) {
            int n = 2 + static_cast<int>(rng() % 2);  // ambient n <= 3
            int d = 1 + static_cast<int>(rng() % 3);
            Mat<PrimeField> rows(f, d, n * n);
            for (auto& x : rows.a) x = rng() % q;
            auto s = Subspace<PrimeField>::span_rows(rows);
            bool formal = is_nilpotent_subspace(s, n);
            // enumerate all field points of the span
            bool all_nilp = true;
            int dim = s.dim();
            std::vector<uint64_t> coef(dim, 0);
            while (all_nilp) {
                Mat<PrimeField> m(f, n, n);
                for (int r = 0; r < dim; ++r)
                    for (int c = 0; c < n * n; ++c)
                        m.a[c] = f.add(m.a[c], f.mul(coef[r], s.basis.at(r, c)));
                if (!m.pow(n).is_zero()) all_nilp = false;
                int k = 0;
                while (k < dim && ++coef[k] == q) coef[k++] = 0;
                if (k == dim) break;
            }
            CHECK(formal == all_nilp);
        }
    }
}

TEST_CASE("rational function field matrices") {
    RatFunField f;
    Mat<RatFunField> m(f, 2, 2);
    m.at(0, 0) = f.t();
    m.at(0, 1) = f.one();
    m.at(1, 1) = f.t();
    Mat<RatFunField> inv(f, 0, 0);
    REQUIRE(invert(m, inv));
    CHECK(m * inv == Mat<RatFunField>::identity(f, 2));
}
