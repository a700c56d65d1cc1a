#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "parorbit/classifier.hpp"
using namespace parorbit;

TEST_CASE("headline classifications") {
    CHECK(classify_P_on_Np(BlockVector{2, 2, 2}).verdict == Verdict::infinite);
    CHECK(classify_P_on_Np(BlockVector{5, 17}).verdict == Verdict::finite);
    CHECK(classify_P_on_Np(BlockVector{5, 17}).finite_witness->family == "(5,k)");
    CHECK(classify_P_on_Np(BlockVector{6, 6}).verdict == Verdict::infinite);
    CHECK(classify_P_on_Np(BlockVector{1, 1, 1, 1, 1}).verdict == Verdict::finite);
    CHECK(classify_P_on_Np(BlockVector{1, 1, 1, 1, 1, 1}).verdict == Verdict::infinite);
    CHECK(classify_P_on_Np(BlockVector{7}).verdict == Verdict::finite);
    CHECK(classify_P_on_Np(BlockVector{2, 3, 2}).verdict == Verdict::infinite);
    CHECK(classify_P_on_Np(BlockVector{4, 1, 4}).verdict == Verdict::infinite);
    CHECK(classify_P_on_Np(BlockVector{4, 1, 3}).verdict == Verdict::finite);
}

static std::vector<BlockVector> compositions(int n) {
    std::vector<BlockVector> out;
    for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> b;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) { b.push_back(run); run = 1; }
            else ++run;
        }
        b.push_back(run);
        out.push_back(BlockVector(b));
    }
    return out;
}

TEST_CASE("symmetry and monotonicity, exhaustive") {
    std::vector<BlockVector> all;
    for (int n = 1; n <= 8; ++n)
        for (auto& bv : compositions(n)) all.push_back(bv);
    for (const auto& bv : all) {
        auto v = classify_P_on_Np(bv);
        CHECK(classify_P_on_Np(bv.reversed()).verdict == v.verdict);
        std::string why;
        CHECK_MESSAGE(replay_witness(bv, v, &why), why);
    }
    // <=_c monotonicity of infiniteness for all pairs with n <= 8
    for (const auto& a : all)
        for (const auto& b : all)
            if (leq_c(a, b) && classify_P_on_Np(a).verdict == Verdict::infinite)
                CHECK(classify_P_on_Np(b).verdict == Verdict::infinite);
}

TEST_CASE("levi classifications") {
    CHECK(classify_levi(BlockVector{3, 4}, LeviTarget::nilradical).verdict == Verdict::finite);
    auto v = classify_levi(BlockVector{1, 1, 1}, LeviTarget::nilradical);
    CHECK(v.verdict == Verdict::infinite);
    CHECK(v.infinite_witness->family == "levi_nilr_111");
    CHECK(classify_levi(BlockVector{2, 2}, LeviTarget::nilpotent_cone).verdict ==
          Verdict::infinite);
    CHECK(classify_levi(BlockVector{1, 6}, LeviTarget::nilpotent_cone).verdict ==
          Verdict::finite);
    CHECK(classify_levi(BlockVector{7}, LeviTarget::nilpotent_cone).verdict == Verdict::finite);
}

TEST_CASE("algebra representation type lookup") {
    CHECK(classify_algebra_type(1, 99) == Verdict::finite);
    CHECK(classify_algebra_type(3, 2) == Verdict::finite);
    CHECK(classify_algebra_type(2, 2) == Verdict::finite);
    CHECK(classify_algebra_type(2, 3) == Verdict::finite);
    CHECK(classify_algebra_type(99, 1) == Verdict::finite);
    CHECK(classify_algebra_type(4, 2) == Verdict::infinite);
    CHECK(classify_algebra_type(2, 4) == Verdict::infinite);
    CHECK(classify_algebra_type(3, 3) == Verdict::infinite);
}

TEST_CASE("commuting dichotomy") {
    CHECK(commuting_dichotomy(BlockVector{5, 9}) == CommutingDim::dim_p_minus_1);
    CHECK(commuting_dichotomy(BlockVector{6, 7}) == CommutingDim::at_least_dim_p);
    CHECK(commuting_dichotomy(BlockVector{2, 3, 2}) == CommutingDim::unknown);
    CHECK(commuting_dichotomy(BlockVector{2, 2, 2}) == CommutingDim::at_least_dim_p);
    CHECK(commuting_dichotomy(BlockVector{1, 1, 1}) == CommutingDim::dim_p_minus_1);
}

TEST_CASE("hilbert scheme dimension report") {
    CHECK(hilbert_dim_report(2, 10) == HilbertDim::equals_n_minus_1);
    CHECK(hilbert_dim_report(6, 12) == HilbertDim::at_least_n);
    CHECK(hilbert_dim_report(5, 11) == HilbertDim::finite_case_n_minus_1);
    CHECK(hilbert_dim_report(7, 13) == HilbertDim::at_least_n);
    CHECK(hilbert_dim_report(11, 13) == HilbertDim::equals_n_minus_1);
}

TEST_CASE("partition of cases: finite families and infinite closure are exclusive") {
    for (int n = 1; n <= 10; ++n)
        for (auto& bv : compositions(n)) {
            auto v = classify_P_on_Np(bv);  // throws if neither side covers
            if (v.verdict == Verdict::finite) CHECK(v.finite_witness.has_value());
            else CHECK(v.infinite_witness.has_value());
        }
}
