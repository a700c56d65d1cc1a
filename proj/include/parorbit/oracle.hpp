#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parorbit/matrix.hpp"
#include "parorbit/parabolic.hpp"

namespace parorbit {

// Brute-force orbit enumeration of the parabolic (or Levi) conjugation action
// on small finite fields. Two exact modes:
//
//   direct      the target set is materialized, indexed lexicographically and
//               partitioned by union-find under a generating set of the group
//               (one torus generator per diagonal position plus all admissible
//               transvections, which generate the rational-point group);
//
//   stratified  for two-block shapes acting on the full nilpotent cone, the
//               diagonal Jordan types are P-invariants; within a stratum the
//               above-diagonal block is acted on affinely, the translation part
//               is the image of X -> X J2 - J1 X, and the residual action of
//               the two centralizer-unit groups on the quotient is enumerated.
//               This turns billions of matrices into a few thousand points.
//
// Counts and orbit sizes are exact in both modes and cross-checked against
// the closed-form size of the target set.

enum class OracleTarget { cone, cone_x, nilradical };
enum class OracleActing { P, Levi };

struct OracleOptions {
    uint64_t budget = 1ull << 26;  // cap on enumerated points
    int threads = 1;
    bool want_representatives = true;
};

struct OrbitTable {
    ParabolicShape shape;
    uint32_t q;
    OracleTarget target;
    int x;  // nilpotency bound (cone_x); equals n otherwise
    OracleActing acting;
    std::string mode;
    long long set_size = 0;
    std::vector<long long> orbit_sizes;
    std::vector<Mat<PrimeField>> representatives;

    int orbit_count() const { return static_cast<int>(orbit_sizes.size()); }

    OrbitTable(ParabolicShape s, uint32_t qq, OracleTarget t, int xx, OracleActing a)
        : shape(std::move(s)), q(qq), target(t), x(xx), acting(a) {}
};

OrbitTable enumerate_orbits(const ParabolicShape& shape, uint32_t q, OracleTarget target,
                            OracleActing acting, int x = -1, OracleOptions opt = {});

// number of nilpotent (or x-nilpotent, or strictly-upper) matrices in p
long long target_set_size(const ParabolicShape& shape, uint32_t q, OracleTarget target, int x);

enum class GrowthSignal { constant, strictly_increasing, mixed };

struct GrowthProfile {
    std::vector<std::pair<uint32_t, long long>> counts;
    GrowthSignal signal;
};

GrowthProfile growth_profile(const ParabolicShape& shape, OracleTarget target,
                             OracleActing acting, const std::vector<uint32_t>& qs, int x = -1,
                             OracleOptions opt = {});

// |GL_m(F_q)| and the centralizer-unit count of a nilpotent Jordan type;
// exact in 64 bits at the sizes this library handles.
long long gl_order(int m, uint32_t q);
long long nilpotent_centralizer_units(const std::vector<int>& type, uint32_t q);

}  // namespace parorbit
