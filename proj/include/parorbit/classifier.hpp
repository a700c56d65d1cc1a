#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parorbit/parabolic.hpp"

namespace parorbit {

// Decision data for the finiteness of the conjugation action on the nilpotent
// cone of an upper-block parabolic.
//
// The infinite side is decided by closure under three reductions:
//   (R1) degeneration:  a <=_c b and a infinite  =>  b infinite,
//   (R2) symmetry:      bv and reversed(bv) behave identically,
//   (R3) refinement:    merging adjacent blocks of bv gives a coarser vector
//                        whose infiniteness pulls back to bv.
// Any chain of R1-R3 from a minimal infinite pattern to bv normalizes to a
// single step: some minimal pattern (possibly reversed) embeds <=_c into a
// coarsening of bv by consecutive merges. That is what the witness records.
//
// The finite side is covered by the maximal finite families; a vector is
// finite iff it (or its reversal) embeds <=_c into one of them with the free
// slot large enough.

enum class Verdict { finite, infinite };

struct InfiniteWitness {
    std::vector<int> minimal_case;   // entry of the minimal infinite table
    bool reversed;                   // pattern matched against reversed(bv)
    std::vector<std::pair<int, int>> merges;  // consecutive [lo,hi] 0-based index
                                              // intervals of bv, one per pattern slot
    std::string family;              // named one-parameter family certifying the case
};

struct FiniteWitness {
    std::string family;          // e.g. "(5,k)", "(1,3,k,1)"
    std::vector<int> pattern;    // with the free slot as 0
    bool reversed;               // matched against reversed(bv)
    std::vector<int> embedding;  // 0-based indices into the pattern, one per block
    int k_value;                 // value taken by the free slot
};

struct FinitenessVerdict {
    Verdict verdict;
    std::optional<InfiniteWitness> infinite_witness;
    std::optional<FiniteWitness> finite_witness;
};

FinitenessVerdict classify_P_on_Np(const BlockVector& bv);

// Replays a witness against its block vector; used by tests and `--check`.
bool replay_witness(const BlockVector& bv, const FinitenessVerdict& v, std::string* why = nullptr);

// Levi actions.
enum class LeviTarget { nilradical, nilpotent_cone };
FinitenessVerdict classify_levi(const BlockVector& bv, LeviTarget target);

// Representation type of the path algebra with p vertices, loop nilpotency x.
Verdict classify_algebra_type(int p, int x);

// Dimension behaviour of the nilpotent commuting variety.
enum class CommutingDim { dim_p_minus_1, at_least_dim_p, unknown };
CommutingDim commuting_dichotomy(const BlockVector& bv);

// Dimension of the nested punctual Hilbert scheme for d = (k, n).
enum class HilbertDim { equals_n_minus_1, finite_case_n_minus_1, at_least_n };
HilbertDim hilbert_dim_report(int k, int n);

const std::vector<std::vector<int>>& minimal_infinite_cases();

// dim of the parabolic Lie algebra: sum over i<=j of b_i b_j
long long parabolic_dim(const BlockVector& bv);

}  // namespace parorbit
