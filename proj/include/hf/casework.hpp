#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hf/hvector.hpp"
#include "hf/macaulay.hpp"

namespace hf::casework {

/// Per-degree lower bounds for the Hilbert function of the auxiliary
/// Gorenstein ideal of socle degree 2d-4, plus the node-count cap.
struct BoundsProfile {
    int d = 0;
    HVector lower;          // degrees 0 .. 2d-4
    Int cap;                // 2(d-2)(d-1)
    Int lower_sum;          // 2(d^2 - 2d - 5)

    // Bound-chain values exposed for reporting: iterated lower-shadow steps.
    Int shadow_2d7;         // (2d-7)_{* d-4}, equals 2d-9
    Int shadow_2d6;         // (2d-6)_{* d},   equals 2d-7
};

BoundsProfile kloosterman_bounds(int d);  // requires d >= 6

/// All symmetric sequences of length 2d-3 with h_0 = 1, pointwise >= the
/// lower profile and sum <= cap, in lexicographic order.
std::vector<HVector> enumerate_exceptional(int d);

enum class Verdict { RejectedUnimodal, RejectedStanley, RejectedDegreeArgument, Survives };

std::string verdict_name(Verdict v);

/// Derived facts about one candidate h-vector (4 variables): per-degree
/// intervals for dim Bs|I_t| and for each d_k, plus the rule trace.
struct CaseState {
    HVector h;
    int d = 0;
    // Index t = 1 .. d-1; interval [dmin, dmax] for dim Bs|I_t| in {-1..3}.
    std::vector<int> dmin, dmax;
    // Intervals for d_k, k = 2, 1, 0, -1.
    struct Interval {
        int lo = 0;
        int hi = 0;
    };
    std::vector<Interval> dk;  // order d_2, d_1, d_0, d_{-1}
    std::vector<std::string> trace;
    bool contradiction = false;
};

/// Populates dim intervals from the sound rules R1-R5 (axiom at degree d-1,
/// plateau propagation, section-count arguments for a single linear
/// generator, monotonicity) and derives the d_k intervals.
CaseState derive_facts(const HVector& h, int d);

/// Enumerates candidate tuples d_2 <= d_1 <= d_0 <= d_{-1} within the
/// intervals; keeps those with sum >= (2d-4)+4, kills boundary tuples whose
/// complete-intersection Hilbert series contradicts h. Rejected iff none
/// survive.
struct DegreeArgument {
    Verdict verdict = Verdict::Survives;
    std::vector<std::vector<int>> surviving_tuples;
    std::vector<std::string> trace;
};
DegreeArgument degree_argument(const CaseState& state, int d);

/// Verdict for one vector inside the pipeline.
struct VectorReport {
    HVector h;
    Int sum;
    Verdict verdict;
    std::vector<std::string> trace;
};

/// Full mechanized branch for one degree: enumerate the exceptional vectors,
/// filter by unimodality, the Stanley criterion (inapplicable vectors pass
/// through) and the degree argument.
struct FilterReport {
    int d = 0;
    BoundsProfile bounds;
    std::vector<VectorReport> vectors;
    int survivors = 0;
    std::string conclusion;
    std::vector<std::string> cited_facts;  // non-mechanized inputs, stated as assumptions
};
FilterReport filter_pipeline(int d);

/// sum h_k: the node-count lower bound carried by an admissible h.
Int node_count_bound(const HVector& h);

}  // namespace hf::casework
