#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tiltkit/ageing.hpp"
#include "tiltkit/finite_pmf.hpp"
#include "tiltkit/lab/rng.hpp"
#include "tiltkit/orders.hpp"
#include "tiltkit/parametric.hpp"
#include "tiltkit/verdict.hpp"

namespace tiltkit::lab {

// A parametric hypothesis instance: the curve plus the window the property
// is asserted and re-checked on.
struct CurveInstance {
    ParametricSurvival curve;
    Window window;
};

// Uniform random exact pmf: support size in [1, max_support], integer
// weights in [0, max_denominator] normalized by their sum.  The last weight
// is kept positive so the support size is what was drawn.
FinitePmf random_pmf(SplitMix64& rng, int max_support, int max_denominator);

// Increasing-hazard pmf built directly from a sorted hazard sequence
// (constructive: the hypothesis holds by construction, no rejection).
FinitePmf random_increasing_hazard_pmf(SplitMix64& rng, int max_support, int max_denominator);

// A random exact pmf satisfying the given ageing property.  Uses rejection
// sampling (acceptance rates for the feasible properties are far above the
// retry budget) with the constructive builder as a fast path for ifr.
// Properties that only degenerate pmfs satisfy on a full finite support
// (dfr, dfra, nwu) are refused — use random_curve_with for those.
FinitePmf random_pmf_with(AgeingProperty p, SplitMix64& rng, int max_support, int max_denominator);

// True when the property has non-degenerate finite full-support instances.
bool finite_hypothesis_feasible(AgeingProperty p);

// A random parametric instance satisfying the given property on its window
// (used for the hypotheses that need an infinite tail: dfr, dfra, nwu; also
// supports ifr/nbu/ifra via the always-increasing-hazard families).
CurveInstance random_curve_with(AgeingProperty p, SplitMix64& rng);

// A random ordered pair (a <= b in the given relation), built constructively
// so the hypothesis is exact by design.
std::pair<FinitePmf, FinitePmf> random_pair_with(OrderRelation rel, SplitMix64& rng, int max_support,
                                                 int max_denominator);

// Deterministic stream of every exact pmf whose integer weights form a
// composition: total weight D = 1..max_total split into n = 1..max_support
// parts with a positive last part, ordered by (D, n, lexicographic parts).
class PmfEnumerator {
public:
    PmfEnumerator(int max_support, int max_total);

    std::optional<FinitePmf> next();

private:
    bool advance_parts();

    int max_support_;
    int max_total_;
    int total_;
    int parts_;
    std::vector<int> current_;
    bool fresh_shape_ = true;
    bool done_ = false;
};

// Materialized enumeration (convenience for pair scans).
std::vector<FinitePmf> enumerate_pmfs(int max_support, int max_total);

}  // namespace tiltkit::lab
